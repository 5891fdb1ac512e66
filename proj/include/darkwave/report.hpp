#pragma once

#include <string>
#include <vector>

#include "darkwave/rase_run.hpp"
#include "darkwave/rose_run.hpp"

namespace darkwave {

// One analytic-vs-simulated comparison row.
struct CompareRow {
    std::string quantity;
    double analytic = 0.0;
    bool has_sim = false;
    double simulated = 0.0;
    double tolerance = 0.0;  // relative
    bool pass = true;

    static CompareRow checked(std::string name, double analytic, double simulated,
                              double rel_tol, double abs_floor = 0.0);
    static CompareRow analytic_only(std::string name, double analytic);
    double deviation() const;
};

struct ProtocolReport {
    std::string scenario_name;
    std::string protocol;
    uint64_t scenario_hash = 0;
    std::vector<CompareRow> rows;
    std::vector<std::string> warnings;
    double wall_seconds = 0.0;

    bool all_pass() const;
    std::string to_json() const;
    std::string compare_table() const;  // fixed-width text table
};

ProtocolReport report_from_rose(const RoseRunResult& r, const std::string& name,
                                uint64_t hash, double tol_eta, double tol_noise);
ProtocolReport report_from_rase(const RaseRunResult& r, const std::string& name,
                                uint64_t hash, double tol_rmin);

void write_text_file(const std::string& path, const std::string& content);

// CSV with a fixed header line; columns run in lockstep.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

}  // namespace darkwave
