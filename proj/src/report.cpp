#include "darkwave/report.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace darkwave {

CompareRow CompareRow::checked(std::string name, double analytic, double simulated,
                               double rel_tol, double abs_floor) {
    CompareRow r;
    r.quantity = std::move(name);
    r.analytic = analytic;
    r.simulated = simulated;
    r.has_sim = true;
    r.tolerance = rel_tol;
    const double dev = std::abs(simulated - analytic);
    r.pass = dev <= rel_tol * std::abs(analytic) + abs_floor;
    return r;
}

CompareRow CompareRow::analytic_only(std::string name, double analytic) {
    CompareRow r;
    r.quantity = std::move(name);
    r.analytic = analytic;
    r.has_sim = false;
    return r;
}

double CompareRow::deviation() const {
    if (!has_sim) return 0.0;
    const double scale = std::max(std::abs(analytic), 1e-300);
    return std::abs(simulated - analytic) / scale;
}

bool ProtocolReport::all_pass() const {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

std::string ProtocolReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "darkwave-report-v1";
    j["scenario"] = scenario_name;
    j["protocol"] = protocol;
    std::ostringstream hx;
    hx << std::hex << scenario_hash;
    j["scenario_hash"] = hx.str();
    j["wall_seconds"] = wall_seconds;
    j["warnings"] = warnings;
    j["pass"] = all_pass();
    auto& arr = j["compare"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json e;
        e["quantity"] = r.quantity;
        e["analytic"] = r.analytic;
        if (r.has_sim) {
            e["simulated"] = r.simulated;
            e["relative_deviation"] = r.deviation();
            e["tolerance"] = r.tolerance;
            e["verdict"] = r.pass ? "pass" : "fail";
        } else {
            e["verdict"] = "analytic-only";
        }
        arr.push_back(e);
    }
    return j.dump(2);
}

std::string ProtocolReport::compare_table() const {
    std::ostringstream out;
    out << std::left << std::setw(28) << "quantity" << std::right << std::setw(14)
        << "analytic" << std::setw(14) << "simulated" << std::setw(10) << "dev"
        << std::setw(8) << "tol" << "  verdict\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(28) << r.quantity << std::right
            << std::setw(14) << std::scientific << std::setprecision(4)
            << r.analytic;
        if (r.has_sim) {
            out << std::setw(14) << r.simulated << std::setw(9) << std::fixed
                << std::setprecision(3) << 100.0 * r.deviation() << "%"
                << std::setw(7) << 100.0 * r.tolerance << "%"
                << (r.pass ? "  pass" : "  FAIL");
        } else {
            out << std::setw(14) << "-" << std::setw(10) << "-" << std::setw(8)
                << "-" << "  analytic-only";
        }
        out << "\n";
    }
    return out.str();
}

ProtocolReport report_from_rose(const RoseRunResult& r, const std::string& name,
                                uint64_t hash, double tol_eta, double tol_noise) {
    ProtocolReport rep;
    rep.scenario_name = name;
    rep.protocol = "rose";
    rep.scenario_hash = hash;
    rep.warnings = r.warnings;
    rep.wall_seconds = r.wall_seconds;
    rep.rows.push_back(CompareRow::analytic_only("silencing_factor", r.f_numeric));
    rep.rows.push_back(
        CompareRow::analytic_only("write_efficiency", r.theory.write_efficiency));
    rep.rows.push_back(CompareRow::checked("total_efficiency",
                                           r.theory.total_efficiency,
                                           r.eta_total_sim, tol_eta));
    rep.rows.push_back(CompareRow::checked("total_efficiency_composed",
                                           r.total_efficiency_composed,
                                           r.eta_total_sim, tol_eta));
    rep.rows.push_back(CompareRow::checked("output_noise", r.theory.output_noise,
                                           r.noise_sim, tol_noise));
    rep.rows.push_back(
        CompareRow::analytic_only("first_echo_noise", r.theory.first_echo_noise));
    return rep;
}

ProtocolReport report_from_rase(const RaseRunResult& r, const std::string& name,
                                uint64_t hash, double tol_rmin) {
    ProtocolReport rep;
    rep.scenario_name = name;
    rep.protocol = "rase";
    rep.scenario_hash = hash;
    rep.warnings = r.warnings;
    rep.wall_seconds = r.wall_seconds;
    rep.rows.push_back(CompareRow::analytic_only("silencing_factor", r.f_numeric));
    rep.rows.push_back(
        CompareRow::checked("n_ase", r.theory.n_ase, r.sim.n_ase, tol_rmin));
    rep.rows.push_back(
        CompareRow::checked("n_rase", r.theory.n_rase, r.sim.n_rase, tol_rmin,
                            0.05));
    rep.rows.push_back(CompareRow::checked("corr_re", r.theory.corr.real(),
                                           r.sim.corr.real(), tol_rmin, 0.05));
    rep.rows.push_back(
        CompareRow::checked("duan_simon_r_min", r.theory.r_min, r.sim.r_min,
                            tol_rmin));
    return rep;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
    if (header.size() != columns.size())
        throw std::invalid_argument("CSV header/column mismatch");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (size_t i = 0; i < header.size(); ++i)
        out << header[i] << (i + 1 < header.size() ? "," : "\n");
    const size_t rows = columns.empty() ? 0 : columns[0].size();
    for (const auto& c : columns)
        if (c.size() != rows) throw std::invalid_argument("ragged CSV columns");
    out << std::setprecision(12);
    for (size_t r = 0; r < rows; ++r)
        for (size_t i = 0; i < columns.size(); ++i)
            out << columns[i][r] << (i + 1 < columns.size() ? "," : "\n");
}

}  // namespace darkwave
