#pragma once

#include <string>
#include <vector>

#include "darkwave/ensemble.hpp"

namespace darkwave {

// Discretized ensemble: M = M_omega * M_g bins with detuning omega_j,
// coupling g_j and spin weight N_j = N * weight_j. Weights come from CDF
// differences of the full (untruncated) distributions, so the resonant
// spectral density and hence the realized cooperativity match the nominal
// spec; the omega truncation keeps ~75.8% of the spins at xi = 2.5.
struct BinGrid {
    int m_omega = 0, m_g = 0;
    double xi = 2.5;
    double n_total = 0.0;
    double gamma = 0.0;  // Lorentzian linewidth of the profile (rad/s)
    std::vector<double> omega;   // size M, omega-major ordering
    std::vector<double> g;       // size M
    std::vector<double> weight;  // size M, N_j / N
    double included_fraction = 0.0;
    bool quantile = false;

    int size() const { return static_cast<int>(omega.size()); }
    double nj(int j) const { return n_total * weight[j]; }
};

BinGrid build_bins(const EnsembleSpec& spec, int m_omega, int m_g, double xi,
                   bool quantile = false);

struct RephasingCheck {
    double guard_time = 0.0;     // M_omega / (xi Gamma), Gamma angular (conservative)
    double artifact_time = 0.0;  // 2 pi / bin spacing = where the spurious echo sits
    bool ok = true;              // guard_time > horizon
    std::string message;
};

RephasingCheck check_rephasing(const BinGrid& grid, double horizon);

}  // namespace darkwave
