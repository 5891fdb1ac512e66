#pragma once

#include <vector>

#include "darkwave/distributions.hpp"
#include "darkwave/ensemble.hpp"

namespace darkwave {

// Dawson integral D(x) = exp(-x^2) int_0^x exp(t^2) dt, relative accuracy
// better than 1e-12 over the real line.
double dawson(double x);

// Frequency-dependent coupling of the bright mode to the dark waveguide,
// derived from an inhomogeneous profile n(omega).
struct SpectralDensityMap {
    std::vector<double> omega;          // evaluation grid (rad/s)
    std::vector<double> n;              // n(omega)
    std::vector<double> hilbert;        // H(omega) = PV int n(w')/(omega-w') dw'
    std::vector<double> gamma;          // Gamma(omega)
    std::vector<char> undefined;        // flags: both H and n vanish here

    double gamma_at(double w) const;    // linear interpolation
};

// Principal-value response H(omega) on a uniform grid, symmetric about the
// profile center, by singularity-subtracted quadrature plus analytic tail
// corrections for the heavy-tailed kinds.
std::vector<double> principal_value_transform(const FrequencyDistribution& n,
                                              const std::vector<double>& omega_grid);

SpectralDensityMap gamma_from_density(const FrequencyDistribution& n,
                                      const std::vector<double>& omega_grid);

struct PolaritonLinewidths {
    double omega_plus = 0.0, omega_minus = 0.0;
    double gamma_plus = 0.0, gamma_minus = 0.0;
    bool strong_coupling = true;  // 2G >> kappa, Gamma(+-G); warn otherwise
};

PolaritonLinewidths polariton_linewidths(const EnsembleSpec& spec,
                                         const SpectralDensityMap& map);

std::vector<double> uniform_grid(double lo, double hi, int n_points);

}  // namespace darkwave
