#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "darkwave/arp.hpp"
#include "darkwave/ensemble.hpp"

namespace darkwave {

struct RoseTheory {
    double cooperativity = 0.0;
    std::complex<double> silencing{1.0, 0.0};
    double write_efficiency = 0.0;
    double total_efficiency = 0.0;
    double first_echo_noise = 0.0;   // photons, independent of F
    double second_echo_noise = 0.0;  // <N''^dag N''>
    double output_noise = 1.0;       // quadrature sum, shot noise = 1
};

struct RaseTheory {
    double n_ase = 0.0;
    double n_rase = 0.0;
    std::complex<double> corr{0.0, 0.0};  // <a_ASE a_RASE>
    double r_min = 1.0;
    double s_opt = 0.5;
};

struct ValidityReport {
    double hp_photon_bound_ground = 0.0;   // intracavity photons, near ground
    double hp_photon_bound_excited = 0.0;  // same bound * (1-C)^2
    double purcell_rate = 0.0;             // gamma = 4 gbar^2 / kappa
    double ase_rate = 0.0;                 // gamma / (1 - C)
    double lz_error = 0.0;                 // at g0
    double ase_depletion = 0.0;            // ase_rate * horizon
    bool bright_exponent_ok = true;        // alpha >= -2
    std::vector<std::string> warnings;
};

// eta = 4C/(1+C)^2
double rose_write_efficiency(double c);

// eta_tot = [eta (2C|F|^2/(1-C) - 1)]^2
double rose_total_efficiency(double c, std::complex<double> silencing);

// <Dx^2> + <Dp^2> = 1 + 2|F|^2 (4C/(1-C^2))^2
double rose_output_noise(double c, std::complex<double> silencing);

// <N''^dag N''> = |F|^2 (4C/(1-C^2))^2, the second-echo added noise photons
double rose_second_echo_noise(double c, std::complex<double> silencing);

// ASE of the first echo: 4C/(1-C)^2, independent of F
double first_echo_noise(double c);

RoseTheory rose_theory(double c, std::complex<double> silencing);

// n_ase = 4C/(1-C)^2, corr = n_ase F, n_rase = 16 C^2 |F|^2 / (1-C^2)^2
RaseTheory rase_moments(double c, std::complex<double> silencing);

// Duan-Simon r(s) and its closed-form minimum over s in [0,1].
double duan_simon_value(double n1, double n2, std::complex<double> corr, double s);
struct DuanSimonMin {
    double r_min = 1.0;
    double s_opt = 0.5;
};
DuanSimonMin duan_simon_min(double n1, double n2, std::complex<double> corr);

// eta_AFC = [4C/(1+C)^2]^2 exp(-gamma/spacing); the ratio is unit-free.
double afc_total_efficiency(double c, double gamma_tooth, double spacing,
                            bool* good_regime = nullptr);

ValidityReport validity_report(const EnsembleSpec& spec, const ArpPulse& pulse,
                               double epsilon, double horizon);

struct ExperimentEstimate {
    double q = 0.0;           // Omega0^2 / k
    double r_required = 0.0;  // sqrt(2 ln(1/F_target)) / Q
};
ExperimentEstimate experiment_estimates(double omega0_rabi, double k,
                                        double f_target);

// Spectral mode: write efficiency and second-echo amplitude for a normalized
// input mode, integrating the full frequency-dependent coefficients.
struct RoseSpectral {
    double write_efficiency = 0.0;
    double first_echo_energy = 0.0;  // relative to input energy
};
RoseSpectral rose_spectral(const EnsembleSpec& spec,
                           const std::vector<double>& omega,
                           const std::function<std::complex<double>(double)>& f_in,
                           const std::function<std::complex<double>(double)>& silencing);

}  // namespace darkwave
