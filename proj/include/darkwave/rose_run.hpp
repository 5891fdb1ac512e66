#pragma once

#include <string>
#include <vector>

#include "darkwave/protocol.hpp"
#include "darkwave/simulate.hpp"

namespace darkwave {

// One ROSE simulation: absorb a weak Gaussian signal, invert twice with
// identical WURST pulses, record both echoes and the output noise window.
struct RoseScenario {
    double cooperativity = 0.3;
    double kappa = 0.0, gamma = 0.0, delta = 0.0;  // rad/s
    double g0 = 0.0, sigma_g = 0.0;                // rad/s
    double chirp_rate = 0.0;                       // rad/s^2
    double wurst_a0_in = 2.5e7;                    // sqrt(Hz)
    double wurst_n = 20.0;
    double sigma_t = 3e-6;
    double signal_ratio = 1e-3;
    double sweep_span = 0.0;  // rad/s; 0 = band + 2 MHz margin
    int m_omega = 600, m_g = 8;
    double xi = 2.5;
    SimConfig sim;
    bool with_noise = true;  // run the output-noise correlation sweep
    int noise_rows = 48;

    void apply_paper_defaults();  // kappa/2pi = Gamma/2pi = 1 MHz, g0/2pi = 100 Hz
};

struct RoseTimeline {
    double t_input = 0.0;
    double arp1_start = 0.0, arp1_end = 0.0;
    double arp2_start = 0.0, arp2_end = 0.0;
    double echo1 = 0.0, echo2 = 0.0;
    double horizon = 0.0;
    double noise_lo = 0.0, noise_hi = 0.0;
    double echo_halfwidth = 0.0;
};

RoseTimeline rose_timeline(const RoseScenario& sc);

struct RoseRunResult {
    RoseTheory theory;                 // closed-form predictions at F numeric
    double f_numeric = 1.0;            // |F| from the chirp-phase quadrature
    double input_energy = 0.0;
    double echo1_energy = 0.0;
    double echo2_energy = 0.0;
    double eta_total_sim = 0.0;        // echo2 / input energy
    double total_efficiency_composed = 0.0;  // resonant scattering-path product
    double noise_sim = 1.0;
    double echo1_peak_time = 0.0, echo2_peak_time = 0.0;
    RoseTimeline timeline;
    StepStats stats;
    double wall_seconds = 0.0;
    std::vector<std::string> warnings;
};

RoseRunResult run_rose(const RoseScenario& sc);

// Silencing factor of the scenario's (cavity-filtered) WURST at zero
// detuning, from the dynamical-phase quadrature.
std::complex<double> rose_silencing_numeric(const RoseScenario& sc);

// Resonant path composition through write, first-echo gain, phase-cancelled
// readout: |t|^2 |F^* rt' F + (1 - |F|^2) R_perp|^2 |t'|^2.
double rose_total_efficiency_composed(double c, std::complex<double> f);

}  // namespace darkwave
