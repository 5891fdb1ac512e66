#pragma once

#include <string>
#include <vector>

#include "darkwave/modes.hpp"
#include "darkwave/protocol.hpp"
#include "darkwave/simulate.hpp"

namespace darkwave {

// RASE: invert the ground ensemble, collect ASE, re-invert (single ARP or the
// three-pulse composite), and quantify the ASE-RASE two-mode squeezing.
struct RaseScenario {
    double cooperativity = 0.2;
    double kappa = 0.0, gamma = 0.0, delta = 0.0;
    double g0 = 0.0, sigma_g = 0.0;
    double chirp_rate = 0.0;
    double wurst_a0_in = 2.5e7;
    double wurst_n = 20.0;
    double sweep_span = 0.0;
    bool composite = false;  // replace the second pulse by (+k, +k/2, +k)
    double window = 14e-6;   // ASE / RASE collection window length
    int m_omega = 600, m_g = 1;
    double xi = 2.5;
    int rows = 56;           // correlation-grid rows per window
    SimConfig sim;

    void apply_paper_defaults();
};

struct RaseTimeline {
    double arp1_start = 0.0, arp1_end = 0.0;
    double ase_lo = 0.0, ase_hi = 0.0;
    double inv2_start = 0.0, inv2_end = 0.0;  // second inversion (1 or 3 pulses)
    double rase_lo = 0.0, rase_hi = 0.0;
    double pivot = 0.0;  // effective time-reversal point of the second inversion
    double horizon = 0.0;
};

RaseTimeline rase_timeline(const RaseScenario& sc);

struct RaseRunResult {
    RaseTheory theory;
    double f_numeric = 1.0;
    SimDuanSimon sim;
    CorrelationTrace trace;     // correlation vs offset from the echo point
    RaseTimeline timeline;
    StepStats stats;
    double wall_seconds = 0.0;
    std::vector<std::string> warnings;
};

RaseRunResult run_rase(const RaseScenario& sc);

std::complex<double> rase_silencing_numeric(const RaseScenario& sc);

}  // namespace darkwave
