#pragma once

#include "darkwave/distributions.hpp"

namespace darkwave {

struct CavitySpec {
    double kappa = 0.0;  // resonator decay (rad/s)
    double delta = 0.0;  // resonator detuning (rad/s)
};

struct EnsembleSpec {
    CavitySpec cavity;
    CouplingDistribution coupling = CouplingDistribution::delta(1.0);
    FrequencyDistribution frequency = FrequencyDistribution::lorentzian(1.0);
    double n_spins = 1.0;

    void validate() const;
};

// Collectively enhanced coupling G = gbar * sqrt(N), gbar^2 = int g^2 rho dg.
double collective_coupling(const EnsembleSpec& spec);

// C = 4 G^2 / (kappa Gamma) with the Lorentzian linewidth; for other
// profiles pass an explicit resonant rate gamma0 (e.g. from the spectral map).
double cooperativity(const EnsembleSpec& spec);
double cooperativity(const EnsembleSpec& spec, double gamma0);

// Normalized bright-mode profile P(g) = g sqrt(rho(g)) / gbar.
double bright_profile(const CouplingDistribution& coupling, double g);

// Spin count realizing a target resonant cooperativity at fixed kappa/Gamma/g.
double spins_for_cooperativity(const EnsembleSpec& spec, double c_target);

}  // namespace darkwave
