#include "darkwave/ensemble.hpp"

#include <cmath>
#include <stdexcept>

namespace darkwave {

void EnsembleSpec::validate() const {
    if (cavity.kappa <= 0.0) throw std::invalid_argument("kappa must be positive");
    if (n_spins < 1.0) throw std::invalid_argument("need at least one spin");
}

double collective_coupling(const EnsembleSpec& spec) {
    spec.validate();
    return std::sqrt(spec.coupling.mean_square() * spec.n_spins);
}

double cooperativity(const EnsembleSpec& spec) {
    if (spec.frequency.kind() != FrequencyDistribution::Kind::Lorentzian)
        throw std::invalid_argument(
            "cooperativity without an explicit rate needs a Lorentzian profile");
    return cooperativity(spec, spec.frequency.gamma());
}

double cooperativity(const EnsembleSpec& spec, double gamma0) {
    spec.validate();
    if (gamma0 <= 0.0) throw std::invalid_argument("Gamma must be positive");
    const double g = collective_coupling(spec);
    return 4.0 * g * g / (spec.cavity.kappa * gamma0);
}

double bright_profile(const CouplingDistribution& coupling, double g) {
    if (coupling.kind() == CouplingDistribution::Kind::Delta)
        throw std::logic_error("bright profile of a delta distribution is a point mass");
    return g * std::sqrt(coupling.density(g)) / coupling.mean_coupling();
}

double spins_for_cooperativity(const EnsembleSpec& spec, double c_target) {
    if (c_target <= 0.0) throw std::invalid_argument("cooperativity must be positive");
    if (spec.frequency.kind() != FrequencyDistribution::Kind::Lorentzian)
        throw std::invalid_argument("spin-count solve assumes a Lorentzian profile");
    return c_target * spec.cavity.kappa * spec.frequency.gamma() /
           (4.0 * spec.coupling.mean_square());
}

}  // namespace darkwave
