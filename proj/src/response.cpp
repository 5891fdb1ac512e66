#include "darkwave/response.hpp"

#include <cmath>
#include <stdexcept>

namespace darkwave {

ResponseParams response_params(const EnsembleSpec& spec) {
    ResponseParams p;
    p.kappa = spec.cavity.kappa;
    p.delta = spec.cavity.delta;
    if (spec.frequency.kind() != FrequencyDistribution::Kind::Lorentzian)
        throw std::invalid_argument(
            "strict response mode needs a Lorentzian profile; supply Gamma(omega) "
            "explicitly for the frequency-dependent approximation");
    p.gamma = spec.frequency.gamma();
    p.g_collective = collective_coupling(spec);
    return p;
}

namespace {
constexpr cdouble I{0.0, 1.0};
}

// Resonant limits fix the sign conventions: r(0) = (1-C)/(1+C),
// t = t' = 2i sqrt(C)/(1+C) on resonance at delta = 0.
ResponseCoefficients ground_coefficients(const ResponseParams& p, double omega) {
    const double hk = 0.5 * p.kappa, hg = 0.5 * p.gamma;
    const double g2 = p.g_collective * p.g_collective;
    const double wp = omega - p.delta;
    const cdouble den = (hk - I * wp) * (hg - I * omega) + g2;
    ResponseCoefficients c;
    c.regime = ResponseCoefficients::Regime::Ground;
    c.r = ((hk + I * wp) * (hg - I * omega) - g2) / den;
    c.t = I * std::sqrt(p.kappa * p.gamma) * p.g_collective / den;
    c.t_prime = c.t;
    c.r_prime = ((hk - I * wp) * (hg + I * omega) - g2) / den;
    return c;
}

ResponseCoefficients excited_coefficients(const ResponseParams& p, double omega) {
    const double hk = 0.5 * p.kappa, hg = 0.5 * p.gamma;
    const double g2 = p.g_collective * p.g_collective;
    const double wp = omega - p.delta;
    const cdouble den = (hk - I * wp) * (hg - I * omega) - g2;
    if (std::abs(den) < 1e-12 * (hk * hg + g2))
        throw std::domain_error("excited response pole: C = 1 on resonance "
                                "(laser oscillation threshold)");
    ResponseCoefficients c;
    c.regime = ResponseCoefficients::Regime::Excited;
    c.r = ((hk + I * wp) * (hg - I * omega) + g2) / den;
    c.t = I * std::sqrt(p.kappa * p.gamma) * p.g_collective / den;
    c.t_prime = c.t;
    c.r_prime = ((hk - I * wp) * (hg + I * omega) + g2) / den;
    return c;
}

ResponseCoefficients ground_coefficients(const EnsembleSpec& spec, double omega) {
    return ground_coefficients(response_params(spec), omega);
}

ResponseCoefficients excited_coefficients(const EnsembleSpec& spec, double omega) {
    return excited_coefficients(response_params(spec), omega);
}

std::vector<cdouble> echo_amplitude_spectrum(
    const EnsembleSpec& spec, const std::vector<double>& omega,
    const std::function<cdouble(double)>& f_in,
    const std::function<cdouble(double)>& silencing) {
    const ResponseParams p = response_params(spec);
    std::vector<cdouble> out(omega.size());
    for (size_t i = 0; i < omega.size(); ++i) {
        const double w = omega[i];
        out[i] = excited_coefficients(p, w).t_prime *
                 ground_coefficients(p, w).t_prime * f_in(w) * silencing(w);
    }
    return out;
}

}  // namespace darkwave
