#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "darkwave/ensemble.hpp"

namespace darkwave {

using cdouble = std::complex<double>;

// Frequency response of the coupled resonator / bright-mode two-port.
// Ground regime: (a_out, P_out) = [[r, t], [t', r']] (a_in, P_in), unitary.
// Excited regime: (a_out, P_out^dag) = [[rt, tt], [ttp, rtp]] (a_in, P_in^dag),
// with |rt|^2 - |tt|^2 = 1.
struct ResponseCoefficients {
    cdouble r, t, t_prime, r_prime;
    enum class Regime { Ground, Excited } regime = Regime::Ground;
};

struct ResponseParams {
    double kappa = 0.0;
    double gamma = 0.0;   // Lorentzian linewidth, or Gamma(omega) in the
                          // labeled frequency-dependent approximation mode
    double g_collective = 0.0;
    double delta = 0.0;
};

ResponseParams response_params(const EnsembleSpec& spec);

ResponseCoefficients ground_coefficients(const ResponseParams& p, double omega);
ResponseCoefficients excited_coefficients(const ResponseParams& p, double omega);

ResponseCoefficients ground_coefficients(const EnsembleSpec& spec, double omega);
ResponseCoefficients excited_coefficients(const EnsembleSpec& spec, double omega);

// Echo amplitude spectrum tt'(w) t'(w) f_in(w) F(w) of the first echo after
// one inversion, for a normalized input mode and silencing factor per omega.
std::vector<cdouble> echo_amplitude_spectrum(
    const EnsembleSpec& spec, const std::vector<double>& omega,
    const std::function<cdouble(double)>& f_in,
    const std::function<cdouble(double)>& silencing);

}  // namespace darkwave
