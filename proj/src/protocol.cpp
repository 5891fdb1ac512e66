#include "darkwave/protocol.hpp"

#include <cmath>
#include <stdexcept>

#include "darkwave/quadrature.hpp"
#include "darkwave/response.hpp"
#include "darkwave/units.hpp"

namespace darkwave {

namespace {
void require_no_pole(double c) {
    if (std::abs(1.0 - c) < 1e-12)
        throw std::domain_error("C = 1: laser oscillation pole");
}
}  // namespace

double rose_write_efficiency(double c) {
    if (c < 0.0) throw std::invalid_argument("cooperativity must be >= 0");
    return 4.0 * c / ((1.0 + c) * (1.0 + c));
}

double rose_total_efficiency(double c, std::complex<double> f) {
    require_no_pole(c);
    const double eta = rose_write_efficiency(c);
    const double f2 = std::norm(f);
    const double gain = 2.0 * c * f2 / (1.0 - c) - 1.0;
    return eta * eta * gain * gain;
}

double rose_second_echo_noise(double c, std::complex<double> f) {
    require_no_pole(c);
    const double amp = 4.0 * c / (1.0 - c * c);
    return std::norm(f) * amp * amp;
}

double rose_output_noise(double c, std::complex<double> f) {
    return 1.0 + 2.0 * rose_second_echo_noise(c, f);
}

double first_echo_noise(double c) {
    require_no_pole(c);
    return 4.0 * c / ((1.0 - c) * (1.0 - c));
}

RoseTheory rose_theory(double c, std::complex<double> f) {
    RoseTheory t;
    t.cooperativity = c;
    t.silencing = f;
    t.write_efficiency = rose_write_efficiency(c);
    t.total_efficiency = rose_total_efficiency(c, f);
    t.first_echo_noise = first_echo_noise(c);
    t.second_echo_noise = rose_second_echo_noise(c, f);
    t.output_noise = rose_output_noise(c, f);
    return t;
}

RaseTheory rase_moments(double c, std::complex<double> f) {
    require_no_pole(c);
    RaseTheory t;
    t.n_ase = 4.0 * c / ((1.0 - c) * (1.0 - c));
    t.corr = t.n_ase * f;
    const double den = (1.0 - c * c) * (1.0 - c * c);
    t.n_rase = 16.0 * c * c * std::norm(f) / den;
    const auto m = duan_simon_min(t.n_ase, t.n_rase, t.corr);
    t.r_min = m.r_min;
    t.s_opt = m.s_opt;
    return t;
}

double duan_simon_value(double n1, double n2, std::complex<double> corr, double s) {
    if (s < 0.0 || s > 1.0) throw std::invalid_argument("s must lie in [0,1]");
    return 1.0 + 2.0 * (1.0 - s) * n1 + 2.0 * s * n2 -
           4.0 * std::sqrt(s * (1.0 - s)) * corr.real();
}

DuanSimonMin duan_simon_min(double n1, double n2, std::complex<double> corr) {
    if (n1 < 0.0 || n2 < 0.0) throw std::invalid_argument("photon numbers must be >= 0");
    DuanSimonMin out;
    const double c = corr.real();
    const double d = n2 - n1;
    if (c <= 0.0) {
        // the correlation term cannot lower r; minimum sits at a boundary
        out.r_min = 1.0 + 2.0 * std::min(n1, n2);
        out.s_opt = n1 <= n2 ? 0.0 : 1.0;
        // s is free when n1 == n2 == 0; keep the symmetric point
        if (n1 == 0.0 && n2 == 0.0) out.s_opt = 0.5;
        return out;
    }
    const double root = std::sqrt(d * d + 4.0 * c * c);
    out.r_min = 1.0 + n1 + n2 - root;
    out.s_opt = 0.5 * (1.0 - d / root);
    return out;
}

double afc_total_efficiency(double c, double gamma_tooth, double spacing,
                            bool* good_regime) {
    if (gamma_tooth < 0.0 || spacing <= 0.0)
        throw std::invalid_argument("comb parameters must be positive");
    const bool good = 5.0 * gamma_tooth <= spacing;
    if (good_regime) *good_regime = good;
    const double eta = rose_write_efficiency(c);
    return eta * eta * std::exp(-gamma_tooth / spacing);
}

ValidityReport validity_report(const EnsembleSpec& spec, const ArpPulse& pulse,
                               double epsilon, double horizon) {
    spec.validate();
    ValidityReport r;
    const double gbar2 = spec.coupling.mean_square();
    const double kappa = spec.cavity.kappa;
    double c = 0.0;
    if (spec.frequency.kind() == FrequencyDistribution::Kind::Lorentzian) {
        c = cooperativity(spec);
        r.hp_photon_bound_ground =
            0.5 * epsilon * spec.n_spins * spec.frequency.gamma() / (c * kappa);
    }
    if (c < 1.0)
        r.hp_photon_bound_excited = r.hp_photon_bound_ground * (1.0 - c) * (1.0 - c);
    r.purcell_rate = 4.0 * gbar2 / kappa;
    if (c < 1.0) {
        r.ase_rate = r.purcell_rate / (1.0 - c);
        r.ase_depletion = r.ase_rate * horizon;
        if (r.ase_depletion > epsilon)
            r.warnings.push_back("ASE depletion exceeds the population tolerance "
                                 "over the horizon");
    } else {
        r.warnings.push_back("C >= 1: inverted ensemble above threshold, "
                             "excited-state bounds unavailable");
    }
    r.lz_error = landau_zener_error(pulse, spec.coupling.g0());
    if (r.lz_error > 1e-2)
        r.warnings.push_back("Landau-Zener inversion error above 1%");
    if (spec.coupling.kind() == CouplingDistribution::Kind::PowerLawTail)
        r.bright_exponent_ok = spec.coupling.alpha() >= -2.0;
    if (!r.bright_exponent_ok)
        r.warnings.push_back("bright-mode profile diverges at g = 0 (alpha < -2)");
    if (epsilon <= 0.0)
        r.warnings.push_back("zero population tolerance: all bounds vanish");
    return r;
}

ExperimentEstimate experiment_estimates(double omega0_rabi, double k,
                                        double f_target) {
    if (omega0_rabi <= 0.0 || k <= 0.0)
        throw std::invalid_argument("Rabi frequency and chirp rate must be positive");
    if (f_target <= 0.0 || f_target > 1.0)
        throw std::invalid_argument("silencing target must lie in (0, 1]");
    ExperimentEstimate e;
    e.q = omega0_rabi * omega0_rabi / k;
    e.r_required = std::sqrt(2.0 * std::log(1.0 / f_target)) / e.q;
    return e;
}

RoseSpectral rose_spectral(const EnsembleSpec& spec,
                           const std::vector<double>& omega,
                           const std::function<std::complex<double>(double)>& f_in,
                           const std::function<std::complex<double>(double)>& fsil) {
    if (omega.size() < 2) throw std::invalid_argument("need a frequency grid");
    RoseSpectral out;
    const ResponseParams p = response_params(spec);
    const auto echo = echo_amplitude_spectrum(spec, omega, f_in, fsil);
    double w_eff = 0.0, e1 = 0.0, in = 0.0;
    for (size_t i = 0; i + 1 < omega.size(); ++i) {
        const double h = omega[i + 1] - omega[i];
        const auto g = ground_coefficients(p, omega[i]);
        w_eff += std::norm(g.t_prime * f_in(omega[i])) * h;
        e1 += std::norm(echo[i]) * h;
        in += std::norm(f_in(omega[i])) * h;
    }
    out.write_efficiency = w_eff / in;
    out.first_echo_energy = e1 / in;
    return out;
}

}  // namespace darkwave
