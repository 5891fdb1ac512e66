#include "darkwave/drive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "darkwave/units.hpp"

namespace darkwave {

void DriveWaveform::claim(double a, double b, const char* what) {
    for (const auto& [lo, hi] : claimed_)
        if (a < hi && b > lo)
            throw std::invalid_argument(std::string("drive segments overlap: ") + what);
    claimed_.emplace_back(a, b);
    cursor_ = std::max(cursor_, b);
}

void DriveWaveform::add_gaussian(const Gaussian& g) {
    if (g.sigma_t <= 0.0) throw std::invalid_argument("Gaussian width must be positive");
    claim(g.t0 - 4.0 * g.sigma_t, g.t0 + 4.0 * g.sigma_t, "gaussian");
    gaussians_.push_back(g);
}

void DriveWaveform::add_wurst(const WurstArp& w) {
    if (w.t_w <= 0.0) throw std::invalid_argument("WURST duration must be positive");
    claim(w.t_start, w.t_start + w.t_w, "wurst");
    wursts_.push_back(w);
}

void DriveWaveform::add_silence(double duration) {
    if (duration < 0.0) throw std::invalid_argument("silence cannot be negative");
    claim(cursor_, cursor_ + duration, "silence");
}

std::complex<double> DriveWaveform::value(double t) const {
    std::complex<double> e{0.0, 0.0};
    for (const auto& g : gaussians_) {
        const double u = (t - g.t0) / g.sigma_t;
        if (std::abs(u) < 8.0) e += g.a0 * std::exp(-0.5 * u * u);
    }
    for (const auto& w : wursts_) {
        const double tl = t - w.t_start;
        if (tl < 0.0 || tl > w.t_w) continue;
        const double s = std::sin(pi * (tl - 0.5 * w.t_w) / w.t_w);
        const double amp = w.a0_in * (1.0 - std::pow(std::abs(s), w.n));
        const double phase = w.omega0 * tl + 0.5 * w.k * tl * tl;
        e += amp * std::polar(1.0, phase);
    }
    return e;
}

bool DriveWaveform::arp_active(double t) const {
    for (const auto& w : wursts_)
        if (t >= w.t_start - 1e-9 && t <= w.t_start + w.t_w + 1e-9) return true;
    return false;
}

double DriveWaveform::local_rate_scale(double t, double kappa, double g0) const {
    double rate = kappa;
    for (const auto& w : wursts_) {
        const double tl = t - w.t_start;
        if (tl < -1e-7 || tl > w.t_w + 1e-7) continue;
        const double a_cav = 2.0 * w.a0_in / std::sqrt(kappa);  // resonant filter
        const double rabi = 2.0 * a_cav * g0;
        const double det = std::abs(w.omega0 + w.k * std::clamp(tl, 0.0, w.t_w));
        rate = std::max({rate, rabi, det});
    }
    for (const auto& g : gaussians_)
        if (std::abs(t - g.t0) < 5.0 * g.sigma_t)
            rate = std::max(rate, 1.0 / g.sigma_t);
    return rate;
}

double gaussian_pi_amplitude(double kappa, double gbar, double sigma_t) {
    if (kappa <= 0.0 || gbar <= 0.0 || sigma_t <= 0.0)
        throw std::invalid_argument("pi amplitude needs positive parameters");
    return std::sqrt(kappa / two_pi) * pi / (4.0 * gbar * sigma_t);
}

ArpPulse pulse_from_wurst(const DriveWaveform::WurstArp& w) {
    ArpPulse p;
    p.omega0 = w.omega0;
    p.k = w.k;
    p.t_start = w.t_start;
    p.t_end = w.t_start + w.t_w;
    p.envelope = DriveEnvelope::wurst(w.a0_in, w.t_w, w.n);
    return p;
}

}  // namespace darkwave
