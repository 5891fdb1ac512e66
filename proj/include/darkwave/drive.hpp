#pragma once

#include <complex>
#include <string>
#include <vector>

#include "darkwave/arp.hpp"
#include "darkwave/ensemble.hpp"

namespace darkwave {

// Coherent input E(t) = <a_in(t)> in sqrt(Hz), built from non-overlapping
// segments. The cavity filtering is part of the dynamics, not the drive.
class DriveWaveform {
  public:
    struct Gaussian {
        double a0 = 0.0;
        double t0 = 0.0;
        double sigma_t = 0.0;
    };
    struct WurstArp {
        double a0_in = 0.0;     // input amplitude scale (sqrt(Hz))
        double t_start = 0.0;
        double t_w = 0.0;       // duration
        double n = 20.0;        // edge smoothness
        double omega0 = 0.0;    // initial instantaneous frequency (rad/s)
        double k = 0.0;         // chirp rate (rad/s^2)
    };

    void add_gaussian(const Gaussian& g);
    void add_wurst(const WurstArp& w);
    void add_silence(double duration);  // advances the append cursor only

    std::complex<double> value(double t) const;
    // Fastest rate present near time t (for step control): Rabi and chirp
    // detuning scales of any active ARP, plus the Gaussian bandwidth.
    double local_rate_scale(double t, double kappa, double g0) const;
    bool arp_active(double t) const;

    const std::vector<Gaussian>& gaussians() const { return gaussians_; }
    const std::vector<WurstArp>& wursts() const { return wursts_; }
    double end_time() const { return cursor_; }

    // A_0s/A_0pi weak-signal bookkeeping
    double signal_ratio = 0.0;

  private:
    void claim(double a, double b, const char* what);
    std::vector<Gaussian> gaussians_;
    std::vector<WurstArp> wursts_;
    std::vector<std::pair<double, double>> claimed_;
    double cursor_ = 0.0;
};

// pi-pulse amplitude for a Gaussian input: A_0pi = sqrt(kappa/2pi) pi/(4 gbar sigma_t)
double gaussian_pi_amplitude(double kappa, double gbar, double sigma_t);

struct DriveDefaults {
    double sigma_t = 3e-6;
    double signal_ratio = 1e-3;      // A_0s / A_0pi
    double wurst_a0_in = 2.5e7;      // sqrt(Hz)
    double wurst_n = 20.0;
};

// ArpPulse view of a WURST segment (input-referred envelope).
ArpPulse pulse_from_wurst(const DriveWaveform::WurstArp& w);

}  // namespace darkwave
