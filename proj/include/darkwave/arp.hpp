#pragma once

#include <complex>
#include <vector>

#include "darkwave/distributions.hpp"
#include "darkwave/ensemble.hpp"

namespace darkwave {

// Intracavity drive envelope A(t), dimensionless; Rabi frequency of a spin
// with coupling g is 2 A(t) g.
class DriveEnvelope {
  public:
    enum class Kind { Constant, Wurst, Tabulated };

    static DriveEnvelope constant(double a0);
    // WURST: A0 (1 - |sin(pi (t - Tw/2)/Tw)|^n) on [0, Tw], zero outside.
    static DriveEnvelope wurst(double a0, double t_w, double n = 20.0);
    static DriveEnvelope tabulated(std::vector<double> t, std::vector<double> a);

    double amplitude(double t_local) const;  // t_local measured from pulse start
    double peak() const;
    Kind kind() const { return kind_; }

  private:
    Kind kind_ = Kind::Constant;
    double a0_ = 0.0, t_w_ = 0.0, n_ = 20.0;
    std::vector<double> tab_t_, tab_a_;
};

// Chirped inversion pulse with instantaneous frequency omega0 + k (t - t_start).
struct ArpPulse {
    double omega0 = 0.0;   // initial instantaneous frequency (rad/s)
    double k = 0.0;        // chirp rate (rad/s^2), > 0 sweeps upward
    double t_start = 0.0;
    double t_end = 0.0;
    DriveEnvelope envelope = DriveEnvelope::constant(0.0);

    double duration() const { return t_end - t_start; }
    double sweep_span() const { return k * duration(); }
    // Adiabaticity Q(g) = (2 A_peak g)^2 / k.
    double adiabaticity(double g) const;
    // True when the sweep covers [-band/2, band/2] around zero detuning.
    bool covers_band(double band) const;
};

// Dynamical phase phi(omega, g) = -int Omega_eff dt accumulated by a spin at
// detuning omega with coupling g, Omega_eff = sqrt(Omega^2 + dw^2),
// dw(t) = omega - omega0 - k (t - t_start). Adaptive quadrature, abs tol in rad.
double dynamical_phase(const ArpPulse& pulse, double g, double omega,
                       double abs_tol = 1e-9);

// Closed form of the same integral for a constant envelope.
double dynamical_phase_constant_envelope(const ArpPulse& pulse, double g,
                                         double omega);

// Silencing factor F(omega) = (1/gbar^2) int g^2 rho(g) e^{i phi(omega,g)} dg.
std::complex<double> silencing_factor(const ArpPulse& pulse,
                                      const CouplingDistribution& coupling,
                                      double omega, double abs_tol = 1e-9);

// Gaussian closure |F| ~ exp(-r^2 Q^2 / 2).
double silencing_factor_gaussian(double r, double q_adiabaticity);

// s-space displacement s0 = d phi / d g at g = g0 (central difference).
double s_displacement(const ArpPulse& pulse, double g0, double omega = 0.0,
                      double rel_step = 1e-4);

// Cavity-filtered intracavity envelope of an input waveform a_in(t) (sqrt(Hz)):
// A(t) = sqrt(kappa / (w(t)^2 + (kappa/2)^2)) A_in(t), w(t) the instantaneous
// detuning from the resonator. Returns a pulse with a tabulated envelope.
ArpPulse intracavity_envelope(const CavitySpec& cavity, const ArpPulse& input_pulse,
                              int n_samples = 2048);

// Landau-Zener inversion error exp(-pi Q(g) / 2).
double landau_zener_error(const ArpPulse& pulse, double g);

struct CompositePulse {
    ArpPulse pulse;
    int phase_sign = +1;  // +1 ground->excited, -1 excited->ground
};

struct CompositeSequence {
    std::vector<CompositePulse> pulses;
    // Net coefficient sum of (sign / k_i); zero for the (+k, +k/2, +k) scheme.
    double net_inverse_chirp() const;
};

// Signed sum of dynamical phases over the sequence at one (g, omega).
double composite_net_phase(const CompositeSequence& seq, double g, double omega,
                           double abs_tol = 1e-9);

// Standard three-pulse scheme (+k, +k/2, +k) with durations (T, 2T, T),
// starting from the excited state; cancels both phase contributions.
CompositeSequence three_pulse_composite(const ArpPulse& base);

// Amplified chirped echo for a Gaussian input of temporal width sigma_t after
// one ARP of chirp rate k (homogeneous coupling, closed-form mode).
struct AceEcho {
    double sigma_t = 0.0;
    double k = 0.0;
    double alpha0 = 0.0;
    std::complex<double> t_e{1.0, 0.0};  // echo-amplitude coefficient
    int branch = +1;                     // sign of the imprinted chirp

    std::complex<double> amplitude(double t) const;
    double width() const;       // sqrt(sigma^2 + 4/(sigma^2 k^2))
    double chirp_rate() const;  // d(inst. freq)/dt = 2k/(sigma^4 k^2 + 4)
    double energy() const;      // int |amplitude|^2 dt, closed form
};

AceEcho ace_echo(double sigma_t, double k, double alpha0,
                 std::complex<double> t_e = {1.0, 0.0}, int branch = +1);

}  // namespace darkwave
