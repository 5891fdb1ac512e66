#pragma once

#include <complex>
#include <vector>

#include "darkwave/protocol.hpp"
#include "darkwave/qrt.hpp"
#include "darkwave/simulate.hpp"

namespace darkwave {

// Normalized temporal mode f(t) on a uniform grid, int |f|^2 dt = 1.
struct TemporalMode {
    std::vector<double> t;
    std::vector<std::complex<double>> f;

    static TemporalMode boxcar(double t_start, double width, int samples);
    static TemporalMode tabulated(std::vector<double> t,
                                  std::vector<std::complex<double>> f);
    // Matched mode of a mean waveform: f = conj(a(t)) / ||a||.
    static TemporalMode matched_to_mean(const Trajectory& tr, double t_lo,
                                        double t_hi, int samples);
    // Gaussian-apodized window (narrowband analysis mode).
    static TemporalMode gaussian(double center, double sigma, double halfspan,
                                 int samples);

    double norm_check() const;  // int |f|^2 dt
    void normalize();
};

// <a_out> projected on a mode: int f(t) <a_out(t)> dt.
std::complex<double> project_mean(const Trajectory& tr, const TemporalMode& f);

// Photon number in the mode from a normal-ordered output grid:
// int f*(t) f(t') kappa <da^dag(t) da(t')> dt dt'.
double project_photon_number(const TwoTimeCorrelation& grid, const TemporalMode& f);

// Anomalous cross moment int f_a(t) f_b(t') kappa <da(t) da(t')> dt dt'.
std::complex<double> project_pair_moment(const TwoTimeCorrelation& grid,
                                         const TemporalMode& fa,
                                         const TemporalMode& fb);

// noise = 2 (<a^dag a> - |<a>|^2) + 1; vacuum = 1.
double noise_metric(double photon_number, std::complex<double> mean);

// Matched RASE mode for a fixed ASE mode: f_R(t') ~ conj(int f_A(t) C(t,t') dt).
TemporalMode matched_rase_mode(const TwoTimeCorrelation& corr,
                               const TemporalMode& f_ase,
                               const std::vector<double>& t_rase);

// ASE-RASE time trace C(t_d) = int_ASE dt <a_out(t) a_out(2 t0 - t + t_d)>.
struct CorrelationTrace {
    std::vector<double> t_d;
    std::vector<std::complex<double>> value;
};
CorrelationTrace ase_rase_correlation(const TwoTimeCorrelation& corr,
                                      double pivot_t0, double ase_lo, double ase_hi,
                                      const std::vector<double>& offsets);

struct SimDuanSimon {
    double n_ase = 0.0, n_rase = 0.0;
    std::complex<double> corr;
    double r_min = 1.0, s_opt = 0.5;
};

SimDuanSimon sim_duan_simon(const TwoTimeCorrelation& grid_aa,
                            const TwoTimeCorrelation& grid_rr,
                            const TwoTimeCorrelation& grid_ar,
                            const TemporalMode& f_ase, const TemporalMode& f_rase);

}  // namespace darkwave
