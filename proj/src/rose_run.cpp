#include "darkwave/rose_run.hpp"

#include <chrono>
#include <cmath>

#include "darkwave/modes.hpp"
#include "darkwave/qrt.hpp"
#include "darkwave/units.hpp"

namespace darkwave {

void RoseScenario::apply_paper_defaults() {
    kappa = mhz(1.0);
    gamma = mhz(1.0);
    delta = 0.0;
    g0 = hz(100.0);
}

RoseTimeline rose_timeline(const RoseScenario& sc) {
    RoseTimeline tl;
    const double span =
        sc.sweep_span > 0.0 ? sc.sweep_span : sc.xi * sc.gamma + mhz(2.0);
    const double t_w = span / std::abs(sc.chirp_rate);
    tl.echo_halfwidth = 3.5 * sc.sigma_t;

    tl.t_input = 4.2 * sc.sigma_t;
    tl.arp1_start = tl.t_input + 4.3 * sc.sigma_t;
    tl.arp1_end = tl.arp1_start + t_w;
    const double t_pi1 = 0.5 * (tl.arp1_start + tl.arp1_end);
    tl.echo1 = 2.0 * t_pi1 - tl.t_input;
    tl.arp2_start = tl.echo1 + tl.echo_halfwidth;
    tl.arp2_end = tl.arp2_start + t_w;
    const double t_pi2 = 0.5 * (tl.arp2_start + tl.arp2_end);
    tl.echo2 = 2.0 * t_pi2 - tl.echo1;
    tl.horizon = tl.echo2 + tl.echo_halfwidth + 2e-6;
    tl.noise_lo = tl.arp2_end + 1e-6;
    tl.noise_hi = tl.horizon - 1e-6;
    return tl;
}

namespace {

EnsembleSpec make_spec(const RoseScenario& sc) {
    EnsembleSpec spec;
    spec.cavity = {sc.kappa, sc.delta};
    spec.coupling = sc.sigma_g > 0.0
                        ? CouplingDistribution::gaussian(sc.g0, sc.sigma_g)
                        : CouplingDistribution::delta(sc.g0);
    spec.frequency = FrequencyDistribution::lorentzian(sc.gamma);
    spec.n_spins = 1.0;
    spec.n_spins = spins_for_cooperativity(spec, sc.cooperativity);
    return spec;
}

DriveWaveform::WurstArp make_wurst(const RoseScenario& sc, double t_start) {
    const double span =
        sc.sweep_span > 0.0 ? sc.sweep_span : sc.xi * sc.gamma + mhz(2.0);
    DriveWaveform::WurstArp w;
    w.a0_in = sc.wurst_a0_in;
    w.t_start = t_start;
    w.t_w = span / std::abs(sc.chirp_rate);
    w.n = sc.wurst_n;
    w.omega0 = -0.5 * span + sc.delta;
    w.k = sc.chirp_rate;
    return w;
}

}  // namespace

std::complex<double> rose_silencing_numeric(const RoseScenario& sc) {
    const RoseTimeline tl = rose_timeline(sc);
    DriveWaveform::WurstArp w = make_wurst(sc, tl.arp1_start);
    ArpPulse input = pulse_from_wurst(w);
    const ArpPulse filtered =
        intracavity_envelope({sc.kappa, sc.delta}, input);
    const auto coupling = sc.sigma_g > 0.0
                              ? CouplingDistribution::gaussian(sc.g0, sc.sigma_g)
                              : CouplingDistribution::delta(sc.g0);
    // evaluated at zero detuning for scalar reports
    return silencing_factor(filtered, coupling, 0.0, 1e-7);
}

double rose_total_efficiency_composed(double c, std::complex<double> f) {
    const double eta = rose_write_efficiency(c);
    const double rt_prime = (1.0 + c) / (1.0 - c);
    const double f2 = std::norm(f);
    const double amp = f2 * rt_prime + (1.0 - f2);  // R_perp(0) = +1
    return eta * eta * amp * amp;
}

RoseRunResult run_rose(const RoseScenario& sc) {
    const auto t_begin = std::chrono::steady_clock::now();
    RoseRunResult out;
    out.timeline = rose_timeline(sc);
    const RoseTimeline& tl = out.timeline;

    EnsembleSpec spec = make_spec(sc);
    const std::complex<double> f = rose_silencing_numeric(sc);
    out.f_numeric = std::abs(f);
    out.theory = rose_theory(sc.cooperativity, f);
    out.total_efficiency_composed =
        rose_total_efficiency_composed(sc.cooperativity, f);

    SimProblem pb;
    pb.grid = build_bins(spec, sc.m_omega, sc.m_g, sc.xi);
    pb.cavity = spec.cavity;
    pb.config = sc.sim;
    pb.t_end = tl.horizon;
    pb.start = SpinRegime::Ground;

    const double gbar = spec.coupling.mean_coupling();
    const double a_pi = gaussian_pi_amplitude(sc.kappa, gbar, sc.sigma_t);
    DriveWaveform::Gaussian in;
    in.a0 = sc.signal_ratio * a_pi;
    in.t0 = tl.t_input;
    in.sigma_t = sc.sigma_t;
    pb.drive.add_gaussian(in);
    pb.drive.add_wurst(make_wurst(sc, tl.arp1_start));
    pb.drive.add_wurst(make_wurst(sc, tl.arp2_start));
    pb.drive.signal_ratio = sc.signal_ratio;

    RecordingPlan plan;
    if (sc.with_noise) {
        plan.coeff_t_lo = tl.noise_lo - 2e-6;
        plan.coeff_t_hi = tl.horizon;
        for (int i = 0; i < sc.noise_rows; ++i)
            plan.snapshot_times.push_back(
                tl.noise_lo + (tl.noise_hi - tl.noise_lo) * i / (sc.noise_rows - 1));
    }

    Trajectory tr = run_simulation(pb, plan);
    out.stats = tr.stats;
    out.warnings = tr.warnings;

    out.input_energy = drive_energy(pb.drive, 0.0, tl.t_input + 4.0 * sc.sigma_t);
    out.echo1_energy = output_energy(tr, tl.echo1 - tl.echo_halfwidth,
                                     std::min(tl.echo1 + tl.echo_halfwidth,
                                              tl.arp2_start));
    out.echo2_energy =
        output_energy(tr, tl.echo2 - tl.echo_halfwidth, tl.horizon);
    out.eta_total_sim = out.echo2_energy / out.input_energy;
    out.echo1_peak_time =
        output_peak_time(tr, tl.echo1 - tl.echo_halfwidth,
                         std::min(tl.echo1 + tl.echo_halfwidth, tl.arp2_start));
    out.echo2_peak_time =
        output_peak_time(tr, tl.echo2 - tl.echo_halfwidth, tl.horizon);

    if (sc.with_noise) {
        QrtEngine qrt(pb.grid, pb.cavity, tr.coeffs, 1e-7);
        std::vector<double> cols;
        const int nc = sc.noise_rows * 2;
        for (int i = 0; i < nc; ++i)
            cols.push_back(tl.noise_lo +
                           (tl.noise_hi - tl.noise_lo) * i / (nc - 1));
        const auto grid_n = qrt.output_grid(
            tr.snapshots, TwoTimeCorrelation::Kind::Normal, cols);
        const auto mode =
            TemporalMode::boxcar(tl.noise_lo, tl.noise_hi - tl.noise_lo, 257);
        const double n_mode = project_photon_number(grid_n, mode);
        const std::complex<double> mean_mode = project_mean(tr, mode);
        out.noise_sim = noise_metric(n_mode, mean_mode);
    }

    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin)
            .count();
    return out;
}

}  // namespace darkwave
