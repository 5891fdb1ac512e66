#include "darkwave/rase_run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "darkwave/qrt.hpp"
#include "darkwave/quadrature.hpp"
#include "darkwave/units.hpp"

namespace darkwave {

void RaseScenario::apply_paper_defaults() {
    kappa = mhz(1.0);
    gamma = mhz(1.0);
    delta = 0.0;
    g0 = hz(100.0);
}

namespace {
double wurst_duration(const RaseScenario& sc) {
    const double span =
        sc.sweep_span > 0.0 ? sc.sweep_span : sc.xi * sc.gamma + mhz(2.0);
    return span / std::abs(sc.chirp_rate);
}

DriveWaveform::WurstArp make_wurst(const RaseScenario& sc, double t_start,
                                   double k, double t_w) {
    const double span =
        sc.sweep_span > 0.0 ? sc.sweep_span : sc.xi * sc.gamma + mhz(2.0);
    DriveWaveform::WurstArp w;
    w.a0_in = sc.wurst_a0_in;
    w.t_start = t_start;
    w.t_w = t_w;
    w.n = sc.wurst_n;
    w.omega0 = -0.5 * span + sc.delta;
    w.k = k;
    return w;
}
}  // namespace

RaseTimeline rase_timeline(const RaseScenario& sc) {
    RaseTimeline tl;
    const double t_w = wurst_duration(sc);
    const double settle = 2e-6;  // cavity ring-down after a pulse
    tl.arp1_start = 1e-6;
    tl.arp1_end = tl.arp1_start + t_w;
    tl.ase_lo = tl.arp1_end + settle;
    tl.ase_hi = tl.ase_lo + sc.window;
    tl.inv2_start = tl.ase_hi + settle;
    if (!sc.composite) {
        tl.inv2_end = tl.inv2_start + t_w;
        tl.pivot = 0.5 * (tl.inv2_start + tl.inv2_end);
    } else {
        // (+k, +k/2, +k) with durations (T, 2T, T)
        tl.inv2_end = tl.inv2_start + 4.0 * t_w;
        tl.pivot = 0.5 * (tl.inv2_start + tl.inv2_end);
    }
    tl.rase_lo = tl.inv2_end + settle;
    // the rephased window mirrors the ASE window about the pivot
    tl.rase_hi = std::min(tl.rase_lo + sc.window,
                          2.0 * tl.pivot - tl.ase_lo);
    if (tl.rase_hi <= tl.rase_lo + 2e-6) tl.rase_hi = tl.rase_lo + sc.window;
    tl.horizon = tl.rase_hi + 1e-6;
    return tl;
}

std::complex<double> rase_silencing_numeric(const RaseScenario& sc) {
    const RaseTimeline tl = rase_timeline(sc);
    const double t_w = wurst_duration(sc);
    const auto coupling = sc.sigma_g > 0.0
                              ? CouplingDistribution::gaussian(sc.g0, sc.sigma_g)
                              : CouplingDistribution::delta(sc.g0);
    const CavitySpec cavity{sc.kappa, sc.delta};
    auto filtered_phase_pulse = [&](double t_start, double k, double dur) {
        DriveWaveform::WurstArp w = make_wurst(sc, t_start, k, dur);
        return intracavity_envelope(cavity, pulse_from_wurst(w));
    };
    if (!sc.composite) {
        const ArpPulse p = filtered_phase_pulse(tl.inv2_start, sc.chirp_rate, t_w);
        return silencing_factor(p, coupling, 0.0, 1e-7);
    }
    // net phase of the three-pulse scheme, signed by inversion direction
    const ArpPulse p1 = filtered_phase_pulse(tl.inv2_start, sc.chirp_rate, t_w);
    const ArpPulse p2 = filtered_phase_pulse(tl.inv2_start + t_w,
                                             0.5 * sc.chirp_rate, 2.0 * t_w);
    const ArpPulse p3 = filtered_phase_pulse(tl.inv2_start + 3.0 * t_w,
                                             sc.chirp_rate, t_w);
    CompositeSequence seq;
    seq.pulses = {{p1, -1}, {p2, +1}, {p3, -1}};
    if (coupling.kind() == CouplingDistribution::Kind::Delta)
        return std::polar(1.0, composite_net_phase(seq, coupling.g0(), 0.0));
    const double gbar2 = coupling.mean_square();
    auto f = [&](double g) -> std::complex<double> {
        const double phi = composite_net_phase(seq, g, 0.0, 1e-7);
        return g * g * coupling.density(g) * std::polar(1.0, phi) / gbar2;
    };
    return integrate_complex(f, coupling.support_lo(), coupling.support_hi(), 1e-7,
                             40)
        .value;
}

RaseRunResult run_rase(const RaseScenario& sc) {
    const auto t_begin = std::chrono::steady_clock::now();
    RaseRunResult out;
    out.timeline = rase_timeline(sc);
    const RaseTimeline& tl = out.timeline;

    EnsembleSpec spec;
    spec.cavity = {sc.kappa, sc.delta};
    spec.coupling = sc.sigma_g > 0.0
                        ? CouplingDistribution::gaussian(sc.g0, sc.sigma_g)
                        : CouplingDistribution::delta(sc.g0);
    spec.frequency = FrequencyDistribution::lorentzian(sc.gamma);
    spec.n_spins = 1.0;
    spec.n_spins = spins_for_cooperativity(spec, sc.cooperativity);

    const std::complex<double> f = rase_silencing_numeric(sc);
    out.f_numeric = std::abs(f);
    out.theory = rase_moments(sc.cooperativity, f);

    SimProblem pb;
    pb.grid = build_bins(spec, sc.m_omega, sc.m_g, sc.xi);
    pb.cavity = spec.cavity;
    pb.config = sc.sim;
    pb.t_end = tl.horizon;
    pb.start = SpinRegime::Ground;

    const double t_w = wurst_duration(sc);
    pb.drive.add_wurst(make_wurst(sc, tl.arp1_start, sc.chirp_rate, t_w));
    if (!sc.composite) {
        pb.drive.add_wurst(make_wurst(sc, tl.inv2_start, sc.chirp_rate, t_w));
    } else {
        pb.drive.add_wurst(make_wurst(sc, tl.inv2_start, sc.chirp_rate, t_w));
        pb.drive.add_wurst(
            make_wurst(sc, tl.inv2_start + t_w, 0.5 * sc.chirp_rate, 2.0 * t_w));
        pb.drive.add_wurst(
            make_wurst(sc, tl.inv2_start + 3.0 * t_w, sc.chirp_rate, t_w));
    }

    RecordingPlan plan;
    plan.coeff_t_lo = tl.ase_lo - 1e-6;
    plan.coeff_t_hi = tl.horizon;
    for (int i = 0; i < sc.rows; ++i) {
        plan.snapshot_times.push_back(
            tl.ase_lo + (tl.ase_hi - tl.ase_lo) * i / (sc.rows - 1));
        plan.snapshot_times.push_back(
            tl.rase_lo + (tl.rase_hi - tl.rase_lo) * i / (sc.rows - 1));
    }
    std::sort(plan.snapshot_times.begin(), plan.snapshot_times.end());

    Trajectory tr = run_simulation(pb, plan);
    out.stats = tr.stats;
    out.warnings = tr.warnings;

    // split the snapshots back into the two windows
    std::vector<CovSnapshot> rows_ase, rows_rase;
    for (const auto& s : tr.snapshots) {
        if (s.t <= tl.ase_hi + 1e-9)
            rows_ase.push_back(s);
        else
            rows_rase.push_back(s);
    }

    QrtEngine qrt(pb.grid, pb.cavity, tr.coeffs, 1e-7);
    std::vector<double> cols_ase, cols_rase;
    const int nc = sc.rows * 2;
    for (int i = 0; i < nc; ++i) {
        cols_ase.push_back(tl.ase_lo + (tl.ase_hi - tl.ase_lo) * i / (nc - 1));
        cols_rase.push_back(tl.rase_lo + (tl.rase_hi - tl.rase_lo) * i / (nc - 1));
    }
    const auto grid_aa =
        qrt.output_grid(rows_ase, TwoTimeCorrelation::Kind::Normal, cols_ase);
    const auto grid_rr =
        qrt.output_grid(rows_rase, TwoTimeCorrelation::Kind::Normal, cols_rase);
    const auto grid_ar =
        qrt.output_grid(rows_ase, TwoTimeCorrelation::Kind::Anomalous, cols_rase);

    // narrowband ASE mode, matched RASE mode
    const double a_center = 0.5 * (tl.ase_lo + tl.ase_hi);
    const auto f_ase = TemporalMode::gaussian(
        a_center, 0.22 * (tl.ase_hi - tl.ase_lo), 0.5 * (tl.ase_hi - tl.ase_lo),
        321);
    const auto f_rase = matched_rase_mode(grid_ar, f_ase, cols_rase);
    out.sim = sim_duan_simon(grid_aa, grid_rr, grid_ar, f_ase, f_rase);

    std::vector<double> offsets;
    for (int i = -40; i <= 40; ++i) offsets.push_back(i * 2.5e-7);
    out.trace =
        ase_rase_correlation(grid_ar, tl.pivot, tl.ase_lo, tl.ase_hi, offsets);

    out.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin)
            .count();
    return out;
}

}  // namespace darkwave
