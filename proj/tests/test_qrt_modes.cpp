#include <doctest.h>

#include <cmath>

#include "darkwave/modes.hpp"
#include "darkwave/qrt.hpp"
#include "darkwave/simulate.hpp"
#include "darkwave/units.hpp"

using namespace darkwave;

namespace {
SimProblem decoupled_cavity(double kappa, double t_end) {
    // one bin with negligible coupling: a bare decaying resonator
    EnsembleSpec spec;
    spec.cavity = {kappa, 0.0};
    spec.frequency = FrequencyDistribution::lorentzian(mhz(1.0));
    spec.coupling = CouplingDistribution::delta(1e-4);
    spec.n_spins = 1.0;
    SimProblem pb;
    pb.grid = build_bins(spec, 1, 1, 2.5);
    pb.grid.weight[0] = 1.0;
    pb.cavity = spec.cavity;
    pb.t_end = t_end;
    return pb;
}
}  // namespace

TEST_CASE("ground vacuum trajectory has identically zero correlations") {
    auto pb = decoupled_cavity(mhz(0.5), 10e-6);
    RecordingPlan plan;
    plan.coeff_t_lo = 0.0;
    plan.coeff_t_hi = pb.t_end;
    for (int i = 0; i < 5; ++i) plan.snapshot_times.push_back(1e-6 + 2e-6 * i);
    const auto tr = run_simulation(pb, plan);
    QrtEngine qrt(pb.grid, pb.cavity, tr.coeffs);
    std::vector<double> cols;
    for (int i = 0; i < 40; ++i) cols.push_back(0.25e-6 * i);
    const auto grid =
        qrt.output_grid(tr.snapshots, TwoTimeCorrelation::Kind::Normal, cols);
    for (const auto& v : grid.v) CHECK(std::abs(v) < 1e-14);
}

TEST_CASE("thermal seeded cavity: correlation decay against the closed form") {
    const double kappa = mhz(0.5);
    auto pb = decoupled_cavity(kappa, 12e-6);
    const double n0 = 2.5;

    RecordingPlan plan;
    plan.coeff_t_lo = 0.0;
    plan.coeff_t_hi = pb.t_end;
    std::vector<double> rows{1e-6, 2e-6, 4e-6, 6e-6};
    plan.snapshot_times = rows;

    // run by hand so the initial covariance can be seeded
    CovState<double> s;
    initial_state(pb.grid, SpinRegime::Ground, s);
    s.set_nf(n0);
    FastRhs<double> rhs(pb.grid, pb.cavity);
    auto fn = [&](double t, const double* y, double* d) { rhs(t, y, d, {0, 0}); };
    ErrorWeights w(pb.grid, 1.0);
    IntegratorConfig icfg;
    icfg.rel_tol = 1e-10;
    icfg.abs_floor = 1e-12;

    Trajectory tr;
    CoeffRecord& rec = tr.coeffs;
    std::vector<CovSnapshot> snaps;
    size_t next = 0;
    auto on_accept = [&](double t, const double* y) {
        rec.t.push_back(t);
        rec.alpha.push_back({y[0], y[1]});
        rec.p.push_back({y[s.lay.off_p], y[s.lay.off_p + 1]});
        rec.z.push_back(y[s.lay.off_z]);
        while (next < rows.size() && std::abs(rows[next] - t) < 1e-13) {
            CovSnapshot sn;
            sn.t = t;
            sn.nf = y[2];
            sn.ff = {y[3], y[4]};
            sn.vp = {std::complex<double>(y[s.lay.off_vp], y[s.lay.off_vp + 1])};
            sn.vm = {std::complex<double>(y[s.lay.off_vm], y[s.lay.off_vm + 1])};
            sn.vz = {std::complex<double>(y[s.lay.off_vz], y[s.lay.off_vz + 1])};
            snaps.push_back(sn);
            ++next;
        }
    };
    on_accept(0.0, s.y.data());
    integrate_adaptive<double>(s.y, fn, 0.0, pb.t_end, icfg, w, rows,
                               on_accept);

    QrtEngine qrt(pb.grid, pb.cavity, rec);
    std::vector<double> cols;
    for (int i = 0; i <= 60; ++i) cols.push_back(pb.t_end * i / 60.0);
    const auto grid = qrt.output_grid(snaps, TwoTimeCorrelation::Kind::Normal, cols);

    // <da^dag(t0) da(t)> = n0 exp(-kappa t0) exp(-kappa (t - t0)/2)
    for (size_t r = 0; r < snaps.size(); ++r) {
        const double t0 = snaps[r].t;
        CHECK(snaps[r].nf ==
              doctest::Approx(n0 * std::exp(-kappa * t0)).epsilon(1e-8));
        for (size_t c = 0; c < cols.size(); ++c) {
            if (cols[c] < t0) continue;
            const double expect = kappa * n0 * std::exp(-kappa * t0) *
                                  std::exp(-0.5 * kappa * (cols[c] - t0));
            CAPTURE(t0);
            CAPTURE(cols[c]);
            CHECK(grid.at(r, c).real() == doctest::Approx(expect).epsilon(1e-6));
            CHECK(std::abs(grid.at(r, c).imag()) < 1e-9 * expect);
        }
    }

    // hermitian exchange rule of the interpolated accessor
    const double va = std::abs(grid.value(2e-6, 5e-6));
    const double vb = std::abs(grid.value(5e-6, 2e-6));
    CHECK(va == doctest::Approx(vb).epsilon(1e-12));
}

TEST_CASE("temporal modes and projections") {
    auto box = TemporalMode::boxcar(1e-6, 65e-6, 512);
    CHECK(box.norm_check() == doctest::Approx(1.0).epsilon(1e-8));

    // vacuum noise metric and coherent state
    CHECK(noise_metric(0.0, {0.0, 0.0}) == doctest::Approx(1.0));
    CHECK(noise_metric(std::norm(std::complex<double>(1.3, -0.4)), {1.3, -0.4}) ==
          doctest::Approx(1.0));
    CHECK(noise_metric(2.0, {0.0, 0.0}) == doctest::Approx(5.0));

    // projection linearity for mean values
    auto pb = decoupled_cavity(mhz(0.5), 8e-6);
    DriveWaveform::Gaussian g;
    g.a0 = 50.0;
    g.t0 = 3e-6;
    g.sigma_t = 0.5e-6;
    pb.drive.add_gaussian(g);
    const auto tr = run_simulation(pb, {});
    auto f1 = TemporalMode::boxcar(1e-6, 4e-6, 301);
    auto f2 = TemporalMode::gaussian(3e-6, 1e-6, 2.5e-6, 301);
    // resample f2 onto f1's grid for the combination
    auto f2r = TemporalMode::gaussian(2e-6, 1.2e-6, 2.0e-6, 301);
    std::vector<std::complex<double>> comb(f1.f.size());
    for (size_t i = 0; i < comb.size(); ++i) comb[i] = 0.7 * f1.f[i];
    auto fc = TemporalMode::tabulated(f1.t, comb);  // renormalized copy
    const auto p1 = project_mean(tr, f1);
    const auto pc = project_mean(tr, fc);
    CHECK(std::abs(p1 - pc) < 1e-10 * std::abs(p1));
    (void)f2;
    (void)f2r;
}

TEST_CASE("discrete output commutator bookkeeping") {
    // in vacuum the normal-ordered grid vanishes; the commutator delta on the
    // diagonal is represented as 1/dt, so any window much longer than dt
    // integrates to exactly one
    const int n = 257;
    const double width = 20e-6;
    auto f = TemporalMode::boxcar(0.0, width, n);
    const double dt = f.t[1] - f.t[0];
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        acc += w * std::norm(f.f[i]) * (1.0 / dt) * dt * dt;
    }
    CHECK(acc == doctest::Approx(1.0).epsilon(1e-8));
}
