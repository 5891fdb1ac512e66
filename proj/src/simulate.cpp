#include "darkwave/simulate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "darkwave/quadrature.hpp"
#include "darkwave/units.hpp"

namespace darkwave {

void SimConfig::check_dt(double omega_rabi, double kappa, double band) const {
    if (integrator != IntegratorConfig::Kind::Rk4Fixed) return;
    const double fastest =
        std::min({two_pi / std::max(omega_rabi, 1.0),
                  two_pi / std::max(kappa, 1.0), two_pi / std::max(band, 1.0)});
    if (dt > 0.05 * fastest)
        throw std::invalid_argument(
            "fixed step too coarse: dt must be <= 0.05 of the fastest period");
}

namespace {

template <typename Real>
Trajectory run_impl(const SimProblem& pb, const RecordingPlan& plan) {
    const auto t_begin = std::chrono::steady_clock::now();
    const BinGrid& grid = pb.grid;
    const int m = grid.size();

    CovState<Real> state;
    initial_state(grid, pb.start, state);
    const StateLayout lay = state.lay;

    FastRhs<Real> rhs(grid, pb.cavity);
    auto rhs_fn = [&](double t, const Real* y, Real* dy) {
        rhs(t, y, dy, pb.drive.value(t));
    };

    Trajectory tr;
    auto check = check_rephasing(grid, pb.t_end);
    if (!check.ok) tr.warnings.push_back(check.message);

    const double sqk = std::sqrt(pb.cavity.kappa);
    const double a_scale =
        2.0 / sqk *
        std::max({1.0,
                  [&] {
                      double peak = 0.0;
                      for (const auto& w : pb.drive.wursts()) peak = std::max(peak, w.a0_in);
                      for (const auto& g : pb.drive.gaussians()) peak = std::max(peak, g.a0);
                      return peak;
                  }()});
    ErrorWeights weights(grid, a_scale);

    std::vector<std::complex<double>> phase;
    size_t next_snap = 0;
    const bool coeff_window = plan.coeff_t_hi > plan.coeff_t_lo;

    auto on_accept = [&](double t, const Real* y) {
        tr.t.push_back(t);
        rhs.phases(t, phase);
        const std::complex<double> a{double(y[0]), double(y[1])};
        const std::complex<double> a_lab =
            a * std::polar(1.0, -pb.cavity.delta * t);
        tr.a_mean.push_back(a_lab);
        tr.a_out.push_back(pb.drive.value(t) - sqk * a_lab);
        double nz = 0.0;
        for (int j = 0; j < m; ++j) nz += double(y[lay.off_z + j]);
        tr.sz_total.push_back(nz);
        tr.photons.push_back(double(y[2]) + std::norm(a));

        if (coeff_window && t >= plan.coeff_t_lo - 1e-15 &&
            t <= plan.coeff_t_hi + 1e-15) {
            tr.coeffs.t.push_back(t);
            tr.coeffs.alpha.push_back(a);
            for (int j = 0; j < m; ++j) {
                tr.coeffs.p.push_back(
                    std::complex<double>(double(y[lay.off_p + 2 * j]),
                                         double(y[lay.off_p + 2 * j + 1])));
                tr.coeffs.z.push_back(double(y[lay.off_z + j]));
            }
        }
        while (next_snap < plan.snapshot_times.size() &&
               std::abs(plan.snapshot_times[next_snap] - t) < 1e-13) {
            CovSnapshot s;
            s.t = t;
            s.nf = double(y[2]);
            s.ff = {double(y[3]), double(y[4])};
            s.vp.resize(m);
            s.vm.resize(m);
            s.vz.resize(m);
            for (int j = 0; j < m; ++j) {
                s.vp[j] = {double(y[lay.off_vp + 2 * j]),
                           double(y[lay.off_vp + 2 * j + 1])};
                s.vm[j] = {double(y[lay.off_vm + 2 * j]),
                           double(y[lay.off_vm + 2 * j + 1])};
                s.vz[j] = {double(y[lay.off_vz + 2 * j]),
                           double(y[lay.off_vz + 2 * j + 1])};
            }
            tr.snapshots.push_back(std::move(s));
            ++next_snap;
        }
    };

    on_accept(0.0, state.y.data());  // record the initial point

    if (pb.config.integrator == IntegratorConfig::Kind::Rk4Fixed) {
        double rabi = 0.0;
        for (const auto& w : pb.drive.wursts())
            rabi = std::max(rabi, 2.0 * (2.0 * w.a0_in / sqk) *
                                      *std::max_element(grid.g.begin(), grid.g.end()));
        pb.config.check_dt(rabi, pb.cavity.kappa, grid.xi * grid.gamma);
        tr.stats = integrate_rk4(state.y, RhsFn<Real>(rhs_fn), 0.0, pb.t_end,
                                 pb.config.dt, AcceptFn<Real>(on_accept));
    } else {
        IntegratorConfig icfg;
        icfg.kind = IntegratorConfig::Kind::AdaptiveRk;
        icfg.abs_floor = pb.config.abs_floor;
        icfg.h_min = 1e-13;
        const double g0 = *std::max_element(grid.g.begin(), grid.g.end());
        auto h_limit = [&](double t) {
            const double rate = pb.drive.local_rate_scale(t, pb.cavity.kappa, g0);
            return 1.5 / rate;
        };
        // tolerance tightens while an ARP is active; split at segment edges
        std::vector<double> edges{0.0, pb.t_end};
        for (const auto& w : pb.drive.wursts()) {
            edges.push_back(w.t_start);
            edges.push_back(w.t_start + w.t_w);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        for (size_t i = 0; i + 1 < edges.size(); ++i) {
            const double a = edges[i], b = edges[i + 1];
            if (b <= 0.0 || a >= pb.t_end) continue;
            const double lo = std::max(a, 0.0), hi = std::min(b, pb.t_end);
            icfg.rel_tol = pb.drive.arp_active(0.5 * (lo + hi))
                               ? pb.config.rel_tol_drive
                               : pb.config.rel_tol_free;
            auto st = integrate_adaptive(state.y, RhsFn<Real>(rhs_fn), lo, hi,
                                         icfg, weights, plan.snapshot_times,
                                         AcceptFn<Real>(on_accept), h_limit);
            tr.stats.accepted += st.accepted;
            tr.stats.rejected += st.rejected;
            tr.stats.rhs_evals += st.rhs_evals;
        }
    }

    tr.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin)
            .count();
    return tr;
}

}  // namespace

Trajectory run_simulation(const SimProblem& pb, const RecordingPlan& plan) {
    for (double s : plan.snapshot_times)
        if (s < 0.0 || s > pb.t_end)
            throw std::invalid_argument("snapshot time outside the run");
    if (pb.config.single_precision) return run_impl<float>(pb, plan);
    return run_impl<double>(pb, plan);
}

double output_energy(const Trajectory& tr, double t_lo, double t_hi) {
    double acc = 0.0;
    for (size_t i = 0; i + 1 < tr.t.size(); ++i) {
        const double a = tr.t[i], b = tr.t[i + 1];
        if (b <= t_lo || a >= t_hi) continue;
        acc += 0.5 * (std::norm(tr.a_out[i]) + std::norm(tr.a_out[i + 1])) * (b - a);
    }
    return acc;
}

double output_peak_time(const Trajectory& tr, double t_lo, double t_hi) {
    double best = t_lo, val = -1.0;
    for (size_t i = 0; i < tr.t.size(); ++i) {
        if (tr.t[i] < t_lo || tr.t[i] > t_hi) continue;
        const double v = std::abs(tr.a_out[i]);
        if (v > val) {
            val = v;
            best = tr.t[i];
        }
    }
    return best;
}

double drive_energy(const DriveWaveform& drive, double t_lo, double t_hi) {
    return integrate([&](double t) { return std::norm(drive.value(t)); }, t_lo,
                     t_hi, 1e-12)
        .value;
}

}  // namespace darkwave
