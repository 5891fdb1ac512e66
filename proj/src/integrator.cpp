#include "darkwave/integrator.hpp"

#include <algorithm>
#include <cmath>

namespace darkwave {

ErrorWeights::ErrorWeights(const BinGrid& grid, double cavity_amplitude)
    : lay(grid.size()) {
    const int m = grid.size();
    sqrt_n.resize(m);
    half_n.resize(m);
    double avg = 0.0;
    for (int j = 0; j < m; ++j) {
        half_n[j] = 0.5 * grid.nj(j);
        sqrt_n[j] = std::sqrt(std::max(1.0, grid.nj(j)));
        avg += sqrt_n[j];
    }
    avg /= m;
    matrix_scale = avg * avg;
    cavity_scale = std::max(1.0, cavity_amplitude);
}

double ErrorWeights::scale_at(size_t i) const {
    if (i < 5) return i == 2 ? cavity_scale * cavity_scale : cavity_scale;
    if (i < lay.off_vp) return half_n[(i - lay.off_p) / 2];
    if (i < lay.off_vm) return cavity_scale * sqrt_n[(i - lay.off_vp) / 2];
    if (i < lay.off_vz) return cavity_scale * sqrt_n[(i - lay.off_vm) / 2];
    if (i < lay.off_z) return cavity_scale * sqrt_n[(i - lay.off_vz) / 2];
    if (i < lay.off_pp) return half_n[i - lay.off_z];
    // matrix sectors: recovering (j, k) from a triangle index is costly in
    // the hot loop; the coarse global fluctuation scale is close enough.
    return matrix_scale;
}

namespace {

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

template <typename Real>
void combine(std::vector<Real>& out, const std::vector<Real>& y, double h,
             std::initializer_list<std::pair<double, const std::vector<Real>*>> parts) {
    const size_t n = y.size();
    out.resize(n);
#pragma omp parallel for schedule(static)
    for (size_t i = 0; i < n; ++i) {
        double acc = double(y[i]);
        for (const auto& [c, v] : parts) acc += h * c * double((*v)[i]);
        out[i] = Real(acc);
    }
}

}  // namespace

template <typename Real>
StepStats integrate_adaptive(std::vector<Real>& y, const RhsFn<Real>& rhs,
                             double t0, double t1, const IntegratorConfig& cfg,
                             const ErrorWeights& weights,
                             const std::vector<double>& stops,
                             const AcceptFn<Real>& on_accept,
                             const std::function<double(double)>& h_limit) {
    StepStats st;
    const size_t n = y.size();
    std::vector<Real> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n),
        ynew(n);

    auto err_norm = [&](const std::vector<Real>& ycur,
                        const std::vector<Real>& ynxt) {
        // embedded 4th-order error via the e-coefficients
        double acc = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : acc)
        for (size_t i = 0; i < n; ++i) {
            const double err = e1 * double(k1[i]) + e3 * double(k3[i]) +
                               e4 * double(k4[i]) + e5 * double(k5[i]) +
                               e6 * double(k6[i]) + e7 * double(k7[i]);
            const double sc =
                cfg.rel_tol *
                (weights.scale_at(i) * cfg.abs_floor / cfg.rel_tol +
                 std::max(std::abs(double(ycur[i])), std::abs(double(ynxt[i]))));
            const double q = err / sc;
            acc += q * q;
        }
        return std::sqrt(acc / n);
    };

    std::vector<double> marks = stops;
    marks.push_back(t1);
    std::sort(marks.begin(), marks.end());
    marks.erase(std::remove_if(marks.begin(), marks.end(),
                               [&](double s) { return s <= t0 || s > t1 + 1e-18; }),
                marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    if (marks.empty() || marks.back() < t1) marks.push_back(t1);

    double t = t0;
    double h = cfg.h_init;
    if (h <= 0.0) h = (t1 - t0) * 1e-6;
    if (h_limit) h = std::min(h, h_limit(t));
    bool fresh_k1 = false;

    size_t mark_i = 0;
    double err_prev = 1.0;
    while (t < t1 - 1e-18 * std::abs(t1)) {
        while (mark_i < marks.size() && marks[mark_i] <= t + 1e-18 * std::abs(t1))
            ++mark_i;
        const double target = mark_i < marks.size() ? marks[mark_i] : t1;
        double h_cap = target - t;
        if (cfg.h_max > 0.0) h_cap = std::min(h_cap, cfg.h_max);
        if (h_limit) h_cap = std::min(h_cap, h_limit(t));
        double hs = std::min(h, h_cap);
        bool hit_target = hs >= target - t - 1e-18 * std::abs(target);
        if (hit_target) hs = target - t;
        if (hs < cfg.h_min)
            throw std::runtime_error("adaptive step underflow at t = " +
                                     std::to_string(t));

        if (!fresh_k1) {
            rhs(t, y.data(), k1.data());
            ++st.rhs_evals;
        }
        combine(ytmp, y, hs, {{a21, &k1}});
        rhs(t + c2 * hs, ytmp.data(), k2.data());
        combine(ytmp, y, hs, {{a31, &k1}, {a32, &k2}});
        rhs(t + c3 * hs, ytmp.data(), k3.data());
        combine(ytmp, y, hs, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
        rhs(t + c4 * hs, ytmp.data(), k4.data());
        combine(ytmp, y, hs, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
        rhs(t + c5 * hs, ytmp.data(), k5.data());
        combine(ytmp, y, hs,
                {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
        rhs(t + hs, ytmp.data(), k6.data());
        combine(ynew, y, hs,
                {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        rhs(t + hs, ynew.data(), k7.data());
        st.rhs_evals += 6;

        const double err = err_norm(y, ynew) * hs;
        if (err <= 1.0 || hs <= cfg.h_min * 2.0) {
            t += hs;
            y.swap(ynew);
            k1.swap(k7);  // FSAL
            fresh_k1 = true;
            ++st.accepted;
            if (on_accept) on_accept(t, y.data());
            const double fac = cfg.safety *
                               std::pow(std::max(err, 1e-10), -0.2) *
                               std::pow(std::max(err_prev, 1e-10), 0.04);
            h = hs * std::clamp(fac, 0.2, 5.0);
            err_prev = std::max(err, 1e-10);
        } else {
            ++st.rejected;
            fresh_k1 = true;  // k1 still matches y at time t
            h = hs * std::clamp(cfg.safety * std::pow(err, -0.2), 0.1, 0.9);
        }
    }
    return st;
}

template <typename Real>
StepStats integrate_rk4(std::vector<Real>& y, const RhsFn<Real>& rhs, double t0,
                        double t1, double dt, const AcceptFn<Real>& on_accept) {
    StepStats st;
    const size_t n = y.size();
    if (dt <= 0.0) throw std::invalid_argument("RK4 needs a positive step");
    std::vector<Real> k1(n), k2(n), k3(n), k4(n), ytmp(n);
    const long steps = std::lround(std::ceil((t1 - t0) / dt - 1e-9));
    const double h = (t1 - t0) / steps;
    double t = t0;
    for (long i = 0; i < steps; ++i) {
        rhs(t, y.data(), k1.data());
        combine(ytmp, y, h, {{0.5, &k1}});
        rhs(t + 0.5 * h, ytmp.data(), k2.data());
        combine(ytmp, y, h, {{0.5, &k2}});
        rhs(t + 0.5 * h, ytmp.data(), k3.data());
        combine(ytmp, y, h, {{1.0, &k3}});
        rhs(t + h, ytmp.data(), k4.data());
        combine(y, y, h,
                {{1.0 / 6, &k1}, {1.0 / 3, &k2}, {1.0 / 3, &k3}, {1.0 / 6, &k4}});
        st.rhs_evals += 4;
        ++st.accepted;
        t = t0 + (i + 1) * h;
        if (on_accept) on_accept(t, y.data());
    }
    return st;
}

template StepStats integrate_adaptive<double>(
    std::vector<double>&, const RhsFn<double>&, double, double,
    const IntegratorConfig&, const ErrorWeights&, const std::vector<double>&,
    const AcceptFn<double>&, const std::function<double(double)>&);
template StepStats integrate_adaptive<float>(
    std::vector<float>&, const RhsFn<float>&, double, double,
    const IntegratorConfig&, const ErrorWeights&, const std::vector<double>&,
    const AcceptFn<float>&, const std::function<double(double)>&);
template StepStats integrate_rk4<double>(std::vector<double>&,
                                         const RhsFn<double>&, double, double,
                                         double, const AcceptFn<double>&);
template StepStats integrate_rk4<float>(std::vector<float>&, const RhsFn<float>&,
                                        double, double, double,
                                        const AcceptFn<float>&);

}  // namespace darkwave
