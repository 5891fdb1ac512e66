#include "darkwave/qrt.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace darkwave {

using C = std::complex<double>;
namespace {
constexpr C I{0.0, 1.0};
}

std::complex<double> TwoTimeCorrelation::value(double t, double tp) const {
    // normal: <da_out^dag(t) da_out(t')> = conj at swapped times;
    // anomalous: symmetric under t <-> t'.
    const bool swap_needed = t > tp;
    const double r = swap_needed ? tp : t;
    const double c = swap_needed ? t : tp;
    auto locate = [](const std::vector<double>& g, double x) {
        auto it = std::upper_bound(g.begin(), g.end(), x);
        size_t i = it - g.begin();
        if (i == 0) i = 1;
        if (i >= g.size()) i = g.size() - 1;
        return i;
    };
    const size_t ri = locate(t_rows, r), ci = locate(t_cols, c);
    const double fr = (r - t_rows[ri - 1]) /
                      std::max(1e-300, t_rows[ri] - t_rows[ri - 1]);
    const double fc = (c - t_cols[ci - 1]) /
                      std::max(1e-300, t_cols[ci] - t_cols[ci - 1]);
    auto g = [&](size_t a, size_t b) { return at(a, b); };
    C val = (1 - fr) * ((1 - fc) * g(ri - 1, ci - 1) + fc * g(ri - 1, ci)) +
            fr * ((1 - fc) * g(ri, ci - 1) + fc * g(ri, ci));
    if (swap_needed && kind == Kind::Normal) val = std::conj(val);
    return val;
}

QrtEngine::QrtEngine(const BinGrid& grid, const CavitySpec& cavity,
                     const CoeffRecord& coeffs, double rel_tol)
    : grid_(grid), cavity_(cavity), coeffs_(coeffs), rel_tol_(rel_tol),
      kappa_(cavity.kappa), m_(grid.size()) {
    if (coeffs_.t.size() < 4)
        throw std::invalid_argument("QRT needs a recorded mean trajectory");
}

// 4-point Lagrange interpolation of the recorded (rotating-frame) means.
void QrtEngine::coeff_at(double t, C& alpha, std::vector<C>& p,
                         std::vector<double>& z) const {
    const auto& ts = coeffs_.t;
    auto it = std::upper_bound(ts.begin(), ts.end(), t);
    long i1 = std::clamp<long>(it - ts.begin() - 1, 1, long(ts.size()) - 3);
    const long i0 = i1 - 1, i2 = i1 + 1, i3 = i1 + 2;
    const double t0 = ts[i0], t1 = ts[i1], t2 = ts[i2], t3 = ts[i3];
    double w0 = (t - t1) * (t - t2) * (t - t3) /
                ((t0 - t1) * (t0 - t2) * (t0 - t3));
    double w1 = (t - t0) * (t - t2) * (t - t3) /
                ((t1 - t0) * (t1 - t2) * (t1 - t3));
    double w2 = (t - t0) * (t - t1) * (t - t3) /
                ((t2 - t0) * (t2 - t1) * (t2 - t3));
    double w3 = (t - t0) * (t - t1) * (t - t2) /
                ((t3 - t0) * (t3 - t1) * (t3 - t2));
    alpha = w0 * coeffs_.alpha[i0] + w1 * coeffs_.alpha[i1] +
            w2 * coeffs_.alpha[i2] + w3 * coeffs_.alpha[i3];
    p.resize(m_);
    z.resize(m_);
    const size_t o0 = i0 * size_t(m_), o1 = i1 * size_t(m_), o2 = i2 * size_t(m_),
                 o3 = i3 * size_t(m_);
    for (int j = 0; j < m_; ++j) {
        p[j] = w0 * coeffs_.p[o0 + j] + w1 * coeffs_.p[o1 + j] +
               w2 * coeffs_.p[o2 + j] + w3 * coeffs_.p[o3 + j];
        z[j] = w0 * coeffs_.z[o0 + j] + w1 * coeffs_.z[o1 + j] +
               w2 * coeffs_.z[o2 + j] + w3 * coeffs_.z[o3 + j];
    }
}

// State vector: [Ca, Cad, Cp(m), Cm(m), Cz(m)] in the rotating frame.
void QrtEngine::rhs(double t, const std::vector<C>& c, std::vector<C>& dc) const {
    C alpha;
    thread_local std::vector<C> p;
    thread_local std::vector<double> z;
    coeff_at(t, alpha, p, z);
    const C alc = std::conj(alpha);
    const double hk = 0.5 * kappa_;
    const C idl{0.0, cavity_.delta};

    dc.resize(c.size());
    const C* cp = c.data() + 2;
    const C* cm = cp + m_;
    const C* cz = cm + m_;
    C* dcp = dc.data() + 2;
    C* dcm = dcp + m_;
    C* dcz = dcm + m_;

    C sum_m{}, sum_p{};
    for (int j = 0; j < m_; ++j) {
        const C gam = grid_.g[j] * std::polar(1.0, -grid_.omega[j] * t);
        const C gbm = std::conj(gam);
        sum_m += gam * cm[j];
        sum_p += gbm * cp[j];
        dcp[j] = -2.0 * I * gam * (alc * cz[j] + z[j] * c[1]);
        dcm[j] = 2.0 * I * gbm * (alpha * cz[j] + z[j] * c[0]);
        dcz[j] = -I * gbm * (alpha * cp[j] + p[j] * c[0]) +
                 I * gam * (alc * cm[j] + std::conj(p[j]) * c[1]);
    }
    dc[0] = (-idl - hk) * c[0] - I * sum_m;
    dc[1] = (idl - hk) * c[1] + I * sum_p;
}

namespace {
// Dormand-Prince 5(4) on a complex vector with scalar error weighting.
struct MiniDopri {
    const std::function<void(double, const std::vector<C>&, std::vector<C>&)>& f;
    double rel_tol;
    std::vector<double> scale;

    void run(std::vector<C>& y, double t0, double t1,
             const std::vector<double>& samples, std::vector<C>& out_ca) {
        const size_t n = y.size();
        std::vector<C> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n),
            ynew(n);
        auto build = [&](std::vector<C>& out,
                         std::initializer_list<std::pair<double, const std::vector<C>*>>
                             parts,
                         double h) {
            for (size_t i = 0; i < n; ++i) {
                C acc = y[i];
                for (const auto& [cc, v] : parts) acc += h * cc * (*v)[i];
                out[i] = acc;
            }
        };
        double t = t0;
        double h = std::max((t1 - t0) * 1e-4, 1e-12);
        size_t si = 0;
        auto record_until = [&](double tcur) {
            while (si < samples.size() && samples[si] <= tcur + 1e-15)
                out_ca[si++] = y[0];
        };
        record_until(t);
        f(t, y, k1);
        while (t < t1 - 1e-15) {
            const double target =
                si < samples.size() ? std::min(samples[si], t1) : t1;
            double hs = std::min(h, target - t);
            if (hs <= 1e-18) {
                record_until(target);
                continue;
            }
            build(ytmp, {{0.2, &k1}}, hs);
            f(t + 0.2 * hs, ytmp, k2);
            build(ytmp, {{3.0 / 40, &k1}, {9.0 / 40, &k2}}, hs);
            f(t + 0.3 * hs, ytmp, k3);
            build(ytmp, {{44.0 / 45, &k1}, {-56.0 / 15, &k2}, {32.0 / 9, &k3}}, hs);
            f(t + 0.8 * hs, ytmp, k4);
            build(ytmp,
                  {{19372.0 / 6561, &k1},
                   {-25360.0 / 2187, &k2},
                   {64448.0 / 6561, &k3},
                   {-212.0 / 729, &k4}},
                  hs);
            f(t + 8.0 / 9 * hs, ytmp, k5);
            build(ytmp,
                  {{9017.0 / 3168, &k1},
                   {-355.0 / 33, &k2},
                   {46732.0 / 5247, &k3},
                   {49.0 / 176, &k4},
                   {-5103.0 / 18656, &k5}},
                  hs);
            f(t + hs, ytmp, k6);
            build(ynew,
                  {{35.0 / 384, &k1},
                   {500.0 / 1113, &k3},
                   {125.0 / 192, &k4},
                   {-2187.0 / 6784, &k5},
                   {11.0 / 84, &k6}},
                  hs);
            f(t + hs, ynew, k7);

            double err = 0.0;
            for (size_t i = 0; i < n; ++i) {
                const C e = 71.0 / 57600 * k1[i] - 71.0 / 16695 * k3[i] +
                            71.0 / 1920 * k4[i] - 17253.0 / 339200 * k5[i] +
                            22.0 / 525 * k6[i] - 1.0 / 40 * k7[i];
                const double w = rel_tol * (scale[i] + std::abs(y[i]));
                err += std::norm(hs * e) / (w * w);
            }
            err = std::sqrt(err / n);
            if (err <= 1.0) {
                y.swap(ynew);
                t += hs;
                k1.swap(k7);  // FSAL
                record_until(t);
                h = hs * std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2),
                                    0.2, 5.0);
            } else {
                h = hs * std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
            }
        }
        record_until(t1 + 1e-12);
    }
};
}  // namespace

std::vector<C> QrtEngine::propagate(const CovSnapshot& snap, LeftOp op,
                                    const std::vector<double>& t_cols) const {
    const size_t nc = t_cols.size();
    std::vector<C> out(nc, C{});
    std::vector<double> samples;
    for (double tc : t_cols)
        if (tc >= snap.t - 1e-15) samples.push_back(std::max(tc, snap.t));
    if (samples.empty()) return out;

    std::vector<C> y(2 + 3 * size_t(m_));
    if (op == LeftOp::ADag) {
        y[0] = snap.nf;
        y[1] = snap.ff;
        for (int j = 0; j < m_; ++j) {
            y[2 + j] = snap.vp[j];
            y[2 + m_ + j] = snap.vm[j];
            y[2 + 2 * m_ + j] = snap.vz[j];
        }
    } else {
        y[0] = std::conj(snap.ff);
        y[1] = snap.nf + 1.0;  // <da da^dag> = <da^dag da> + 1
        for (int j = 0; j < m_; ++j) {
            y[2 + j] = std::conj(snap.vm[j]);
            y[2 + m_ + j] = std::conj(snap.vp[j]);
            y[2 + 2 * m_ + j] = std::conj(snap.vz[j]);
        }
    }

    // error scales: photon-level for the cavity slots, sqrt(N) for spins
    std::vector<double> scale(y.size(), 1.0);
    for (int j = 0; j < m_; ++j) {
        const double s = std::sqrt(std::max(1.0, grid_.nj(j)));
        scale[2 + j] = scale[2 + m_ + j] = scale[2 + 2 * m_ + j] = s;
    }

    std::function<void(double, const std::vector<C>&, std::vector<C>&)> f =
        [this](double t, const std::vector<C>& c, std::vector<C>& dc) {
            rhs(t, c, dc);
        };
    std::vector<C> ca(samples.size());
    MiniDopri stepper{f, rel_tol_, std::move(scale)};
    stepper.run(y, snap.t, samples.back(), samples, ca);

    size_t si = 0;
    for (size_t i = 0; i < nc; ++i)
        if (t_cols[i] >= snap.t - 1e-15) out[i] = ca[si++];
    return out;
}

TwoTimeCorrelation QrtEngine::output_grid(const std::vector<CovSnapshot>& rows,
                                          TwoTimeCorrelation::Kind kind,
                                          const std::vector<double>& t_cols) const {
    TwoTimeCorrelation g;
    g.kind = kind;
    g.t_cols = t_cols;
    g.t_rows.resize(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) g.t_rows[r] = rows[r].t;
    g.v.assign(rows.size() * t_cols.size(), C{});
#pragma omp parallel for schedule(dynamic)
    for (size_t r = 0; r < rows.size(); ++r) {
        const auto row =
            propagate(rows[r],
                      kind == TwoTimeCorrelation::Kind::Normal ? LeftOp::ADag
                                                               : LeftOp::A,
                      t_cols);
        for (size_t c = 0; c < t_cols.size(); ++c)
            g.v[r * t_cols.size() + c] = kappa_ * row[c];
    }
    return g;
}

}  // namespace darkwave
