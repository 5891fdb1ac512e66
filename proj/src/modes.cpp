#include "darkwave/modes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace darkwave {

using C = std::complex<double>;

namespace {
double grid_step(const std::vector<double>& t) {
    if (t.size() < 2) throw std::invalid_argument("mode grid too small");
    return t[1] - t[0];
}
}  // namespace

TemporalMode TemporalMode::boxcar(double t_start, double width, int samples) {
    if (width <= 0.0 || samples < 2) throw std::invalid_argument("bad boxcar");
    TemporalMode m;
    m.t.resize(samples);
    m.f.assign(samples, C(1.0, 0.0));
    for (int i = 0; i < samples; ++i)
        m.t[i] = t_start + width * i / (samples - 1);
    m.normalize();
    return m;
}

TemporalMode TemporalMode::tabulated(std::vector<double> t, std::vector<C> f) {
    if (t.size() != f.size() || t.size() < 2)
        throw std::invalid_argument("bad tabulated mode");
    TemporalMode m;
    m.t = std::move(t);
    m.f = std::move(f);
    m.normalize();
    return m;
}

TemporalMode TemporalMode::matched_to_mean(const Trajectory& tr, double t_lo,
                                           double t_hi, int samples) {
    TemporalMode m;
    m.t.resize(samples);
    m.f.resize(samples);
    size_t k = 0;
    for (int i = 0; i < samples; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / (samples - 1);
        while (k + 2 < tr.t.size() && tr.t[k + 1] < t) ++k;
        const double u = (t - tr.t[k]) /
                         std::max(1e-300, tr.t[k + 1] - tr.t[k]);
        const C a = tr.a_out[k] * (1.0 - u) + tr.a_out[k + 1] * u;
        m.t[i] = t;
        m.f[i] = std::conj(a);
    }
    m.normalize();
    return m;
}

TemporalMode TemporalMode::gaussian(double center, double sigma, double halfspan,
                                    int samples) {
    TemporalMode m;
    m.t.resize(samples);
    m.f.resize(samples);
    for (int i = 0; i < samples; ++i) {
        const double t = center - halfspan + 2.0 * halfspan * i / (samples - 1);
        m.t[i] = t;
        const double u = (t - center) / sigma;
        m.f[i] = std::exp(-0.5 * u * u);
    }
    m.normalize();
    return m;
}

double TemporalMode::norm_check() const {
    const double h = grid_step(t);
    double acc = 0.0;
    for (size_t i = 0; i < f.size(); ++i)
        acc += std::norm(f[i]) * ((i == 0 || i + 1 == f.size()) ? 0.5 : 1.0);
    return acc * h;
}

void TemporalMode::normalize() {
    const double n = norm_check();
    if (n <= 0.0) throw std::invalid_argument("mode has zero norm");
    const double s = 1.0 / std::sqrt(n);
    for (auto& v : f) v *= s;
}

std::complex<double> project_mean(const Trajectory& tr, const TemporalMode& f) {
    const double h = grid_step(f.t);
    C acc{};
    size_t k = 0;
    for (size_t i = 0; i < f.t.size(); ++i) {
        const double t = f.t[i];
        while (k + 2 < tr.t.size() && tr.t[k + 1] < t) ++k;
        const double u =
            (t - tr.t[k]) / std::max(1e-300, tr.t[k + 1] - tr.t[k]);
        const C a = tr.a_out[k] * (1.0 - u) + tr.a_out[k + 1] * u;
        const double w = (i == 0 || i + 1 == f.t.size()) ? 0.5 : 1.0;
        acc += w * f.f[i] * a;
    }
    return acc * h;
}

double project_photon_number(const TwoTimeCorrelation& grid, const TemporalMode& f) {
    if (grid.kind != TwoTimeCorrelation::Kind::Normal)
        throw std::invalid_argument("photon number needs the normal-ordered grid");
    const double h = grid_step(f.t);
    C acc{};
    for (size_t i = 0; i < f.t.size(); ++i) {
        const double wi = (i == 0 || i + 1 == f.t.size()) ? 0.5 : 1.0;
        for (size_t j = 0; j < f.t.size(); ++j) {
            const double wj = (j == 0 || j + 1 == f.t.size()) ? 0.5 : 1.0;
            acc += wi * wj * std::conj(f.f[i]) * f.f[j] *
                   grid.value(f.t[i], f.t[j]);
        }
    }
    return (acc * h * h).real();
}

std::complex<double> project_pair_moment(const TwoTimeCorrelation& grid,
                                         const TemporalMode& fa,
                                         const TemporalMode& fb) {
    if (grid.kind != TwoTimeCorrelation::Kind::Anomalous)
        throw std::invalid_argument("pair moment needs the anomalous grid");
    const double ha = grid_step(fa.t), hb = grid_step(fb.t);
    C acc{};
    for (size_t i = 0; i < fa.t.size(); ++i) {
        const double wi = (i == 0 || i + 1 == fa.t.size()) ? 0.5 : 1.0;
        for (size_t j = 0; j < fb.t.size(); ++j) {
            const double wj = (j == 0 || j + 1 == fb.t.size()) ? 0.5 : 1.0;
            acc += wi * wj * fa.f[i] * fb.f[j] * grid.value(fa.t[i], fb.t[j]);
        }
    }
    return acc * ha * hb;
}

double noise_metric(double photon_number, std::complex<double> mean) {
    return 2.0 * (photon_number - std::norm(mean)) + 1.0;
}

TemporalMode matched_rase_mode(const TwoTimeCorrelation& corr,
                               const TemporalMode& f_ase,
                               const std::vector<double>& t_rase) {
    const double ha = grid_step(f_ase.t);
    std::vector<C> g(t_rase.size());
    for (size_t j = 0; j < t_rase.size(); ++j) {
        C acc{};
        for (size_t i = 0; i < f_ase.t.size(); ++i) {
            const double wi = (i == 0 || i + 1 == f_ase.t.size()) ? 0.5 : 1.0;
            acc += wi * f_ase.f[i] * corr.value(f_ase.t[i], t_rase[j]);
        }
        g[j] = std::conj(acc * ha);
    }
    return TemporalMode::tabulated(std::vector<double>(t_rase), std::move(g));
}

CorrelationTrace ase_rase_correlation(const TwoTimeCorrelation& corr,
                                      double pivot_t0, double ase_lo, double ase_hi,
                                      const std::vector<double>& offsets) {
    CorrelationTrace tr;
    tr.t_d = offsets;
    tr.value.resize(offsets.size());
    const int n = 257;
    const double h = (ase_hi - ase_lo) / (n - 1);
    for (size_t k = 0; k < offsets.size(); ++k) {
        C acc{};
        for (int i = 0; i < n; ++i) {
            const double t = ase_lo + i * h;
            const double tp = 2.0 * pivot_t0 - t + offsets[k];
            if (tp < corr.t_cols.front() || tp > corr.t_cols.back()) continue;
            const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
            acc += w * corr.value(t, tp);
        }
        tr.value[k] = acc * h;
    }
    return tr;
}

SimDuanSimon sim_duan_simon(const TwoTimeCorrelation& grid_aa,
                            const TwoTimeCorrelation& grid_rr,
                            const TwoTimeCorrelation& grid_ar,
                            const TemporalMode& f_ase, const TemporalMode& f_rase) {
    SimDuanSimon out;
    out.n_ase = project_photon_number(grid_aa, f_ase);
    out.n_rase = project_photon_number(grid_rr, f_rase);
    out.corr = project_pair_moment(grid_ar, f_ase, f_rase);
    const auto m = duan_simon_min(out.n_ase, out.n_rase, out.corr);
    out.r_min = m.r_min;
    out.s_opt = m.s_opt;
    return out;
}

}  // namespace darkwave
