#include "darkwave/rhs_reference.hpp"

#include <functional>

namespace darkwave {

using C = std::complex<double>;
namespace {
constexpr C I{0.0, 1.0};
}

void RawState::resize(int bins) {
    m = bins;
    sp.assign(m, C{});
    sz.assign(m, 0.0);
    adp.assign(m, C{});
    adm.assign(m, C{});
    adz.assign(m, C{});
    pp.assign(size_t(m) * m, C{});
    zp.assign(size_t(m) * m, C{});
    mp.assign(size_t(m) * m, C{});
    zz.assign(size_t(m) * m, 0.0);
    a = add = C{};
    n = 0.0;
}

RawState raw_initial_state(const BinGrid& grid, bool excited) {
    RawState s;
    s.resize(grid.size());
    for (int j = 0; j < s.m; ++j) {
        s.sz[j] = (excited ? 0.5 : -0.5) * grid.nj(j);
        // <S-_j S+_j> on the fully polarized state: N_j (ground), 0 (excited)
        if (!excited) s.MP(j, j) = grid.nj(j);
    }
    for (int j = 0; j < s.m; ++j)
        for (int k = 0; k < s.m; ++k) s.ZZ(j, k) = s.sz[j] * s.sz[k];
    return s;
}

// Direct transcription of the second-order mean-field equations. Third-order
// moments close as <ABC> = <AB><C> + <AC><B> + <A><BC> - 2<A><B><C>; same-bin
// products keep the collective angular-momentum commutators explicit.
void rhs_reference(const RawState& s, const BinGrid& grid, const CavitySpec& cavity,
                   C drive, RawState& ds) {
    const int m = s.m;
    ds.resize(m);
    const double kappa = cavity.kappa;
    const double delta = cavity.delta;
    const double sqk = std::sqrt(kappa);
    const C a = s.a;
    const C ad = std::conj(a);
    const C E = drive;

    C sum_gm{};
    for (int j = 0; j < m; ++j) sum_gm += grid.g[j] * std::conj(s.sp[j]);
    ds.a = -I * delta * a - 0.5 * kappa * a + sqk * E - I * sum_gm;

    C dn{};
    for (int j = 0; j < m; ++j)
        dn += I * grid.g[j] * (std::conj(s.adm[j]) - s.adm[j]);
    ds.n = dn.real() - kappa * s.n + 2.0 * sqk * (std::conj(E) * a).real();

    C dadd = 2.0 * I * delta * s.add - kappa * s.add + 2.0 * sqk * std::conj(E) * ad;
    for (int j = 0; j < m; ++j) dadd += 2.0 * I * grid.g[j] * s.adp[j];
    ds.add = dadd;

    for (int j = 0; j < m; ++j) {
        const double g = grid.g[j];
        const double w = grid.omega[j];
        ds.sp[j] = I * w * s.sp[j] - 2.0 * I * g * s.adz[j];
        ds.sz[j] = (I * g * (s.adm[j] - std::conj(s.adm[j]))).real();

        C row_pp{}, row_mp{}, row_zp{};
        for (int k = 0; k < m; ++k) {
            row_pp += grid.g[k] * s.PP(j, k);
            row_mp += grid.g[k] * s.MP(j, k);
            row_zp += grid.g[k] * s.ZP(j, k);
        }

        const C t_ddz = s.add * s.sz[j] + 2.0 * ad * s.adz[j] - 2.0 * ad * ad * s.sz[j];
        ds.adp[j] = I * row_pp + (I * (delta + w) - 0.5 * kappa) * s.adp[j] +
                    sqk * std::conj(E) * s.sp[j] - 2.0 * I * g * t_ddz;

        const C t_daz = s.n * s.sz[j] + s.adz[j] * a + ad * std::conj(s.adz[j]) -
                        2.0 * std::norm(a) * s.sz[j];
        ds.adm[j] = I * row_mp + (I * (delta - w) - 0.5 * kappa) * s.adm[j] +
                    2.0 * I * g * s.sz[j] + sqk * std::conj(E) * std::conj(s.sp[j]) +
                    2.0 * I * g * t_daz;

        const C t_dap = s.n * s.sp[j] + s.adp[j] * a + ad * std::conj(s.adm[j]) -
                        2.0 * std::norm(a) * s.sp[j];
        const C t_ddm = s.add * std::conj(s.sp[j]) + 2.0 * ad * s.adm[j] -
                        2.0 * ad * ad * std::conj(s.sp[j]);
        ds.adz[j] = I * row_zp + (I * delta - 0.5 * kappa) * s.adz[j] +
                    sqk * std::conj(E) * s.sz[j] - I * g * (s.sp[j] + t_dap) +
                    I * g * t_ddm;
    }

    for (int j = 0; j < m; ++j) {
        const double gj = grid.g[j];
        const double wj = grid.omega[j];
        for (int k = 0; k < m; ++k) {
            const double gk = grid.g[k];
            const double wk = grid.omega[k];

            const C x1 = s.adz[j] * s.sp[k] + s.adp[k] * s.sz[j] + ad * s.ZP(j, k) -
                         2.0 * ad * s.sz[j] * s.sp[k];
            const C x2 = s.adp[j] * s.sz[k] + s.adz[k] * s.sp[j] + ad * s.ZP(k, j) -
                         2.0 * ad * s.sp[j] * s.sz[k];
            ds.PP(j, k) = I * (wj + wk) * s.PP(j, k) - 2.0 * I * gj * x1 -
                          2.0 * I * gk * x2;

            const C y1 = std::conj(s.adm[j]) * s.sp[k] + std::conj(s.adm[k]) * s.sp[j] +
                         a * s.PP(j, k) - 2.0 * a * s.sp[j] * s.sp[k];
            const C y2 = s.adm[j] * s.sp[k] + s.adp[k] * std::conj(s.sp[j]) +
                         ad * s.MP(j, k) - 2.0 * ad * std::conj(s.sp[j]) * s.sp[k];
            const C y3 = s.adz[j] * s.sz[k] + s.adz[k] * s.sz[j] + ad * s.ZZ(j, k) -
                         2.0 * ad * s.sz[j] * s.sz[k];
            ds.ZP(j, k) = I * wk * s.ZP(j, k) - I * gj * y1 + I * gj * y2 -
                          2.0 * I * gk * y3;

            const C z1 = std::conj(s.adz[j]) * s.sp[k] + std::conj(s.adm[k]) * s.sz[j] +
                         a * s.ZP(j, k) - 2.0 * a * s.sz[j] * s.sp[k];
            const C z2 = s.adm[j] * s.sz[k] + s.adz[k] * std::conj(s.sp[j]) +
                         ad * std::conj(s.ZP(k, j)) -
                         2.0 * ad * std::conj(s.sp[j]) * s.sz[k];
            ds.MP(j, k) = I * (wk - wj) * s.MP(j, k) + 2.0 * I * gj * z1 -
                          2.0 * I * gk * z2;

            const C w1 = std::conj(s.adm[j]) * s.sz[k] + std::conj(s.adz[k]) * s.sp[j] +
                         a * s.ZP(k, j) - 2.0 * a * s.sp[j] * s.sz[k];
            const C w4 = s.adz[j] * std::conj(s.sp[k]) + s.adm[k] * s.sz[j] +
                         ad * std::conj(s.ZP(j, k)) -
                         2.0 * ad * s.sz[j] * std::conj(s.sp[k]);
            ds.ZZ(j, k) =
                (-I * gj * w1 + I * gj * z2 - I * gk * z1 + I * gk * w4).real();
        }
        // same-bin commutator extras
        ds.PP(j, j) += 2.0 * I * gj * s.adp[j];
        ds.ZZ(j, j) += (I * gj * (std::conj(s.adm[j]) - s.adm[j])).real();
    }
}

namespace {
void axpy(RawState& y, double c, const RawState& x) {
    y.a += c * x.a;
    y.n += c * x.n;
    y.add += c * x.add;
    for (int j = 0; j < y.m; ++j) {
        y.sp[j] += c * x.sp[j];
        y.sz[j] += c * x.sz[j];
        y.adp[j] += c * x.adp[j];
        y.adm[j] += c * x.adm[j];
        y.adz[j] += c * x.adz[j];
    }
    for (size_t i = 0; i < y.pp.size(); ++i) {
        y.pp[i] += c * x.pp[i];
        y.zp[i] += c * x.zp[i];
        y.mp[i] += c * x.mp[i];
        y.zz[i] += c * x.zz[i];
    }
}
}  // namespace

void rk4_reference(RawState& s, const BinGrid& grid, const CavitySpec& cavity,
                   const std::function<C(double)>& drive, double t0, double t1,
                   int steps) {
    const double h = (t1 - t0) / steps;
    RawState k1, k2, k3, k4, tmp;
    for (int i = 0; i < steps; ++i) {
        const double t = t0 + i * h;
        rhs_reference(s, grid, cavity, drive(t), k1);
        tmp = s;
        axpy(tmp, 0.5 * h, k1);
        rhs_reference(tmp, grid, cavity, drive(t + 0.5 * h), k2);
        tmp = s;
        axpy(tmp, 0.5 * h, k2);
        rhs_reference(tmp, grid, cavity, drive(t + 0.5 * h), k3);
        tmp = s;
        axpy(tmp, h, k3);
        rhs_reference(tmp, grid, cavity, drive(t + h), k4);
        axpy(s, h / 6.0, k1);
        axpy(s, h / 3.0, k2);
        axpy(s, h / 3.0, k3);
        axpy(s, h / 6.0, k4);
    }
}

}  // namespace darkwave
