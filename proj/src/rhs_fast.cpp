#include "darkwave/rhs_fast.hpp"

#include <cmath>
#include <omp.h>

namespace darkwave {

namespace {
template <typename Real>
using cx = std::complex<Real>;

template <typename Real>
inline cx<Real> to_cx(std::complex<double> v) {
    return {Real(v.real()), Real(v.imag())};
}
}  // namespace

template <typename Real>
FastRhs<Real>::FastRhs(const BinGrid& grid, const CavitySpec& cavity)
    : lay_(grid.size()), cavity_(cavity), g_(grid.g), w_(grid.omega) {}

template <typename Real>
void FastRhs<Real>::phases(double t, std::vector<std::complex<double>>& c) const {
    c.resize(w_.size());
    for (size_t j = 0; j < w_.size(); ++j)
        c[j] = std::polar(1.0, w_[j] * t);
}

template <typename Real>
void FastRhs<Real>::operator()(double t, const Real* y, Real* dy,
                               std::complex<double> drive) const {
    const int m = lay_.m;
    const int B = tile_;
    const double kappa = cavity_.kappa;
    const double delta = cavity_.delta;
    const double sqk = std::sqrt(kappa);

    auto rd = [&](size_t off) {
        return std::complex<double>(double(y[off]), double(y[off + 1]));
    };
    const std::complex<double> alpha = rd(0);
    const std::complex<double> alc = std::conj(alpha);
    const double nf = double(y[2]);
    const std::complex<double> ff = rd(3);
    constexpr std::complex<double> I{0.0, 1.0};

    // per-bin coefficients (double precision), then Real copies for kernels
    std::vector<std::complex<double>> gam(m), pv(m), vpv(m), vmv(m), vzv(m);
    std::vector<double> zv(m);
    for (int j = 0; j < m; ++j) {
        gam[j] = g_[j] * std::polar(1.0, -w_[j] * t);
        pv[j] = rd(lay_.off_p + 2 * j);
        vpv[j] = rd(lay_.off_vp + 2 * j);
        vmv[j] = rd(lay_.off_vm + 2 * j);
        vzv[j] = rd(lay_.off_vz + 2 * j);
        zv[j] = double(y[lay_.off_z + j]);
    }

    // tile-kernel coefficient vectors
    std::vector<cx<Real>> W(m), Q(m), A1(m), B1(m), C1(m), C2(m), M1(m), M2(m),
        U1(m), U2(m), GBc(m), VP(m), VM(m), VZ(m);
    for (int j = 0; j < m; ++j) {
        const auto gj = gam[j];
        const auto gbj = std::conj(gj);
        W[j] = to_cx<Real>(-2.0 * I * gj * alc);
        Q[j] = to_cx<Real>(-2.0 * I * gj * zv[j]);
        A1[j] = to_cx<Real>(-I * gbj * alpha);
        B1[j] = to_cx<Real>(I * gj * alc);
        C1[j] = to_cx<Real>(-I * gbj * pv[j]);
        C2[j] = to_cx<Real>(I * gj * std::conj(pv[j]));
        M1[j] = to_cx<Real>(2.0 * I * gbj * alpha);
        M2[j] = to_cx<Real>(2.0 * I * gbj * zv[j]);
        U1[j] = to_cx<Real>(gbj * alpha);
        U2[j] = to_cx<Real>(gbj * pv[j]);
        GBc[j] = to_cx<Real>(gbj);
        VP[j] = to_cx<Real>(vpv[j]);
        VM[j] = to_cx<Real>(vmv[j]);
        VZ[j] = to_cx<Real>(vzv[j]);
    }

    const int nblk = (m + B - 1) / B;
    std::vector<std::pair<int, int>> tiles;
    for (int a = 0; a < nblk; ++a)
        for (int b = a; b < nblk; ++b) tiles.emplace_back(a, b);

    const int nthreads = omp_get_max_threads();
    std::vector<std::vector<std::complex<double>>> rpp_t(nthreads), rmp_t(nthreads),
        rzp_t(nthreads);

    const Real* ypp = y + lay_.off_pp;
    const Real* yzp = y + lay_.off_zp;
    const Real* ymp = y + lay_.off_mp;
    const Real* yzz = y + lay_.off_zz;
    Real* dpp = dy + lay_.off_pp;
    Real* dzp = dy + lay_.off_zp;
    Real* dmp = dy + lay_.off_mp;
    Real* dzz = dy + lay_.off_zz;

#pragma omp parallel
    {
        const int tid = omp_get_thread_num();
        auto& Rpp = rpp_t[tid];
        auto& Rmp = rmp_t[tid];
        auto& Rzp = rzp_t[tid];
        Rpp.assign(m, {});
        Rmp.assign(m, {});
        Rzp.assign(m, {});

        // local tile buffers (value + transpose views)
        std::vector<cx<Real>> Lpp(B * B), Lmp(B * B), Lz1(B * B), Lz2(B * B),
            LppT(B * B), LmpT(B * B), Lz2T(B * B);
        std::vector<Real> Lzz(B * B), LzzT(B * B);

#pragma omp for schedule(dynamic, 1)
        for (size_t ti = 0; ti < tiles.size(); ++ti) {
            const int a = tiles[ti].first, b = tiles[ti].second;
            const int j0 = a * B, j1 = std::min(m, j0 + B);
            const int k0 = b * B, k1 = std::min(m, k0 + B);
            const int bj = j1 - j0, bk = k1 - k0;
            const bool diag = (a == b);

            // ---- load tiles into dense local buffers ----
            for (int j = j0; j < j1; ++j) {
                const int lj = j - j0;
                // triangle rows: stored for k >= j; mirror below
                for (int k = k0; k < k1; ++k) {
                    const int lk = k - k0;
                    if (k >= j) {
                        const size_t tp = lay_.tri(j, k);
                        Lpp[lj * B + lk] = {ypp[2 * tp], ypp[2 * tp + 1]};
                        Lmp[lj * B + lk] = {ymp[2 * tp], ymp[2 * tp + 1]};
                        Lzz[lj * B + lk] = yzz[tp];
                    } else {
                        const size_t tp = lay_.tri(k, j);
                        Lpp[lj * B + lk] = {ypp[2 * tp], ypp[2 * tp + 1]};
                        Lmp[lj * B + lk] = {ymp[2 * tp], -ymp[2 * tp + 1]};
                        Lzz[lj * B + lk] = yzz[tp];
                    }
                    const size_t fz = lay_.full(j, k);
                    Lz1[lj * B + lk] = {yzp[2 * fz], yzp[2 * fz + 1]};
                }
            }
            for (int k = k0; k < k1; ++k) {
                const int lk = k - k0;
                for (int j = j0; j < j1; ++j) {
                    const size_t fz = lay_.full(k, j);
                    Lz2[lk * B + (j - j0)] = {yzp[2 * fz], yzp[2 * fz + 1]};
                }
            }
            // transposes
            for (int lj = 0; lj < bj; ++lj)
                for (int lk = 0; lk < bk; ++lk) {
                    LppT[lk * B + lj] = Lpp[lj * B + lk];
                    LmpT[lk * B + lj] = std::conj(Lmp[lj * B + lk]);
                    LzzT[lk * B + lj] = Lzz[lj * B + lk];
                    Lz2T[lj * B + lk] = Lz2[lk * B + lj];
                }

            // ---- pass A: rows j, outputs [j][k] ----
            for (int j = j0; j < j1; ++j) {
                const int lj = j - j0;
                const cx<Real> wj = W[j], qj = Q[j], a1 = A1[j], b1 = B1[j],
                               c1 = C1[j], c2 = C2[j], m1 = M1[j], m2 = M2[j],
                               u1 = U1[j], u2 = U2[j], vmj = VM[j], vzj = VZ[j],
                               vpj = VP[j];
                std::complex<double> spp{}, smp{}, szp{};
                const int kstart = diag ? j : k0;
                // full-row sums take every k in the tile exactly once
                for (int k = k0; k < k1; ++k) {
                    const int lk = k - k0;
                    const cx<Real> cpp = Lpp[lj * B + lk];
                    const cx<Real> cmp = Lmp[lj * B + lk];
                    const cx<Real> czp1 = Lz1[lj * B + lk];
                    const std::complex<double> gb(double(GBc[k].real()),
                                                  double(GBc[k].imag()));
                    spp += gb * std::complex<double>(double(cpp.real()),
                                                     double(cpp.imag()));
                    smp += gb * std::complex<double>(double(cmp.real()),
                                                     double(cmp.imag()));
                    szp += gb * std::complex<double>(double(czp1.real()),
                                                     double(czp1.imag()));
                }
                Rpp[j] += spp;
                Rmp[j] += smp;
                Rzp[j] += szp;

                for (int k = kstart; k < k1; ++k) {
                    const int lk = k - k0;
                    const cx<Real> cpp = Lpp[lj * B + lk];
                    const cx<Real> cmp = Lmp[lj * B + lk];
                    const cx<Real> czp1 = Lz1[lj * B + lk];
                    const cx<Real> czp2 = Lz2T[lj * B + lk];  // Czp[k][j]
                    const Real czz = Lzz[lj * B + lk];

                    // dCpp[j][k]
                    const cx<Real> dp = wj * czp1 + W[k] * czp2 + qj * VP[k] +
                                        Q[k] * vpj;
                    const size_t tp = lay_.tri(j, k);
                    dpp[2 * tp] = dp.real();
                    dpp[2 * tp + 1] = dp.imag();

                    // dCmp[j][k]
                    const cx<Real> dm = m1 * czp1 + m2 * std::conj(VM[k]) +
                                        W[k] * std::conj(czp2) + Q[k] * vmj;
                    dmp[2 * tp] = dm.real();
                    dmp[2 * tp + 1] = dm.imag();

                    // dCzz[j][k]
                    const cx<Real> h1 = u1 * czp2 + u2 * std::conj(VZ[k]);
                    const cx<Real> h2 = U1[k] * czp1 + U2[k] * std::conj(vzj);
                    dzz[tp] = Real(2) * (h1.imag() + h2.imag());

                    // dCzp[j][k]
                    const cx<Real> dz = a1 * cpp + b1 * cmp + W[k] * czz +
                                        c1 * std::conj(VM[k]) + c2 * VP[k] +
                                        Q[k] * vzj;
                    const size_t fz = lay_.full(j, k);
                    dzp[2 * fz] = dz.real();
                    dzp[2 * fz + 1] = dz.imag();
                }
            }

            // ---- pass B: rows k, output dCzp[k][j] (mirrored block) ----
            // Diagonal tiles already covered their row sums fully in pass A.
            for (int k = k0; k < k1; ++k) {
                const int lk = k - k0;
                const cx<Real> a1 = A1[k], b1 = B1[k], c1 = C1[k], c2 = C2[k],
                               vzk = VZ[k];
                if (!diag) {
                    std::complex<double> spp{}, smp{}, szp{};
                    for (int j = j0; j < j1; ++j) {
                        const int lj = j - j0;
                        const cx<Real> cppT = LppT[lk * B + lj];
                        const cx<Real> cmpT = LmpT[lk * B + lj];
                        const cx<Real> czp2 = Lz2[lk * B + lj];
                        const std::complex<double> gb(double(GBc[j].real()),
                                                      double(GBc[j].imag()));
                        spp += gb * std::complex<double>(double(cppT.real()),
                                                         double(cppT.imag()));
                        smp += gb * std::complex<double>(double(cmpT.real()),
                                                         double(cmpT.imag()));
                        szp += gb * std::complex<double>(double(czp2.real()),
                                                         double(czp2.imag()));
                    }
                    Rpp[k] += spp;
                    Rmp[k] += smp;
                    Rzp[k] += szp;
                }

                const int jstop = diag ? k : j1;
                for (int j = j0; j < jstop; ++j) {
                    const int lj = j - j0;
                    const cx<Real> dzv = a1 * LppT[lk * B + lj] + b1 * LmpT[lk * B + lj] +
                                         W[j] * LzzT[lk * B + lj] +
                                         c1 * std::conj(VM[j]) + c2 * VP[j] +
                                         Q[j] * vzk;
                    const size_t fz = lay_.full(k, j);
                    dzp[2 * fz] = dzv.real();
                    dzp[2 * fz + 1] = dzv.imag();
                }
            }
        }

#pragma omp barrier
#pragma omp single
        {
            for (int tid2 = 1; tid2 < nthreads; ++tid2)
                for (int j = 0; j < m; ++j) {
                    rpp_t[0][j] += rpp_t[tid2][j];
                    rmp_t[0][j] += rmp_t[tid2][j];
                    rzp_t[0][j] += rzp_t[tid2][j];
                }
        }
    }

    // ---- vector and scalar sector ----
    const std::complex<double> iduk(0.0, delta);
    std::complex<double> sum_ap{}, sum_nf{}, sum_ff{};
    for (int j = 0; j < m; ++j) {
        const auto gj = gam[j];
        const auto gbj = std::conj(gj);
        const std::complex<double> dvp =
            (iduk - 0.5 * kappa) * vpv[j] + I * rpp_t[0][j] -
            2.0 * I * gj * (zv[j] * ff + alc * vzv[j]);
        const std::complex<double> dvm =
            (iduk - 0.5 * kappa) * vmv[j] + I * rmp_t[0][j] +
            2.0 * I * gbj * (zv[j] + alpha * vzv[j] + zv[j] * nf);
        const std::complex<double> dvz =
            (iduk - 0.5 * kappa) * vzv[j] + I * rzp_t[0][j] -
            I * gbj * (pv[j] + alpha * vpv[j] + pv[j] * nf) +
            I * gj * (alc * vmv[j] + std::conj(pv[j]) * ff);
        const std::complex<double> dp = -2.0 * I * gj * (vzv[j] + alc * zv[j]);
        const double dz = -2.0 * std::imag(gj * (vmv[j] + alc * std::conj(pv[j])));

        dy[lay_.off_vp + 2 * j] = Real(dvp.real());
        dy[lay_.off_vp + 2 * j + 1] = Real(dvp.imag());
        dy[lay_.off_vm + 2 * j] = Real(dvm.real());
        dy[lay_.off_vm + 2 * j + 1] = Real(dvm.imag());
        dy[lay_.off_vz + 2 * j] = Real(dvz.real());
        dy[lay_.off_vz + 2 * j + 1] = Real(dvz.imag());
        dy[lay_.off_p + 2 * j] = Real(dp.real());
        dy[lay_.off_p + 2 * j + 1] = Real(dp.imag());
        dy[lay_.off_z + j] = Real(dz);

        sum_ap += gj * std::conj(pv[j]);
        sum_nf += gj * vmv[j];
        sum_ff += gbj * vpv[j];

        // same-bin commutator extras on the matrix diagonals
        const std::complex<double> dpp_d =
            2.0 * I * gj * (vpv[j] + alc * pv[j]);
        const size_t tpd = lay_.tri(j, j);
        dpp[2 * tpd] += Real(dpp_d.real());
        dpp[2 * tpd + 1] += Real(dpp_d.imag());
        const double dzz_d = 2.0 * std::imag(gj * vmv[j]) -
                             2.0 * std::imag(gbj * alpha * pv[j]);
        dzz[tpd] += Real(dzz_d);
    }

    const std::complex<double> da =
        (-iduk - 0.5 * kappa) * alpha + sqk * drive - I * sum_ap;
    dy[0] = Real(da.real());
    dy[1] = Real(da.imag());
    dy[2] = Real(-kappa * nf + 2.0 * sum_nf.imag());
    const std::complex<double> dff = (2.0 * iduk - kappa) * ff + 2.0 * I * sum_ff;
    dy[3] = Real(dff.real());
    dy[4] = Real(dff.imag());
}

template class FastRhs<double>;
template class FastRhs<float>;

}  // namespace darkwave
