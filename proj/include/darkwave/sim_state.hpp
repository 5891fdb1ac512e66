#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "darkwave/bins.hpp"

namespace darkwave {

// Flat layout of the second-order cumulant state in centered (covariance)
// variables. Complex entries are interleaved (re, im).
//
//   alpha = <a>, nf = <da^dag da>, ff = <da^dag da^dag>
//   p[j] = <S+_j>, z[j] = <Sz_j>
//   vp[j] = <da^dag dS+_j>, vm[j] = <da^dag dS-_j>, vz[j] = <da^dag dSz_j>
//   Cpp[j][j'] = <dS+_j dS+_j'>   (symmetric, upper triangle incl diag)
//   Czp[j][j'] = <dSz_j dS+_j'>   (full)
//   Cmp[j][j'] = <dS-_j dS+_j'>   (Hermitian, upper triangle incl diag)
//   Czz[j][j'] = <dSz_j dSz_j'>   (real symmetric, upper triangle incl diag)
//
// Raw moments are centered + mean products; <a a^dag> = <a^dag a> + 1 is
// applied only in post-processing. In the production integrator the state is
// kept in the frame rotating with each bin detuning (and the cavity at
// delta); the accessors below are frame-agnostic.
struct StateLayout {
    int m = 0;
    size_t off_p = 0, off_vp = 0, off_vm = 0, off_vz = 0, off_z = 0;
    size_t off_pp = 0, off_zp = 0, off_mp = 0, off_zz = 0;
    size_t total = 0;

    explicit StateLayout(int bins);
    StateLayout() = default;

    size_t tri(int j, int jp) const {  // j <= jp
        return static_cast<size_t>(j) * m - static_cast<size_t>(j) * (j - 1) / 2 +
               (jp - j);
    }
    size_t full(int j, int jp) const {
        return static_cast<size_t>(j) * m + jp;
    }
    size_t tri_count() const { return static_cast<size_t>(m) * (m + 1) / 2; }
};

template <typename Real>
struct CovState {
    StateLayout lay;
    std::vector<Real> y;

    using C = std::complex<double>;

    void resize(int m) {
        lay = StateLayout(m);
        y.assign(lay.total, Real(0));
    }

    C get(size_t off) const { return {double(y[off]), double(y[off + 1])}; }
    void set(size_t off, C v) {
        y[off] = Real(v.real());
        y[off + 1] = Real(v.imag());
    }

    C alpha() const { return get(0); }
    void set_alpha(C v) { set(0, v); }
    double nf() const { return double(y[2]); }
    void set_nf(double v) { y[2] = Real(v); }
    C ff() const { return get(3); }
    void set_ff(C v) { set(3, v); }

    C p(int j) const { return get(lay.off_p + 2 * j); }
    void set_p(int j, C v) { set(lay.off_p + 2 * j, v); }
    C vp(int j) const { return get(lay.off_vp + 2 * j); }
    void set_vp(int j, C v) { set(lay.off_vp + 2 * j, v); }
    C vm(int j) const { return get(lay.off_vm + 2 * j); }
    void set_vm(int j, C v) { set(lay.off_vm + 2 * j, v); }
    C vz(int j) const { return get(lay.off_vz + 2 * j); }
    void set_vz(int j, C v) { set(lay.off_vz + 2 * j, v); }
    double z(int j) const { return double(y[lay.off_z + j]); }
    void set_z(int j, double v) { y[lay.off_z + j] = Real(v); }

    C cpp(int j, int jp) const {  // any order
        if (j > jp) std::swap(j, jp);
        return get(lay.off_pp + 2 * lay.tri(j, jp));
    }
    void set_cpp(int j, int jp, C v) {
        if (j > jp) std::swap(j, jp);
        set(lay.off_pp + 2 * lay.tri(j, jp), v);
    }
    C czp(int j, int jp) const { return get(lay.off_zp + 2 * lay.full(j, jp)); }
    void set_czp(int j, int jp, C v) { set(lay.off_zp + 2 * lay.full(j, jp), v); }
    C cmp(int j, int jp) const {
        if (j <= jp) return get(lay.off_mp + 2 * lay.tri(j, jp));
        return std::conj(get(lay.off_mp + 2 * lay.tri(jp, j)));
    }
    void set_cmp(int j, int jp, C v) {
        if (j > jp) {
            std::swap(j, jp);
            v = std::conj(v);
        }
        set(lay.off_mp + 2 * lay.tri(j, jp), v);
    }
    double czz(int j, int jp) const {
        if (j > jp) std::swap(j, jp);
        return double(y[lay.off_zz + lay.tri(j, jp)]);
    }
    void set_czz(int j, int jp, double v) {
        if (j > jp) std::swap(j, jp);
        y[lay.off_zz + lay.tri(j, jp)] = Real(v);
    }

    double photon_number() const { return nf() + std::norm(alpha()); }
};

enum class SpinRegime { Ground, Excited };

// Ground: z = -N_j/2, Cmp[jj] = N_j (the same-bin commutation identity
// <S- S+> = N on the fully polarized state); everything else zero.
// Excited is the mirror with Cmp[jj] = 0.
template <typename Real>
void initial_state(const BinGrid& grid, SpinRegime regime, CovState<Real>& state);

extern template void initial_state<double>(const BinGrid&, SpinRegime,
                                           CovState<double>&);
extern template void initial_state<float>(const BinGrid&, SpinRegime,
                                          CovState<float>&);

}  // namespace darkwave
