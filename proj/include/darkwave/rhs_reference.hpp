#pragma once

#include <complex>
#include <vector>

#include "darkwave/bins.hpp"
#include "darkwave/ensemble.hpp"

namespace darkwave {

// Raw (uncentered) second-order moments in the lab frame. Slow and simple:
// this is the direct transcription of the mean-field equations with the
// second-order cumulant closure, used as the oracle for the production
// kernel and for small systems.
struct RawState {
    int m = 0;
    std::complex<double> a{0.0, 0.0};     // <a>
    double n = 0.0;                       // <a^dag a>
    std::complex<double> add{0.0, 0.0};   // <a^dag a^dag>
    std::vector<std::complex<double>> sp;  // <S+_j>
    std::vector<double> sz;                // <Sz_j>
    std::vector<std::complex<double>> adp, adm, adz;  // <a^dag S+/-/z_j>
    std::vector<std::complex<double>> pp, zp, mp;     // m x m, row major
    std::vector<double> zz;                            // m x m

    void resize(int bins);
    std::complex<double>& PP(int j, int k) { return pp[size_t(j) * m + k]; }
    std::complex<double>& ZP(int j, int k) { return zp[size_t(j) * m + k]; }
    std::complex<double>& MP(int j, int k) { return mp[size_t(j) * m + k]; }
    double& ZZ(int j, int k) { return zz[size_t(j) * m + k]; }
    const std::complex<double>& PP(int j, int k) const { return pp[size_t(j) * m + k]; }
    const std::complex<double>& ZP(int j, int k) const { return zp[size_t(j) * m + k]; }
    const std::complex<double>& MP(int j, int k) const { return mp[size_t(j) * m + k]; }
    const double& ZZ(int j, int k) const { return zz[size_t(j) * m + k]; }
};

RawState raw_initial_state(const BinGrid& grid, bool excited);

// Derivative of the raw state; E is the coherent drive at time t.
void rhs_reference(const RawState& s, const BinGrid& grid, const CavitySpec& cavity,
                   std::complex<double> drive, RawState& ds);

// Fixed-step RK4 on the raw state (oracle integrator).
void rk4_reference(RawState& s, const BinGrid& grid, const CavitySpec& cavity,
                   const std::function<std::complex<double>(double)>& drive,
                   double t0, double t1, int steps);

}  // namespace darkwave
