#pragma once

#include <complex>
#include <vector>

#include "darkwave/bins.hpp"
#include "darkwave/sim_state.hpp"

namespace darkwave {

// Production evaluation of the covariance-form cumulant equations.
//
// The state lives in the frame co-rotating with each bin detuning (and the
// cavity at delta), which removes the linear rotation terms; every coupling
// then enters through the complex per-bin rate gamma_j(t) = g_j e^{-i w_j t}.
// Matrix work is tiled so each stored element is touched once per call, with
// the row sums feeding the vector sector accumulated in the same pass.
template <typename Real>
class FastRhs {
  public:
    FastRhs(const BinGrid& grid, const CavitySpec& cavity);

    // dy <- f(t, y); drive is the lab-frame coherent input E(t).
    void operator()(double t, const Real* y, Real* dy,
                    std::complex<double> drive) const;

    const StateLayout& layout() const { return lay_; }

    // Rotating-frame phase per bin at time t: exp(+i w_j t).
    void phases(double t, std::vector<std::complex<double>>& c) const;

  private:
    StateLayout lay_;
    CavitySpec cavity_;
    std::vector<double> g_, w_;
    int tile_ = 64;
    mutable std::vector<std::complex<double>> scratch_;
};

extern template class FastRhs<double>;
extern template class FastRhs<float>;

}  // namespace darkwave
