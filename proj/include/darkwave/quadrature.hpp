#pragma once

#include <complex>
#include <functional>

namespace darkwave {

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    int evaluations = 0;
    bool converged = true;
};

struct QuadResultC {
    std::complex<double> value{0.0, 0.0};
    double abs_error = 0.0;
    int evaluations = 0;
    bool converged = true;
};

// Adaptive Gauss-Kronrod (G7,K15) on [a,b] with absolute tolerance.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-9, int max_depth = 40);

QuadResultC integrate_complex(const std::function<std::complex<double>(double)>& f,
                              double a, double b, double abs_tol = 1e-9,
                              int max_depth = 40);

// Fixed-order composite Simpson; n_intervals rounded up to even.
double simpson(const std::function<double(double)>& f, double a, double b,
               int n_intervals);

std::complex<double> simpson_complex(const std::function<std::complex<double>(double)>& f,
                                     double a, double b, int n_intervals);

}  // namespace darkwave
