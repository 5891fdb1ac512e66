#include "darkwave/quadrature.hpp"

#include <array>
#include <cmath>

namespace darkwave {
namespace {

// 15-point Kronrod nodes/weights on [-1,1] and the embedded 7-point Gauss
// weights (nodes at the even Kronrod indices).
constexpr std::array<double, 15> kr_x = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,                0.207784955007898,
    0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
constexpr std::array<double, 15> kr_w = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728, 0.204432940075298,
    0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
constexpr std::array<double, 7> gs_w = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870};

template <typename T>
struct Panel {
    T integral;
    double error;
};

template <typename T, typename F>
Panel<T> gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T kron{};
    T gauss{};
    for (int i = 0; i < 15; ++i) {
        T v = f(c + h * kr_x[i]);
        kron += kr_w[i] * v;
        if (i % 2 == 1) gauss += gs_w[i / 2] * v;
    }
    kron *= h;
    gauss *= h;
    double err = std::abs(kron - gauss);
    return {kron, err};
}

template <typename T, typename F>
void adapt(const F& f, double a, double b, double tol, int depth, int max_depth,
           T& acc, double& err_acc, int& evals, bool& converged) {
    auto p = gk15<T>(f, a, b);
    evals += 15;
    if (p.error <= tol || depth >= max_depth) {
        acc += p.integral;
        err_acc += p.error;
        if (p.error > tol) converged = false;
        return;
    }
    double m = 0.5 * (a + b);
    adapt(f, a, m, 0.5 * tol, depth + 1, max_depth, acc, err_acc, evals, converged);
    adapt(f, m, b, 0.5 * tol, depth + 1, max_depth, acc, err_acc, evals, converged);
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_depth) {
    QuadResult r;
    if (a == b) return r;
    adapt<double>(f, a, b, abs_tol, 0, max_depth, r.value, r.abs_error,
                  r.evaluations, r.converged);
    return r;
}

QuadResultC integrate_complex(const std::function<std::complex<double>(double)>& f,
                              double a, double b, double abs_tol, int max_depth) {
    QuadResultC r;
    if (a == b) return r;
    adapt<std::complex<double>>(f, a, b, abs_tol, 0, max_depth, r.value,
                                r.abs_error, r.evaluations, r.converged);
    return r;
}

double simpson(const std::function<double(double)>& f, double a, double b,
               int n_intervals) {
    int n = n_intervals + (n_intervals % 2);
    if (n < 2) n = 2;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

std::complex<double> simpson_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    int n_intervals) {
    int n = n_intervals + (n_intervals % 2);
    if (n < 2) n = 2;
    const double h = (b - a) / n;
    std::complex<double> s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace darkwave
