#include <cmath>

#include "darkwave/quadrature.hpp"
#include "darkwave/spectral.hpp"

namespace darkwave {

// Three regimes: Maclaurin series near zero, a well-conditioned integral
// form in the midrange (the naive e^{-x^2} int e^{t^2} form overflows and
// cancels; rewriting as int_0^x exp(-u(2x-u)) du keeps the integrand in
// (0,1]), and the asymptotic series beyond. Series alone loses accuracy for
// x > 4, which is why the midrange goes through the integral.
double dawson(double x) {
    const double ax = std::abs(x);
    const double sign = x < 0.0 ? -1.0 : 1.0;

    if (ax < 1.0) {
        // D(x) = sum (-1)^n 2^n x^(2n+1) / (2n+1)!!
        double term = ax;
        double sum = ax;
        const double x2 = ax * ax;
        for (int n = 1; n < 40; ++n) {
            term *= -2.0 * x2 / (2.0 * n + 1.0);
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sign * sum;
    }

    if (ax < 10.0) {
        auto f = [ax](double u) { return std::exp(-u * (2.0 * ax - u)); };
        const double v = integrate(f, 0.0, ax, 1e-15, 48).value;
        return sign * v;
    }

    // Asymptotic: D(x) ~ (1/2x) sum (2k-1)!!/(2x^2)^k, truncated at the
    // smallest term.
    const double ix2 = 1.0 / (2.0 * ax * ax);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 60; ++k) {
        const double next = term * (2.0 * k - 1.0) * ix2;
        if (next >= std::abs(term) || next < 1e-18 * sum) {
            if (next < 1e-18 * sum) sum += next;
            break;
        }
        term = next;
        sum += term;
    }
    return sign * sum / (2.0 * ax);
}

}  // namespace darkwave
