#include "darkwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "darkwave/units.hpp"

namespace darkwave {

std::vector<double> uniform_grid(double lo, double hi, int n_points) {
    if (n_points < 2) throw std::invalid_argument("grid needs >= 2 points");
    std::vector<double> g(n_points);
    const double h = (hi - lo) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) g[i] = lo + i * h;
    return g;
}

double SpectralDensityMap::gamma_at(double w) const {
    if (omega.empty()) throw std::logic_error("empty spectral map");
    if (w <= omega.front()) return gamma.front();
    if (w >= omega.back()) return gamma.back();
    auto it = std::upper_bound(omega.begin(), omega.end(), w);
    size_t i = it - omega.begin();
    const double t = (w - omega[i - 1]) / (omega[i] - omega[i - 1]);
    return gamma[i - 1] + t * (gamma[i] - gamma[i - 1]);
}

namespace {

void check_grid(const FrequencyDistribution& n, const std::vector<double>& grid) {
    if (grid.size() < 16) throw std::invalid_argument("PV grid too coarse");
    const double lo = grid.front(), hi = grid.back();
    const double h = grid[1] - grid[0];
    for (size_t i = 1; i < grid.size(); ++i)
        if (std::abs((grid[i] - grid[i - 1]) - h) > 1e-9 * std::abs(h))
            throw std::invalid_argument("PV transform needs a uniform grid");
    if (std::abs(lo + hi) > 0.5 * h)
        throw std::invalid_argument("PV grid must be symmetric about the center");
    const double covered = n.cdf(hi) - n.cdf(lo);
    if (covered < 0.95)
        throw std::invalid_argument("PV grid does not bracket the support");
}

// Tail contribution beyond [-L, L] for ~ c/w'^2 tails (Lorentzian-type).
// Antiderivative of 1/(w'^2 (w-w')): F(w') = ln|w'/(w-w')|/w^2 - 1/(w w'),
// with F(+-inf) = 0, so the two tails give c [F(-L) - F(L)].
double lorentz_tail(double c, double w, double L) {
    if (std::abs(w) < 1e-12 * L) return 0.0;  // odd tails cancel at the center
    auto F = [&](double wp) {
        return std::log(std::abs(wp / (w - wp))) / (w * w) - 1.0 / (w * wp);
    };
    return c * (F(-L) - F(L));
}

}  // namespace

std::vector<double> principal_value_transform(const FrequencyDistribution& n,
                                              const std::vector<double>& omega_grid) {
    check_grid(n, omega_grid);
    const int np = static_cast<int>(omega_grid.size());
    const double h = omega_grid[1] - omega_grid[0];
    const double L = omega_grid.back();

    std::vector<double> nv(np), dvn(np);
    for (int i = 0; i < np; ++i) nv[i] = n.density(omega_grid[i]);
    for (int i = 0; i < np; ++i) {
        if (i == 0)
            dvn[i] = (nv[1] - nv[0]) / h;
        else if (i == np - 1)
            dvn[i] = (nv[np - 1] - nv[np - 2]) / h;
        else
            dvn[i] = (nv[i + 1] - nv[i - 1]) / (2.0 * h);
    }

    std::vector<double> out(np);
    for (int i = 0; i < np; ++i) {
        const double wi = omega_grid[i];
        // smooth part: int (n(w') - n(wi)) / (wi - w') dw' by trapezoid,
        // with the removable point carrying the limit -n'(wi)
        double acc = 0.0;
        for (int k = 0; k < np; ++k) {
            double f;
            if (k == i)
                f = -dvn[i];
            else
                f = (nv[k] - nv[i]) / (wi - omega_grid[k]);
            acc += (k == 0 || k == np - 1) ? 0.5 * f : f;
        }
        acc *= h;
        // subtracted logarithm over the finite window
        if (i != 0 && i != np - 1)
            acc += nv[i] * std::log(std::abs((wi + L) / (L - wi)));
        // analytic tails for the heavy-tailed kinds
        if (n.kind() == FrequencyDistribution::Kind::Lorentzian)
            acc += lorentz_tail(n.gamma() / two_pi, wi, L);
        else if (n.kind() == FrequencyDistribution::Kind::Comb)
            acc += lorentz_tail(n.gamma() / two_pi, wi, L);
        out[i] = acc;
    }
    return out;
}

SpectralDensityMap gamma_from_density(const FrequencyDistribution& n,
                                      const std::vector<double>& omega_grid) {
    SpectralDensityMap map;
    map.omega = omega_grid;
    map.hilbert = principal_value_transform(n, omega_grid);
    const int np = static_cast<int>(omega_grid.size());
    map.n.resize(np);
    map.gamma.resize(np);
    map.undefined.assign(np, 0);
    for (int i = 0; i < np; ++i) map.n[i] = n.density(omega_grid[i]);
    // Gamma(w) = 2 pi n / (H^2 + pi^2 n^2); undefined where both vanish.
    double scale = 0.0;
    for (int i = 0; i < np; ++i) scale = std::max(scale, map.n[i]);
    for (int i = 0; i < np; ++i) {
        const double den = map.hilbert[i] * map.hilbert[i] +
                           pi * pi * map.n[i] * map.n[i];
        if (den < 1e-24 * scale * scale) {
            map.undefined[i] = 1;
            map.gamma[i] = 0.0;
        } else {
            map.gamma[i] = two_pi * map.n[i] / den;
        }
    }
    return map;
}

PolaritonLinewidths polariton_linewidths(const EnsembleSpec& spec,
                                         const SpectralDensityMap& map) {
    PolaritonLinewidths out;
    const double g = collective_coupling(spec);
    out.omega_plus = g;
    out.omega_minus = -g;
    const double gp = map.gamma_at(g);
    const double gm = map.gamma_at(-g);
    out.gamma_plus = 0.5 * (spec.cavity.kappa + gp);
    out.gamma_minus = 0.5 * (spec.cavity.kappa + gm);
    out.strong_coupling = 2.0 * g > 5.0 * std::max({spec.cavity.kappa, gp, gm});
    return out;
}

}  // namespace darkwave
