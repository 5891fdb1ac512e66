#include "darkwave/bins.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "darkwave/units.hpp"

namespace darkwave {

namespace {

// CDF of the coupling distribution restricted to its support (the Gaussian
// kind is already truncated/renormalized by construction).
double coupling_cdf(const CouplingDistribution& c, double g) {
    if (g <= c.support_lo()) return 0.0;
    if (g >= c.support_hi()) return 1.0;
    // trapezoid on a fine fixed grid; cheap and monotone
    const int n = 4000;
    const double h = (g - c.support_lo()) / n;
    double acc = 0.5 * (c.density(c.support_lo()) + c.density(g));
    for (int i = 1; i < n; ++i) acc += c.density(c.support_lo() + i * h);
    return acc * h;
}

double invert_cdf(const std::function<double(double)>& cdf, double target,
                  double lo, double hi) {
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (cdf(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

BinGrid build_bins(const EnsembleSpec& spec, int m_omega, int m_g, double xi,
                   bool quantile) {
    spec.validate();
    if (m_omega < 1 || m_g < 1) throw std::invalid_argument("need at least one bin");
    if (xi <= 0.0) throw std::invalid_argument("truncation factor must be positive");
    if (spec.frequency.kind() != FrequencyDistribution::Kind::Lorentzian)
        throw std::invalid_argument("bin grid assumes a Lorentzian profile");

    BinGrid grid;
    grid.m_omega = m_omega;
    grid.xi = xi;
    grid.gamma = spec.frequency.gamma();
    grid.n_total = spec.n_spins;
    grid.quantile = quantile;

    // single coupling bin when the distribution is a point mass
    if (spec.coupling.kind() == CouplingDistribution::Kind::Delta) m_g = 1;
    grid.m_g = m_g;

    const double half_band = 0.5 * xi * grid.gamma;

    std::vector<double> w_centers(m_omega), w_weights(m_omega);
    if (!quantile) {
        const double dw = 2.0 * half_band / m_omega;
        for (int i = 0; i < m_omega; ++i) {
            const double lo = -half_band + i * dw;
            w_centers[i] = lo + 0.5 * dw;
            w_weights[i] = spec.frequency.cdf(lo + dw) - spec.frequency.cdf(lo);
        }
    } else {
        // equal-population bins over the same truncated band
        const double q_lo = spec.frequency.cdf(-half_band);
        const double q_hi = spec.frequency.cdf(half_band);
        for (int i = 0; i < m_omega; ++i) {
            const double qa = q_lo + (q_hi - q_lo) * i / m_omega;
            const double qb = q_lo + (q_hi - q_lo) * (i + 1) / m_omega;
            auto cdf = [&](double w) { return spec.frequency.cdf(w); };
            w_centers[i] = invert_cdf(cdf, 0.5 * (qa + qb), -half_band, half_band);
            w_weights[i] = qb - qa;
        }
    }

    std::vector<double> g_centers(m_g), g_weights(m_g);
    if (m_g == 1) {
        g_centers[0] = spec.coupling.kind() == CouplingDistribution::Kind::Delta
                           ? spec.coupling.g0()
                           : spec.coupling.mean_coupling();
        g_weights[0] = 1.0;
    } else {
        const double s = spec.coupling.sigma_g();
        const double lo_g = std::max(spec.coupling.support_lo(),
                                     spec.coupling.g0() - 4.0 * s);
        const double hi_g = std::min(spec.coupling.support_hi(),
                                     spec.coupling.g0() + 4.0 * s);
        const double dg = (hi_g - lo_g) / m_g;
        for (int i = 0; i < m_g; ++i) {
            g_centers[i] = lo_g + (i + 0.5) * dg;
            g_weights[i] = coupling_cdf(spec.coupling, lo_g + (i + 1) * dg) -
                           coupling_cdf(spec.coupling, lo_g + i * dg);
        }
    }

    const int m = m_omega * m_g;
    grid.omega.resize(m);
    grid.g.resize(m);
    grid.weight.resize(m);
    double total = 0.0;
    for (int i = 0; i < m_omega; ++i)
        for (int k = 0; k < m_g; ++k) {
            const int j = i * m_g + k;
            grid.omega[j] = w_centers[i];
            grid.g[j] = g_centers[k];
            grid.weight[j] = w_weights[i] * g_weights[k];
            total += grid.weight[j];
        }
    grid.included_fraction = total;
    return grid;
}

RephasingCheck check_rephasing(const BinGrid& grid, double horizon) {
    RephasingCheck c;
    // Conservative guard M_omega/(xi Gamma) with angular Gamma; the actual
    // comb artifact of uniformly spaced bins sits at 2 pi / spacing, which
    // equals M_omega/(xi Gamma) when Gamma is quoted in ordinary frequency.
    c.guard_time = grid.m_omega / (grid.xi * grid.gamma);
    const double spacing = grid.xi * grid.gamma / grid.m_omega;
    c.artifact_time = two_pi / spacing;
    c.ok = c.guard_time > horizon;
    if (!c.ok) {
        c.message = "artificial rephasing-time guard: M_omega/(xi Gamma) = " +
                    std::to_string(c.guard_time * 1e6) +
                    " us is inside the horizon; spurious bin echo expected near " +
                    std::to_string(c.artifact_time * 1e6) + " us";
    }
    return c;
}

}  // namespace darkwave
