#include <doctest.h>

#include <cmath>

#include "darkwave/bins.hpp"
#include "darkwave/drive.hpp"
#include "darkwave/units.hpp"

using namespace darkwave;

namespace {
EnsembleSpec paper_spec(double c, double sigma_g = 0.0) {
    EnsembleSpec spec;
    spec.cavity = {mhz(1.0), 0.0};
    spec.frequency = FrequencyDistribution::lorentzian(mhz(1.0));
    spec.coupling = sigma_g > 0.0
                        ? CouplingDistribution::gaussian(hz(100.0), sigma_g)
                        : CouplingDistribution::delta(hz(100.0));
    spec.n_spins = spins_for_cooperativity(spec, c);
    return spec;
}
}  // namespace

TEST_CASE("bin grid truncation bookkeeping") {
    const auto spec = paper_spec(0.3);
    const auto grid = build_bins(spec, 600, 4, 2.5);
    CHECK(grid.m_g == 1);  // point coupling collapses the g axis
    CHECK(grid.size() == 600);
    // Lorentzian at xi = 2.5 keeps (2/pi) atan(2.5) ~ 75.8% of the spins
    CHECK(grid.included_fraction ==
          doctest::Approx(2.0 / pi * std::atan(2.5)).epsilon(1e-9));
    CHECK(grid.included_fraction == doctest::Approx(0.758).epsilon(1e-3));

    double wsum = 0.0;
    for (int j = 0; j < grid.size(); ++j) wsum += grid.weight[j];
    CHECK(wsum == doctest::Approx(grid.included_fraction).epsilon(1e-12));

    // resonant spectral density is preserved by the truncation: the sum
    // g^2 N_j over the resonant bin matches N g^2 n(w) dw
    const int mid = grid.size() / 2;
    const double dw = 2.5 * grid.gamma / 600;
    const double expect = spec.n_spins * spec.frequency.density(grid.omega[mid]) * dw;
    CHECK(grid.nj(mid) == doctest::Approx(expect).epsilon(1e-4));
}

TEST_CASE("coupling bins span g0 +- 4 sigma") {
    const auto spec = paper_spec(0.3, hz(5.0));
    const auto grid = build_bins(spec, 10, 8, 2.5);
    CHECK(grid.m_g == 8);
    CHECK(grid.size() == 80);
    double gmin = 1e300, gmax = 0.0, wsum = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        gmin = std::min(gmin, grid.g[j]);
        gmax = std::max(gmax, grid.g[j]);
        wsum += grid.weight[j];
    }
    CHECK(gmin > hz(100.0) - 4.0 * hz(5.0));
    CHECK(gmax < hz(100.0) + 4.0 * hz(5.0));
    // product measure: omega fraction times the +-4 sigma Gaussian mass
    CHECK(wsum ==
          doctest::Approx(2.0 / pi * std::atan(2.5) * std::erf(4.0 / std::sqrt(2.0)))
              .epsilon(1e-4));
}

TEST_CASE("quantile binning preserves the included mass") {
    const auto spec = paper_spec(0.3);
    const auto grid = build_bins(spec, 128, 1, 2.5, true);
    double wsum = 0.0;
    for (int j = 0; j < grid.size(); ++j) wsum += grid.weight[j];
    CHECK(wsum == doctest::Approx(2.0 / pi * std::atan(2.5)).epsilon(1e-9));
    // equal population per bin
    for (int j = 1; j < grid.size(); ++j)
        CHECK(grid.weight[j] == doctest::Approx(grid.weight[0]).epsilon(1e-9));
}

TEST_CASE("rephasing-time guard") {
    const auto spec = paper_spec(0.3);
    const auto grid = build_bins(spec, 600, 1, 2.5);
    // conservative guard: 600 / (2.5 * 2 pi 1e6) ~ 38 us < 150 us horizon
    const auto chk = check_rephasing(grid, 150e-6);
    CHECK(chk.guard_time == doctest::Approx(38.2e-6).epsilon(1e-2));
    CHECK_FALSE(chk.ok);
    CHECK(!chk.message.empty());
    // the physical bin-comb artifact sits at 2 pi / spacing = 240 us
    CHECK(chk.artifact_time == doctest::Approx(240e-6).epsilon(1e-2));

    const auto ok = check_rephasing(grid, 30e-6);
    CHECK(ok.ok);
    CHECK_THROWS(build_bins(spec, 0, 1, 2.5));
}

TEST_CASE("drive waveform segments") {
    DriveWaveform d;
    DriveWaveform::Gaussian g;
    g.a0 = 100.0;
    g.t0 = 10e-6;
    g.sigma_t = 1e-6;
    d.add_gaussian(g);
    CHECK(std::abs(d.value(10e-6)) == doctest::Approx(100.0));
    CHECK(std::abs(d.value(12e-6)) == doctest::Approx(100.0 * std::exp(-2.0)));

    DriveWaveform::WurstArp w;
    w.a0_in = 2.5e7;
    w.t_start = 20e-6;
    w.t_w = 5e-6;
    w.omega0 = -mhz(1.0);
    w.k = mhz2(0.4);
    d.add_wurst(w);
    // WURST endpoints vanish, center reaches the full amplitude
    CHECK(std::abs(d.value(20e-6)) < 1e-6 * w.a0_in);
    CHECK(std::abs(d.value(25e-6)) < 1e-6 * w.a0_in);
    CHECK(std::abs(d.value(22.5e-6)) == doctest::Approx(w.a0_in).epsilon(1e-12));
    CHECK(d.arp_active(21e-6));
    CHECK_FALSE(d.arp_active(15e-6));

    // overlapping segments are rejected
    DriveWaveform::WurstArp bad = w;
    bad.t_start = 22e-6;
    CHECK_THROWS(d.add_wurst(bad));

    // pi-pulse amplitude bookkeeping: pulse area = pi through the cavity
    const double kappa = mhz(1.0), gbar = hz(100.0), st = 3e-6;
    const double a_pi = gaussian_pi_amplitude(kappa, gbar, st);
    const double area = 2.0 * gbar * (2.0 / std::sqrt(kappa)) * a_pi * st *
                        std::sqrt(two_pi);
    CHECK(area == doctest::Approx(pi).epsilon(1e-12));
}
