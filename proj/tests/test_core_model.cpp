#include <doctest.h>

#include <cmath>

#include "darkwave/ensemble.hpp"
#include "darkwave/quadrature.hpp"
#include "darkwave/units.hpp"

using namespace darkwave;

TEST_CASE("collective coupling for point and Gaussian distributions") {
    EnsembleSpec spec;
    spec.cavity = {mhz(1.0), 0.0};
    spec.coupling = CouplingDistribution::delta(hz(100.0));
    spec.frequency = FrequencyDistribution::lorentzian(mhz(1.0));
    spec.n_spins = 1e6;
    CHECK(collective_coupling(spec) == doctest::Approx(khz(100.0)).epsilon(1e-12));

    spec.n_spins = 1;
    CHECK(collective_coupling(spec) ==
          doctest::Approx(spec.coupling.mean_coupling()).epsilon(1e-12));

    // Gaussian second moment: gbar^2 = g0^2 + sigma^2 (quadrature inside the
    // class, analytic oracle here)
    const double g0 = 1.0, sg = 0.1;
    const auto gauss = CouplingDistribution::gaussian(g0, sg);
    CHECK(gauss.mean_square() ==
          doctest::Approx(g0 * g0 + sg * sg).epsilon(1e-8));
}

TEST_CASE("cooperativity invariants and reference value") {
    EnsembleSpec spec;
    spec.cavity = {mhz(1.0), 0.0};
    spec.frequency = FrequencyDistribution::lorentzian(mhz(1.0));
    // impedance-match construction: choose g0 so that 4 g0^2 N = kappa Gamma
    const double n = 1e6;
    const double g0 = std::sqrt(spec.cavity.kappa * spec.frequency.gamma() /
                                (4.0 * n));
    spec.coupling = CouplingDistribution::delta(g0);
    spec.n_spins = n;
    CHECK(cooperativity(spec) == doctest::Approx(1.0).epsilon(1e-12));

    spec.n_spins = 2.0 * n;
    CHECK(cooperativity(spec) == doctest::Approx(2.0).epsilon(1e-12));

    // microwave reference parameters; the quoted experiment value is 0.06
    EnsembleSpec mw;
    mw.cavity = {mhz(0.4), 0.0};
    mw.frequency = FrequencyDistribution::lorentzian(mhz(2.5));
    mw.coupling = CouplingDistribution::delta(hz(80.0));
    mw.n_spins = 2e6;
    const double c = cooperativity(mw);
    CHECK(c == doctest::Approx(0.0512).epsilon(1e-3));
    CHECK(std::abs(c - 0.06) / 0.06 < 0.2);

    // invariance under N -> 4N, gbar -> gbar/2
    EnsembleSpec resc = mw;
    resc.coupling = CouplingDistribution::delta(hz(40.0));
    resc.n_spins = 8e6;
    CHECK(cooperativity(resc) == doctest::Approx(c).epsilon(1e-12));
}

TEST_CASE("bright-mode profile is normalized for every kind") {
    auto norm_of = [](const CouplingDistribution& c) {
        return integrate(
                   [&](double g) {
                       const double p = bright_profile(c, g);
                       return p * p;
                   },
                   c.support_lo(), c.support_hi(), 1e-12)
            .value;
    };
    const auto gauss = CouplingDistribution::gaussian(1.0, 0.1);
    CHECK(norm_of(gauss) == doctest::Approx(1.0).epsilon(1e-9));
    const auto wide = CouplingDistribution::gaussian(1.0, 0.3);
    CHECK(norm_of(wide) == doctest::Approx(1.0).epsilon(1e-9));
    const auto plaw = CouplingDistribution::power_law_tail(-1.0, 1.0, 0.2);
    CHECK(norm_of(plaw) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("marginal power-law exponent gives a flat bright profile at low g") {
    const auto c = CouplingDistribution::power_law_tail(-2.0, 1.0, 0.2, 1e-4);
    const double p1 = bright_profile(c, 2e-4);
    const double p2 = bright_profile(c, 8e-4);
    CHECK(p1 == doctest::Approx(p2).epsilon(1e-3));
}

TEST_CASE("distribution normalization checks") {
    CHECK(CouplingDistribution::gaussian(1.0, 0.05).normalization_check() ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(FrequencyDistribution::lorentzian(mhz(1.0)).normalization_check() ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(FrequencyDistribution::gaussian(mhz(1.0)).normalization_check() ==
          doctest::Approx(1.0).epsilon(1e-6));
    const auto comb = FrequencyDistribution::comb(khz(5.0), khz(100.0), mhz(1.0));
    CHECK(comb.normalization_check() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(comb.comb_hierarchy_ok());
    CHECK_FALSE(
        FrequencyDistribution::comb(khz(50.0), khz(100.0), mhz(1.0)).comb_hierarchy_ok());

    // tabulated path: triangle profile
    std::vector<double> w, nv;
    for (int i = 0; i <= 200; ++i) {
        const double x = -1.0 + 2.0 * i / 200;
        w.push_back(x);
        nv.push_back(1.0 - std::abs(x));
    }
    const auto tab = FrequencyDistribution::tabulated(w, nv);
    CHECK(tab.normalization_check() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(tab.cdf(1.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(tab.cdf(0.0) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS(CouplingDistribution::delta(-1.0));
    CHECK_THROWS(CouplingDistribution::gaussian(1.0, -0.1));
    CHECK_THROWS(FrequencyDistribution::lorentzian(0.0));
    EnsembleSpec spec;
    spec.cavity = {0.0, 0.0};
    CHECK_THROWS(spec.validate());
}
