#include <doctest.h>

#include <cmath>

#include "darkwave/response.hpp"
#include "darkwave/units.hpp"

using namespace darkwave;

namespace {
ResponseParams params_for(double c, double kappa = mhz(1.0), double gma = mhz(1.0),
                          double delta = 0.0) {
    ResponseParams p;
    p.kappa = kappa;
    p.gamma = gma;
    p.delta = delta;
    p.g_collective = std::sqrt(0.25 * c * kappa * gma);
    return p;
}
}  // namespace

TEST_CASE("ground resonant limits") {
    // impedance match: full absorption into the dark channel
    auto c1 = ground_coefficients(params_for(1.0), 0.0);
    CHECK(std::abs(c1.r) < 1e-14);
    CHECK(c1.t_prime.real() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(c1.t_prime.imag() == doctest::Approx(1.0).epsilon(1e-14));

    auto c3 = ground_coefficients(params_for(3.0), 0.0);
    CHECK(c3.r.real() == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(std::abs(c3.r.imag()) < 1e-14);
    CHECK(c3.t_prime.imag() ==
          doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));

    // decoupled cavity: pure phase reflection, no transmission
    ResponseParams p0 = params_for(0.0);
    for (double w : {0.0, mhz(0.3), mhz(-1.7)}) {
        auto c = ground_coefficients(p0, w);
        const cdouble expect =
            (0.5 * p0.kappa + cdouble(0, 1) * w) / (0.5 * p0.kappa - cdouble(0, 1) * w);
        CHECK(std::abs(c.r - expect) < 1e-14);
        CHECK(std::abs(c.t) == 0.0);
        CHECK(std::abs(std::abs(c.r) - 1.0) < 1e-14);
    }
}

TEST_CASE("excited resonant limits and pole") {
    auto c0 = excited_coefficients(params_for(0.0), 0.0);
    CHECK(std::abs(c0.r - 1.0) < 1e-14);
    CHECK(std::abs(c0.t) == 0.0);

    auto c13 = excited_coefficients(params_for(1.0 / 3.0), 0.0);
    CHECK(c13.r.real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c13.t.imag() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

    // power gain diverges toward C = 1
    for (double c : {0.5, 0.9, 0.99}) {
        auto e = excited_coefficients(params_for(c), 0.0);
        const double gain = std::norm(e.r);
        const double expect = std::pow((1.0 + c) / (1.0 - c), 2);
        CHECK(gain == doctest::Approx(expect).epsilon(1e-10));
    }
    CHECK_THROWS_AS(excited_coefficients(params_for(1.0), 0.0), std::domain_error);
}

TEST_CASE("unitarity and squeezing invariants on the acceptance grid") {
    for (double c : {0.06, 0.5, 0.9, 3.0}) {
        CAPTURE(c);
        auto p = params_for(c);
        double worst_u = 0.0, worst_s = 0.0;
        for (int i = 0; i < 513; ++i) {
            const double w = -5.0 * p.gamma + 10.0 * p.gamma * i / 512.0;
            const auto g = ground_coefficients(p, w);
            // || S S^dag - I ||_max for S = [[r, t], [t', r']]
            const double d00 = std::abs(std::norm(g.r) + std::norm(g.t) - 1.0);
            const double d11 =
                std::abs(std::norm(g.t_prime) + std::norm(g.r_prime) - 1.0);
            const double d01 = std::abs(g.r * std::conj(g.t_prime) +
                                        g.t * std::conj(g.r_prime));
            worst_u = std::max({worst_u, d00, d11, d01});
            const auto e = excited_coefficients(p, w);
            worst_s = std::max(worst_s,
                               std::abs(std::norm(e.r) - std::norm(e.t) - 1.0));
            // reciprocity is exact by construction
            CHECK(g.t == g.t_prime);
        }
        CHECK(worst_u < 1e-12);
        CHECK(worst_s < 1e-12);
    }
}

TEST_CASE("asymptotic transparency far off resonance") {
    auto p = params_for(0.5);
    for (double sgn : {1.0, -1.0}) {
        const auto g = ground_coefficients(p, sgn * 1e3 * p.gamma);
        CHECK(std::abs(std::abs(g.r) - 1.0) < 1e-4);
        CHECK(std::abs(g.t) < 1e-4);
    }
}

TEST_CASE("first-echo amplitude spectrum") {
    EnsembleSpec spec;
    spec.cavity = {mhz(1.0), 0.0};
    spec.frequency = FrequencyDistribution::lorentzian(mhz(1.0));
    spec.coupling = CouplingDistribution::delta(hz(100.0));
    spec.n_spins = spins_for_cooperativity(spec, 0.5);

    const auto grid = uniform_grid(-mhz(2.0), mhz(2.0), 101);
    auto f_flat = [](double) { return cdouble(1.0, 0.0); };
    auto f_zero = [](double) { return cdouble(0.0, 0.0); };
    auto f_one = [](double) { return cdouble(1.0, 0.0); };

    const auto zero = echo_amplitude_spectrum(spec, grid, f_flat, f_zero);
    for (const auto& v : zero) CHECK(std::abs(v) == 0.0);

    const auto full = echo_amplitude_spectrum(spec, grid, f_flat, f_one);
    // narrowband value at resonance: tt'(0) t'(0) = -4C/(1-C^2)
    const double c = 0.5;
    CHECK(full[50].real() ==
          doctest::Approx(-4.0 * c / (1.0 - c * c)).epsilon(1e-10));

    // linearity: halving the input halves the output
    auto f_half = [](double) { return cdouble(0.5, 0.0); };
    const auto half = echo_amplitude_spectrum(spec, grid, f_half, f_one);
    for (size_t i = 0; i < grid.size(); ++i)
        CHECK(std::abs(half[i] - 0.5 * full[i]) < 1e-14);
}
