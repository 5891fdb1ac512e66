#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace darkwave {

// Distribution of spin-resonator couplings rho(g), normalized over its
// support. Gaussian support is truncated at g0 +/- 6 sigma and clipped at
// g >= 0, with the clipped mass renormalized away.
class CouplingDistribution {
  public:
    enum class Kind { Delta, Gaussian, PowerLawTail };

    static CouplingDistribution delta(double g0);
    static CouplingDistribution gaussian(double g0, double sigma_g);
    // rho(g) ~ (g/g0)^alpha * exp(-(g-g0)^2/(2 sigma^2)) on [g_min_frac*g0, g0+6 sigma].
    // The low-g cutoff keeps alpha <= -1 normalizable; alpha = -2 is the
    // marginal bright-profile case.
    static CouplingDistribution power_law_tail(double alpha, double g0,
                                               double sigma_g,
                                               double g_min_frac = 1e-3);

    Kind kind() const { return kind_; }
    double g0() const { return g0_; }
    double sigma_g() const { return sigma_g_; }
    double alpha() const { return alpha_; }
    double relative_inhomogeneity() const { return sigma_g_ / g0_; }

    // Normalized density. Zero outside [support_lo, support_hi].
    double density(double g) const;
    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }

    // Second moment gbar^2 = int g^2 rho(g) dg.
    double mean_square() const { return mean_square_; }
    double mean_coupling() const;  // gbar = sqrt(mean_square)

    // Numerical check of int rho dg (1 within quadrature tolerance).
    double normalization_check() const;

  private:
    CouplingDistribution() = default;
    void finalize();

    Kind kind_ = Kind::Delta;
    double g0_ = 0.0;
    double sigma_g_ = 0.0;
    double alpha_ = 0.0;
    double lo_ = 0.0, hi_ = 0.0;
    double norm_ = 1.0;        // normalization constant for density()
    double mean_square_ = 0.0;
};

// Inhomogeneous frequency profile n(omega), normalized to unit integral.
class FrequencyDistribution {
  public:
    enum class Kind { Lorentzian, Gaussian, Comb, Tabulated };

    static FrequencyDistribution lorentzian(double gamma_fwhm);
    static FrequencyDistribution gaussian(double sigma);
    // Lorentzian comb: teeth of width gamma, spacing delta, under a
    // Lorentzian envelope of width gamma_envelope.
    static FrequencyDistribution comb(double gamma_tooth, double delta_spacing,
                                      double gamma_envelope);
    static FrequencyDistribution tabulated(std::vector<double> omega,
                                           std::vector<double> n);

    Kind kind() const { return kind_; }
    double gamma() const { return gamma_; }          // Lorentzian FWHM
    double sigma() const { return sigma_; }          // Gaussian std dev
    double tooth_width() const { return gamma_tooth_; }
    double tooth_spacing() const { return delta_spacing_; }
    double storage_time() const;                     // T = 1/spacing (comb, ordinary freq)

    double density(double omega) const;
    // Half-width of the region holding essentially all mass (for grids).
    double support_halfwidth() const;
    // CDF of the profile, used for exact bin weights.
    double cdf(double omega) const;

    double normalization_check() const;
    // Comb hierarchy gamma << spacing << envelope; false when violated.
    bool comb_hierarchy_ok() const;

  private:
    FrequencyDistribution() = default;
    int comb_tooth_count() const;
    double comb_tooth_weight(double center) const;

    Kind kind_ = Kind::Lorentzian;
    double gamma_ = 0.0;
    double sigma_ = 0.0;
    double gamma_tooth_ = 0.0, delta_spacing_ = 0.0, gamma_env_ = 0.0;
    std::vector<double> tab_omega_, tab_n_, tab_cdf_;
};

}  // namespace darkwave
