#include "darkwave/distributions.hpp"

#include <algorithm>
#include <cmath>

#include "darkwave/quadrature.hpp"
#include "darkwave/units.hpp"

namespace darkwave {

namespace {
double gauss_pdf(double x, double mu, double sigma) {
    const double t = (x - mu) / sigma;
    return std::exp(-0.5 * t * t) / (sigma * std::sqrt(two_pi));
}
double gauss_cdf(double x, double mu, double sigma) {
    return 0.5 * std::erfc(-(x - mu) / (sigma * std::sqrt(2.0)));
}
}  // namespace

int FrequencyDistribution::comb_tooth_count() const {
    return static_cast<int>(std::ceil(25.0 * gamma_env_ / delta_spacing_));
}

double FrequencyDistribution::comb_tooth_weight(double center) const {
    const double he = 0.5 * gamma_env_;
    return gamma_env_ * delta_spacing_ / (two_pi * (center * center + he * he));
}

CouplingDistribution CouplingDistribution::delta(double g0) {
    if (g0 <= 0.0) throw std::invalid_argument("coupling g0 must be positive");
    CouplingDistribution d;
    d.kind_ = Kind::Delta;
    d.g0_ = g0;
    d.lo_ = d.hi_ = g0;
    d.mean_square_ = g0 * g0;
    return d;
}

CouplingDistribution CouplingDistribution::gaussian(double g0, double sigma_g) {
    if (g0 <= 0.0) throw std::invalid_argument("coupling g0 must be positive");
    if (sigma_g < 0.0) throw std::invalid_argument("sigma_g must be >= 0");
    if (sigma_g == 0.0) return delta(g0);
    CouplingDistribution d;
    d.kind_ = Kind::Gaussian;
    d.g0_ = g0;
    d.sigma_g_ = sigma_g;
    d.lo_ = std::max(0.0, g0 - 6.0 * sigma_g);
    d.hi_ = g0 + 6.0 * sigma_g;
    d.finalize();
    return d;
}

CouplingDistribution CouplingDistribution::power_law_tail(double alpha, double g0,
                                                          double sigma_g,
                                                          double g_min_frac) {
    if (g0 <= 0.0) throw std::invalid_argument("coupling g0 must be positive");
    if (sigma_g <= 0.0) throw std::invalid_argument("sigma_g must be positive");
    if (g_min_frac <= 0.0) throw std::invalid_argument("g_min_frac must be positive");
    CouplingDistribution d;
    d.kind_ = Kind::PowerLawTail;
    d.g0_ = g0;
    d.sigma_g_ = sigma_g;
    d.alpha_ = alpha;
    d.lo_ = g_min_frac * g0;
    d.hi_ = g0 + 6.0 * sigma_g;
    d.finalize();
    return d;
}

void CouplingDistribution::finalize() {
    auto raw = [this](double g) {
        switch (kind_) {
            case Kind::Gaussian:
                return gauss_pdf(g, g0_, sigma_g_);
            case Kind::PowerLawTail:
                return std::pow(g / g0_, alpha_) *
                       std::exp(-0.5 * (g - g0_) * (g - g0_) / (sigma_g_ * sigma_g_));
            default:
                return 0.0;
        }
    };
    norm_ = 1.0;
    double mass = integrate([&](double g) { return raw(g); }, lo_, hi_, 1e-12).value;
    norm_ = 1.0 / mass;
    mean_square_ =
        integrate([&](double g) { return g * g * raw(g) * norm_; }, lo_, hi_, 1e-9 * g0_ * g0_)
            .value;
}

double CouplingDistribution::density(double g) const {
    if (kind_ == Kind::Delta) throw std::logic_error("delta distribution has no density");
    if (g < lo_ || g > hi_) return 0.0;
    switch (kind_) {
        case Kind::Gaussian:
            return norm_ * gauss_pdf(g, g0_, sigma_g_);
        case Kind::PowerLawTail:
            return norm_ * std::pow(g / g0_, alpha_) *
                   std::exp(-0.5 * (g - g0_) * (g - g0_) / (sigma_g_ * sigma_g_));
        default:
            return 0.0;
    }
}

double CouplingDistribution::mean_coupling() const { return std::sqrt(mean_square_); }

double CouplingDistribution::normalization_check() const {
    if (kind_ == Kind::Delta) return 1.0;
    return integrate([this](double g) { return density(g); }, lo_, hi_, 1e-12).value;
}

FrequencyDistribution FrequencyDistribution::lorentzian(double gamma_fwhm) {
    if (gamma_fwhm <= 0.0) throw std::invalid_argument("Lorentzian width must be positive");
    FrequencyDistribution d;
    d.kind_ = Kind::Lorentzian;
    d.gamma_ = gamma_fwhm;
    return d;
}

FrequencyDistribution FrequencyDistribution::gaussian(double sigma) {
    if (sigma <= 0.0) throw std::invalid_argument("Gaussian width must be positive");
    FrequencyDistribution d;
    d.kind_ = Kind::Gaussian;
    d.sigma_ = sigma;
    return d;
}

FrequencyDistribution FrequencyDistribution::comb(double gamma_tooth,
                                                  double delta_spacing,
                                                  double gamma_envelope) {
    if (gamma_tooth <= 0.0 || delta_spacing <= 0.0 || gamma_envelope <= 0.0)
        throw std::invalid_argument("comb parameters must be positive");
    FrequencyDistribution d;
    d.kind_ = Kind::Comb;
    d.gamma_tooth_ = gamma_tooth;
    d.delta_spacing_ = delta_spacing;
    d.gamma_env_ = gamma_envelope;
    d.gamma_ = gamma_envelope;
    return d;
}

FrequencyDistribution FrequencyDistribution::tabulated(std::vector<double> omega,
                                                       std::vector<double> n) {
    if (omega.size() != n.size() || omega.size() < 2)
        throw std::invalid_argument("tabulated profile needs matching grids, >= 2 points");
    for (size_t i = 1; i < omega.size(); ++i)
        if (omega[i] <= omega[i - 1])
            throw std::invalid_argument("tabulated grid must be increasing");
    for (double v : n)
        if (v < 0.0) throw std::invalid_argument("n(omega) must be non-negative");
    FrequencyDistribution d;
    d.kind_ = Kind::Tabulated;
    // Trapezoid mass, then renormalize in place.
    double mass = 0.0;
    for (size_t i = 1; i < omega.size(); ++i)
        mass += 0.5 * (n[i] + n[i - 1]) * (omega[i] - omega[i - 1]);
    if (mass <= 0.0) throw std::invalid_argument("tabulated profile has zero mass");
    for (double& v : n) v /= mass;
    d.tab_omega_ = std::move(omega);
    d.tab_n_ = std::move(n);
    d.tab_cdf_.assign(d.tab_omega_.size(), 0.0);
    for (size_t i = 1; i < d.tab_omega_.size(); ++i)
        d.tab_cdf_[i] = d.tab_cdf_[i - 1] + 0.5 * (d.tab_n_[i] + d.tab_n_[i - 1]) *
                                                (d.tab_omega_[i] - d.tab_omega_[i - 1]);
    return d;
}

double FrequencyDistribution::density(double omega) const {
    switch (kind_) {
        case Kind::Lorentzian: {
            const double hw = 0.5 * gamma_;
            return gamma_ / (two_pi * (omega * omega + hw * hw));
        }
        case Kind::Gaussian:
            return gauss_pdf(omega, 0.0, sigma_);
        case Kind::Comb: {
            // Lorentzian teeth with envelope-proportional weights,
            // renormalized so the truncated tooth sum carries unit mass.
            const double ht = 0.5 * gamma_tooth_;
            const int m_max = comb_tooth_count();
            double v = 0.0, wsum = 0.0;
            for (int m = -m_max; m <= m_max; ++m) {
                const double center = m * delta_spacing_;
                const double w = comb_tooth_weight(center);
                wsum += w;
                const double d = omega - center;
                v += w * gamma_tooth_ / (two_pi * (d * d + ht * ht));
            }
            return v / wsum;
        }
        case Kind::Tabulated: {
            if (omega <= tab_omega_.front() || omega >= tab_omega_.back()) return 0.0;
            auto it = std::upper_bound(tab_omega_.begin(), tab_omega_.end(), omega);
            size_t i = it - tab_omega_.begin();
            const double t = (omega - tab_omega_[i - 1]) / (tab_omega_[i] - tab_omega_[i - 1]);
            return tab_n_[i - 1] + t * (tab_n_[i] - tab_n_[i - 1]);
        }
    }
    return 0.0;
}

double FrequencyDistribution::support_halfwidth() const {
    switch (kind_) {
        case Kind::Lorentzian:
            return 5000.0 * gamma_;
        case Kind::Gaussian:
            return 8.0 * sigma_;
        case Kind::Comb:
            return 5000.0 * gamma_env_;
        case Kind::Tabulated:
            return std::max(std::abs(tab_omega_.front()), std::abs(tab_omega_.back()));
    }
    return 0.0;
}

double FrequencyDistribution::cdf(double omega) const {
    switch (kind_) {
        case Kind::Lorentzian:
            return 0.5 + std::atan(2.0 * omega / gamma_) / pi;
        case Kind::Gaussian:
            return gauss_cdf(omega, 0.0, sigma_);
        case Kind::Comb: {
            const double ht = 0.5 * gamma_tooth_;
            const int m_max = comb_tooth_count();
            double v = 0.0, wsum = 0.0;
            for (int m = -m_max; m <= m_max; ++m) {
                const double center = m * delta_spacing_;
                const double w = comb_tooth_weight(center);
                wsum += w;
                v += w * (0.5 + std::atan((omega - center) / ht) / pi);
            }
            return v / wsum;
        }
        case Kind::Tabulated: {
            if (omega <= tab_omega_.front()) return 0.0;
            if (omega >= tab_omega_.back()) return tab_cdf_.back();
            auto it = std::upper_bound(tab_omega_.begin(), tab_omega_.end(), omega);
            size_t i = it - tab_omega_.begin();
            const double w0 = tab_omega_[i - 1], w1 = tab_omega_[i];
            const double n0 = tab_n_[i - 1], n1 = tab_n_[i];
            const double t = (omega - w0) / (w1 - w0);
            const double seg = (n0 + 0.5 * t * (n1 - n0)) * t * (w1 - w0);
            return tab_cdf_[i - 1] + seg;
        }
    }
    return 0.0;
}

double FrequencyDistribution::normalization_check() const {
    // Quadrature over a finite window plus the analytic tail mass from the
    // CDF; checks density/CDF consistency for the heavy-tailed kinds.
    double l = support_halfwidth();
    if (kind_ == Kind::Lorentzian) l = 50.0 * gamma_;
    if (kind_ == Kind::Comb) l = 50.0 * gamma_env_;
    const double core =
        integrate([this](double w) { return density(w); }, -l, l, 1e-10, 48).value;
    const double tail = 1.0 - (cdf(l) - cdf(-l));
    return core + tail;
}

bool FrequencyDistribution::comb_hierarchy_ok() const {
    if (kind_ != Kind::Comb) return true;
    return gamma_tooth_ * 5.0 <= delta_spacing_ && delta_spacing_ * 5.0 <= gamma_env_;
}

double FrequencyDistribution::storage_time() const {
    if (kind_ != Kind::Comb) throw std::logic_error("storage time requires a comb profile");
    return two_pi / delta_spacing_;
}

}  // namespace darkwave
