#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "darkwave/sim_state.hpp"

namespace darkwave {

struct IntegratorConfig {
    enum class Kind { Rk4Fixed, AdaptiveRk } kind = Kind::AdaptiveRk;
    double dt = 0.0;            // fixed-step size (Rk4Fixed)
    double rel_tol = 1e-8;
    double abs_floor = 1e-12;   // scale floor multiplier in the error weights
    double h_init = 0.0;        // 0 = automatic
    double h_min = 1e-15;
    double h_max = 0.0;         // 0 = unlimited
    double safety = 0.9;
};

// Per-component error weights built from the physical scales of the layout:
// sqrt(N_j) for spin fluctuation amplitudes, N_j for means, a drive scale for
// the cavity sector.
struct ErrorWeights {
    StateLayout lay;
    std::vector<double> sqrt_n;  // per bin
    std::vector<double> half_n;  // N_j / 2
    double cavity_scale = 1.0;
    double matrix_scale = 1.0;   // typical sqrt(N_j N_k) fluctuation scale

    ErrorWeights() = default;
    ErrorWeights(const BinGrid& grid, double cavity_amplitude);
    double scale_at(size_t idx) const;
};

struct StepStats {
    long accepted = 0;
    long rejected = 0;
    long rhs_evals = 0;
};

// rhs(t, y, dy); on_accept(t, y, h_used) after every accepted step.
template <typename Real>
using RhsFn = std::function<void(double, const Real*, Real*)>;
template <typename Real>
using AcceptFn = std::function<void(double, const Real*)>;

// Integrate y over [t0, t1], stopping exactly on t1 and on every time in
// stops (sorted). Throws on step-size underflow.
template <typename Real>
StepStats integrate_adaptive(std::vector<Real>& y, const RhsFn<Real>& rhs,
                             double t0, double t1, const IntegratorConfig& cfg,
                             const ErrorWeights& weights,
                             const std::vector<double>& stops = {},
                             const AcceptFn<Real>& on_accept = nullptr,
                             const std::function<double(double)>& h_limit = nullptr);

template <typename Real>
StepStats integrate_rk4(std::vector<Real>& y, const RhsFn<Real>& rhs, double t0,
                        double t1, double dt,
                        const AcceptFn<Real>& on_accept = nullptr);

extern template StepStats integrate_adaptive<double>(
    std::vector<double>&, const RhsFn<double>&, double, double,
    const IntegratorConfig&, const ErrorWeights&, const std::vector<double>&,
    const AcceptFn<double>&, const std::function<double(double)>&);
extern template StepStats integrate_adaptive<float>(
    std::vector<float>&, const RhsFn<float>&, double, double,
    const IntegratorConfig&, const ErrorWeights&, const std::vector<double>&,
    const AcceptFn<float>&, const std::function<double(double)>&);
extern template StepStats integrate_rk4<double>(std::vector<double>&,
                                                const RhsFn<double>&, double,
                                                double, double,
                                                const AcceptFn<double>&);
extern template StepStats integrate_rk4<float>(std::vector<float>&,
                                               const RhsFn<float>&, double,
                                               double, double,
                                               const AcceptFn<float>&);

}  // namespace darkwave
