#pragma once

#include <complex>
#include <vector>

#include "darkwave/bins.hpp"
#include "darkwave/simulate.hpp"

namespace darkwave {

// Output-field two-time correlations kappa <d a^dag(t) d a(t')> (normal) and
// kappa <d a(t) d a(t')> (anomalous), on a rows x cols grid. Rows are the
// propagation start times; values for row > col follow from hermiticity /
// symmetry of the output field.
struct TwoTimeCorrelation {
    enum class Kind { Normal, Anomalous } kind = Kind::Normal;
    std::vector<double> t_rows;
    std::vector<double> t_cols;
    std::vector<std::complex<double>> v;  // rows x cols; NaN-free, zero below diag

    std::complex<double> at(size_t r, size_t c) const {
        return v[r * t_cols.size() + c];
    }
    // Correlation at arbitrary (t, t') with the exchange rule applied.
    std::complex<double> value(double t, double tp) const;
};

class QrtEngine {
  public:
    QrtEngine(const BinGrid& grid, const CavitySpec& cavity,
              const CoeffRecord& coeffs, double rel_tol = 1e-7);

    enum class LeftOp { A, ADag };

    // Propagate <d O(t0) d a(t)> from a covariance snapshot at t0 and sample
    // the cavity correlator on t_cols (entries < t0 are zero).
    std::vector<std::complex<double>> propagate(const CovSnapshot& snap,
                                                LeftOp op,
                                                const std::vector<double>& t_cols) const;

    // Equal-time <d a^dag d a> reconstructed from the snapshot (consistency
    // hook for the trajectory moments).
    static double equal_time_photon(const CovSnapshot& snap) { return snap.nf; }

    // Build a full output-field grid from per-row snapshots (parallel rows).
    TwoTimeCorrelation output_grid(const std::vector<CovSnapshot>& rows,
                                   TwoTimeCorrelation::Kind kind,
                                   const std::vector<double>& t_cols) const;

  private:
    void coeff_at(double t, std::complex<double>& alpha,
                  std::vector<std::complex<double>>& p,
                  std::vector<double>& z) const;
    void rhs(double t, const std::vector<std::complex<double>>& c,
             std::vector<std::complex<double>>& dc) const;

    const BinGrid& grid_;
    CavitySpec cavity_;
    const CoeffRecord& coeffs_;
    double rel_tol_;
    double kappa_ = 0.0;
    int m_ = 0;
};

}  // namespace darkwave
