#pragma once

#include <complex>
#include <string>
#include <vector>

#include "darkwave/bins.hpp"
#include "darkwave/drive.hpp"
#include "darkwave/integrator.hpp"
#include "darkwave/rhs_fast.hpp"
#include "darkwave/sim_state.hpp"

namespace darkwave {

struct SimConfig {
    IntegratorConfig::Kind integrator = IntegratorConfig::Kind::AdaptiveRk;
    double dt = 0.0;               // fixed-step size for RK4
    double rel_tol_drive = 1e-8;   // while any ARP segment is active
    double rel_tol_free = 1e-6;
    double abs_floor = 1e-9;
    double sample_interval = 5e-8;  // trajectory output sampling
    bool single_precision = false;

    // dt must resolve the fastest scale when running fixed-step
    void check_dt(double omega_rabi, double kappa, double band) const;
};

// Mean values in the co-rotating frame stored at accepted steps, for the
// two-time correlation replay.
struct CoeffRecord {
    std::vector<double> t;
    std::vector<std::complex<double>> alpha;           // per step
    std::vector<std::complex<double>> p;               // step-major, m per step
    std::vector<double> z;                             // step-major, m per step
};

// Cavity-sector covariances at requested times (initial conditions for the
// correlation propagation).
struct CovSnapshot {
    double t = 0.0;
    double nf = 0.0;
    std::complex<double> ff;
    std::vector<std::complex<double>> vp, vm, vz;  // rotated frame
};

struct Trajectory {
    std::vector<double> t;                       // accepted-step times
    std::vector<std::complex<double>> a_mean;    // lab-frame <a>
    std::vector<std::complex<double>> a_out;     // E(t) - sqrt(kappa) <a>
    std::vector<double> photons;                 // <a^dag a>
    std::vector<double> sz_total;                // sum_j <Sz_j>
    CoeffRecord coeffs;
    std::vector<CovSnapshot> snapshots;
    StepStats stats;
    double wall_seconds = 0.0;
    std::vector<std::string> warnings;
};

struct RecordingPlan {
    double coeff_t_lo = 0.0, coeff_t_hi = -1.0;  // window for CoeffRecord
    std::vector<double> snapshot_times;          // sorted
};

struct SimProblem {
    BinGrid grid;
    CavitySpec cavity;
    DriveWaveform drive;
    SimConfig config;
    double t_end = 0.0;
    SpinRegime start = SpinRegime::Ground;
};

Trajectory run_simulation(const SimProblem& problem, const RecordingPlan& plan);

// Energy of <a_out> over a window, by trapezoid on the accepted steps.
double output_energy(const Trajectory& tr, double t_lo, double t_hi);
// Peak |<a_out>| location in a window.
double output_peak_time(const Trajectory& tr, double t_lo, double t_hi);
// Drive energy int |E|^2 dt over a window.
double drive_energy(const DriveWaveform& drive, double t_lo, double t_hi);

}  // namespace darkwave
