#pragma once

// Seeded trajectory ensembles, trigger-averaged photocurrents, and the
// statistics backing the trajectory-vs-ME consistency checks.

#include <cstdint>
#include <vector>

#include "jc/trajectories.hpp"
#include "jc/types.hpp"

namespace jc {

struct EnsembleSpec {
    int n_traj = 100;
    std::uint64_t base_seed = 1;
    UnravelingConfig cfg{};
    double warmup = 0.0;      // discarded before statistics (units 1/kappa)
};

std::vector<TrajectoryRecord> run_ensemble(const SystemParams& p, const EnsembleSpec& spec);

struct TriggeredAverage {
    RVector tau;              // two-sided delays
    RVector H_values;         // H(tau), trigger-averaged photocurrent
    RVector std_error;        // bootstrap over trajectories
    int n_triggers = 0;
    double shot_noise_floor = 0.0;   // sqrt(B / (2 N_s)) white-noise scale
};

// H(tau) = (1/N_s) sum_j i(t_j + tau) over cavity-APD triggers occurring
// after warmup and at least max|tau| from the record edges.
TriggeredAverage triggered_average(const std::vector<TrajectoryRecord>& records,
                                   const RVector& tau_grid, double warmup,
                                   double bandwidth_B, int bootstrap_rounds = 200,
                                   std::uint64_t bootstrap_seed = 7);

// Ensemble mean and standard error of the conditioned photon number at the
// given sample indices.
struct EnsembleMoments {
    RVector mean;
    RVector std_error;
};
EnsembleMoments ensemble_photon_moments(const std::vector<TrajectoryRecord>& records,
                                        const std::vector<int>& sample_indices);

}  // namespace jc
