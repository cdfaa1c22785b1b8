#include "jc/ensemble.hpp"

#include <cmath>
#include <random>

#include "jc/errors.hpp"
#include "jc/rng.hpp"

namespace jc {

std::vector<TrajectoryRecord> run_ensemble(const SystemParams& p, const EnsembleSpec& spec) {
    std::vector<TrajectoryRecord> records;
    records.reserve(spec.n_traj);
    for (int k = 0; k < spec.n_traj; ++k) {
        UnravelingConfig cfg = spec.cfg;
        // Decorrelate member streams; splitmix64 keeps them independent of n_traj.
        std::uint64_t st = spec.base_seed;
        for (int j = 0; j <= k; ++j) splitmix64(st);
        cfg.seed = st;
        records.push_back(cfg.r >= 1.0 ? run_direct_photodetection(p, cfg)
                                       : run_wave_particle(p, cfg));
    }
    return records;
}

TriggeredAverage triggered_average(const std::vector<TrajectoryRecord>& records,
                                   const RVector& tau_grid, double warmup,
                                   double bandwidth_B, int bootstrap_rounds,
                                   std::uint64_t bootstrap_seed) {
    const auto n_tau = tau_grid.size();
    const double tau_abs = std::max(std::abs(tau_grid.minCoeff()),
                                    std::abs(tau_grid.maxCoeff()));

    // Per-trajectory trigger sums, so the bootstrap can resample whole records.
    std::vector<RVector> traj_sum;
    std::vector<int> traj_count;
    int n_triggers = 0;
    for (const auto& rec : records) {
        if (rec.photocurrent.size() != rec.times.size())
            throw DimensionMismatch("triggered_average: record lacks a photocurrent");
        const double t_end = rec.times(rec.times.size() - 1);
        const double dt_rec = rec.times(1) - rec.times(0);
        RVector sum = RVector::Zero(n_tau);
        int count = 0;
        for (const Jump& j : rec.jumps) {
            if (j.channel != JumpChannel::cavity_APD) continue;
            if (j.time < warmup + tau_abs || j.time > t_end - tau_abs) continue;
            for (Eigen::Index q = 0; q < n_tau; ++q) {
                const double t = j.time + tau_grid(q);
                const auto idx = static_cast<Eigen::Index>(std::llround(t / dt_rec));
                sum(q) += rec.photocurrent(std::min(idx, rec.photocurrent.size() - 1));
            }
            ++count;
        }
        traj_sum.push_back(std::move(sum));
        traj_count.push_back(count);
        n_triggers += count;
    }
    if (n_triggers == 0)
        throw NoTriggers("triggered_average: no usable cavity-APD triggers");

    TriggeredAverage out;
    out.tau = tau_grid;
    out.n_triggers = n_triggers;
    out.shot_noise_floor = std::sqrt(bandwidth_B / (2.0 * n_triggers));
    RVector total = RVector::Zero(n_tau);
    for (const auto& s : traj_sum) total += s;
    out.H_values = total / n_triggers;

    // Block bootstrap over trajectories.
    out.std_error = RVector::Zero(n_tau);
    if (bootstrap_rounds > 1) {
        auto rng = make_stream(bootstrap_seed, 0);
        std::uniform_int_distribution<std::size_t> pick(0, traj_sum.size() - 1);
        RMatrix reps(bootstrap_rounds, n_tau);
        for (int b = 0; b < bootstrap_rounds; ++b) {
            RVector s = RVector::Zero(n_tau);
            long c = 0;
            for (std::size_t k = 0; k < traj_sum.size(); ++k) {
                const std::size_t j = pick(rng);
                s += traj_sum[j];
                c += traj_count[j];
            }
            reps.row(b) = (c > 0) ? RVector(s / double(c)).transpose()
                                  : out.H_values.transpose();
        }
        const RVector mu = reps.colwise().mean();
        for (Eigen::Index q = 0; q < n_tau; ++q) {
            const double var = (reps.col(q).array() - mu(q)).square().sum()
                               / (bootstrap_rounds - 1);
            out.std_error(q) = std::sqrt(var);
        }
    }
    return out;
}

EnsembleMoments ensemble_photon_moments(const std::vector<TrajectoryRecord>& records,
                                        const std::vector<int>& sample_indices) {
    const auto n_pts = static_cast<Eigen::Index>(sample_indices.size());
    const auto n_traj = static_cast<Eigen::Index>(records.size());
    if (n_traj < 2) throw DimensionMismatch("ensemble_photon_moments: need >= 2 records");
    EnsembleMoments m;
    m.mean = RVector::Zero(n_pts);
    m.std_error = RVector::Zero(n_pts);
    for (Eigen::Index q = 0; q < n_pts; ++q) {
        const int idx = sample_indices[q];
        double s = 0.0, s2 = 0.0;
        for (const auto& rec : records) {
            const double v = rec.cond_photon_number(idx);
            s += v;
            s2 += v * v;
        }
        m.mean(q) = s / n_traj;
        const double var = (s2 - n_traj * m.mean(q) * m.mean(q)) / (n_traj - 1);
        m.std_error(q) = std::sqrt(std::max(0.0, var) / n_traj);
    }
    return m;
}

}  // namespace jc
