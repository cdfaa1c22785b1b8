#pragma once

// Stochastic unravelings of the source master equation: direct
// photodetection (r = 1, pure jumps) and the wave-particle correlator
// (APD jumps plus a diffusive homodyne record, 0 <= r < 1).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jc/types.hpp"

namespace jc {

enum class JumpChannel { cavity_APD, spontaneous };

struct Jump {
    double time;
    JumpChannel channel;
};

struct InitialState {
    // "fock:n" (cavity |n>, atom |->), "steady-sample" (pure-state draw from
    // the rho_ss eigendecomposition, per-trajectory).
    std::string spec = "fock:0";
};

struct UnravelingConfig {
    double r = 1.0;              // fraction of flux to the APD
    double theta = 0.0;          // LO phase
    double bandwidth_B = 10.0;   // photocurrent filter bandwidth (units of kappa)
    double dt = 0.0;             // 0: auto, 1/(20 * 2g)
    std::uint64_t seed = 1;
    double t_max = 10.0;
    int record_stride = 1;
    InitialState initial_state{};
};

struct TrajectoryRecord {
    RVector times;
    RVector cond_photon_number;    // <a^dag a>_REC
    RVector cond_quadrature;       // <A_theta>_c
    RVector photocurrent;          // i(t), empty when r = 1
    std::vector<Jump> jumps;
    std::uint64_t seed = 0;
    Ket final_state;
    double dt = 0.0;
};

double default_step(const SystemParams& p);

TrajectoryRecord run_direct_photodetection(const SystemParams& p, const UnravelingConfig& cfg);

// Shared operator workspace so ensembles do not rebuild/exponentiate per
// trajectory.
struct WaveParticleWorkspace {
    SystemParams params;
    UnravelingConfig cfg;
    double dt;
    Operator a, n, Hprime;
    Operator G;                  // sqrt(2 kappa (1-r)) a e^{-i theta}
    Operator Aq;                 // A_theta
    static WaveParticleWorkspace prepare(const SystemParams& p, const UnravelingConfig& cfg);
};

// One explicit weak order-2.0 step of the linear record SDE, with the
// conditioned-average coefficient frozen at its start-of-step value; the same
// Wiener increment dW drives the photocurrent filter. Jump decisions are
// taken by the caller (kept separate for testability).
void wave_particle_step(const WaveParticleWorkspace& ws, Ket& psi, double& i_current,
                        double dW);

TrajectoryRecord run_wave_particle(const SystemParams& p, const UnravelingConfig& cfg);

// Conditioned cavity state at a recorded time (nearest sample) of a re-run
// trajectory; exposed for Wigner snapshots.
Ket conditioned_state_at(const SystemParams& p, const UnravelingConfig& cfg, double t_snap);

}  // namespace jc
