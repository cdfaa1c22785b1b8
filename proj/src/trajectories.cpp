#include "jc/trajectories.hpp"

#include <cmath>

#include "jc/errors.hpp"
#include "jc/hilbert.hpp"
#include "jc/liouvillian.hpp"
#include "jc/rng.hpp"

namespace jc {

double default_step(const SystemParams& p) {
    return 1.0 / (20.0 * 2.0 * p.g);
}

namespace {

Operator non_hermitian_hamiltonian(const SystemParams& p) {
    const Operator a = annihilation(p.trunc);
    const Operator sm = sigma_minus(p.trunc);
    Operator H = build_hamiltonian(p);
    H -= I * p.kappa * Operator(a.adjoint() * a);
    if (p.gamma > 0.0) H -= I * 0.5 * p.gamma * Operator(sm.adjoint() * sm);
    return H;
}

// exp(-i H' dt) for the (non-Hermitian) drift, via one dense eigensolve.
Operator drift_propagator(const Operator& Hp, double dt) {
    Eigen::ComplexEigenSolver<Operator> es(Hp);
    if (es.info() != Eigen::Success)
        throw Error("drift_propagator: eigensolver failed");
    CVector ph(es.eigenvalues().size());
    for (Eigen::Index k = 0; k < ph.size(); ++k)
        ph(k) = std::exp(-I * es.eigenvalues()(k) * dt);
    const Operator& V = es.eigenvectors();
    return V * ph.asDiagonal() * V.inverse();
}

Ket initial_ket(const SystemParams& p, const InitialState& st, std::mt19937_64& rng) {
    if (st.spec.rfind("fock:", 0) == 0) {
        const int n = std::stoi(st.spec.substr(5));
        if (n > p.trunc.n_max) throw ConfigError("initial_state: Fock index above n_max");
        return fock_atom_ket(p.trunc, n, 0);
    }
    if (st.spec == "steady-sample") {
        const Operator rho = steady_state(build_liouvillian(p));
        Eigen::SelfAdjointEigenSolver<Operator> es(rho);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double pick = u(rng), acc = 0.0;
        for (Eigen::Index k = es.eigenvalues().size() - 1; k >= 0; --k) {
            acc += std::max(0.0, es.eigenvalues()(k));
            if (pick <= acc || k == 0) return es.eigenvectors().col(k).normalized();
        }
    }
    throw ConfigError("initial_state: unknown spec '" + st.spec + "'");
}

}  // namespace

TrajectoryRecord run_direct_photodetection(const SystemParams& p, const UnravelingConfig& cfg) {
    const double dt = cfg.dt > 0.0 ? cfg.dt : default_step(p);
    const Operator a = annihilation(p.trunc);
    const Operator sm = sigma_minus(p.trunc);
    const Operator n_op = a.adjoint() * a;
    const Operator e_op = sm.adjoint() * sm;
    const Operator U = drift_propagator(non_hermitian_hamiltonian(p), dt);

    auto rng = make_stream(cfg.seed, 0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    Ket psi = initial_ket(p, cfg.initial_state, rng);
    const auto n_steps = static_cast<long>(std::llround(cfg.t_max / dt));
    const long n_rec = n_steps / cfg.record_stride + 1;

    TrajectoryRecord rec;
    rec.seed = cfg.seed;
    rec.dt = dt;
    rec.times.resize(n_rec);
    rec.cond_photon_number.resize(n_rec);
    rec.cond_quadrature.resize(n_rec);
    const Operator Aq = quadrature(p.trunc, cfg.theta);

    long r = 0;
    for (long s = 0; s <= n_steps; ++s) {
        if (s % cfg.record_stride == 0) {
            rec.times(r) = s * dt;
            rec.cond_photon_number(r) = expectation(n_op, psi).real();
            rec.cond_quadrature(r) = expectation(Aq, psi).real();
            ++r;
        }
        if (s == n_steps) break;

        const double pn = expectation(n_op, psi).real();
        const double pe = (p.gamma > 0.0) ? expectation(e_op, psi).real() : 0.0;
        const double p_cav = 2.0 * p.kappa * pn * dt;
        const double p_spont = p.gamma * pe * dt;
        const double p_jump = p_cav + p_spont;
        if (p_jump > 0.1)
            throw StepTooLarge("direct photodetection: jump probability above 0.1 per step");

        if (unif(rng) < p_jump) {
            const bool cavity = unif(rng) * p_jump < p_cav;
            psi = cavity ? Ket(a * psi) : Ket(sm * psi);
            const double nrm = psi.norm();
            if (nrm < 1e-12) throw NormUnderflow("collapse annihilated the state");
            psi /= nrm;
            rec.jumps.push_back({(s + 1) * dt,
                                 cavity ? JumpChannel::cavity_APD : JumpChannel::spontaneous});
        } else {
            psi = U * psi;
            psi.normalize();
        }
    }
    rec.times.conservativeResize(r);
    rec.cond_photon_number.conservativeResize(r);
    rec.cond_quadrature.conservativeResize(r);
    rec.final_state = psi;
    return rec;
}

WaveParticleWorkspace WaveParticleWorkspace::prepare(const SystemParams& p,
                                                     const UnravelingConfig& cfg) {
    WaveParticleWorkspace ws;
    ws.params = p;
    ws.cfg = cfg;
    ws.dt = cfg.dt > 0.0 ? cfg.dt : default_step(p);
    ws.a = annihilation(p.trunc);
    ws.n = ws.a.adjoint() * ws.a;
    ws.Hprime = non_hermitian_hamiltonian(p);
    ws.G = std::sqrt(2.0 * p.kappa * (1.0 - cfg.r)) * std::exp(-I * cfg.theta) * ws.a;
    ws.Aq = quadrature(p.trunc, cfg.theta);
    return ws;
}

void wave_particle_step(const WaveParticleWorkspace& ws, Ket& psi, double& i_current,
                        double dW) {
    const double dt = ws.dt;
    // Conditioned coefficient, frozen at the start of the step (normalized state).
    const double s_amp = std::sqrt(8.0 * ws.params.kappa * (1.0 - ws.cfg.r))
                         * expectation(ws.Aq, psi).real() / psi.squaredNorm();

    // Linear record SDE d psi = D psi dt + G psi dW,
    // D = -i H' + s G, explicit weak order 2.0 (Kloeden-Platen).
    auto drift = [&](const Ket& v) -> Ket {
        return -I * (ws.Hprime * v) + s_amp * (ws.G * v);
    };
    const double sq = std::sqrt(dt);
    const Ket Dpsi = drift(psi);
    const Ket Gpsi = ws.G * psi;
    const Ket upsilon = psi + Dpsi * dt + Gpsi * dW;
    const Ket plus = psi + Dpsi * dt + Gpsi * sq;
    const Ket minus = psi + Dpsi * dt - Gpsi * sq;
    psi = psi + 0.5 * (drift(upsilon) + Dpsi) * dt
        + 0.25 * (ws.G * plus + ws.G * minus + 2.0 * Gpsi) * dW
        + 0.25 * (ws.G * plus - ws.G * minus) * (dW * dW - dt) / sq;

    const double nrm = psi.norm();
    if (nrm < 1e-12) throw NormUnderflow("wave_particle_step: state norm underflow");
    psi /= nrm;

    // Photocurrent filter driven by the same Wiener increment.
    const double B = ws.cfg.bandwidth_B;
    i_current += -B * (i_current * dt - s_amp * dt - dW);
}

TrajectoryRecord run_wave_particle(const SystemParams& p, const UnravelingConfig& cfg) {
    const WaveParticleWorkspace ws = WaveParticleWorkspace::prepare(p, cfg);
    const double dt = ws.dt;
    auto rng = make_stream(cfg.seed, 0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    Ket psi = initial_ket(p, cfg.initial_state, rng);
    const auto n_steps = static_cast<long>(std::llround(cfg.t_max / dt));
    const long n_rec = n_steps / cfg.record_stride + 1;

    TrajectoryRecord rec;
    rec.seed = cfg.seed;
    rec.dt = dt;
    rec.times.resize(n_rec);
    rec.cond_photon_number.resize(n_rec);
    rec.cond_quadrature.resize(n_rec);
    rec.photocurrent.resize(n_rec);

    double i_current = 0.0;
    long r = 0;
    for (long s = 0; s <= n_steps; ++s) {
        if (s % cfg.record_stride == 0) {
            rec.times(r) = s * dt;
            rec.cond_photon_number(r) = expectation(ws.n, psi).real();
            rec.cond_quadrature(r) = expectation(ws.Aq, psi).real();
            rec.photocurrent(r) = i_current;
            ++r;
        }
        if (s == n_steps) break;

        wave_particle_step(ws, psi, i_current, gauss(rng) * std::sqrt(dt));

        if (cfg.r > 0.0) {
            const double pn = expectation(ws.n, psi).real();
            const double p_apd = 2.0 * p.kappa * cfg.r * pn * dt;
            double p_spont = 0.0;
            if (p.gamma > 0.0) {
                const Operator sm = sigma_minus(p.trunc);
                p_spont = p.gamma * expectation(Operator(sm.adjoint() * sm), psi).real() * dt;
            }
            if (p_apd + p_spont > 0.1)
                throw StepTooLarge("wave_particle: jump probability above 0.1 per step");
            const double u = unif(rng);
            if (u < p_apd) {
                psi = ws.a * psi;
                const double nrm = psi.norm();
                if (nrm < 1e-12) throw NormUnderflow("collapse annihilated the state");
                psi /= nrm;
                rec.jumps.push_back({(s + 1) * dt, JumpChannel::cavity_APD});
            } else if (p.gamma > 0.0 && u < p_apd + p_spont) {
                const Operator sm = sigma_minus(p.trunc);
                psi = sm * psi;
                psi.normalize();
                rec.jumps.push_back({(s + 1) * dt, JumpChannel::spontaneous});
            }
        }
    }
    rec.times.conservativeResize(r);
    rec.cond_photon_number.conservativeResize(r);
    rec.cond_quadrature.conservativeResize(r);
    rec.photocurrent.conservativeResize(r);
    rec.final_state = psi;
    return rec;
}

Ket conditioned_state_at(const SystemParams& p, const UnravelingConfig& cfg, double t_snap) {
    UnravelingConfig c = cfg;
    c.t_max = t_snap;
    const TrajectoryRecord rec = (c.r >= 1.0) ? run_direct_photodetection(p, c)
                                              : run_wave_particle(p, c);
    return rec.final_state;
}

}  // namespace jc
