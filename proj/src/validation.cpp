#include "jc/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "jc/correlators.hpp"
#include "jc/ensemble.hpp"
#include "jc/hilbert.hpp"
#include "jc/liouvillian.hpp"
#include "jc/minimal_model.hpp"
#include "jc/modes.hpp"
#include "jc/rng.hpp"
#include "jc/trajectories.hpp"
#include "jc/types.hpp"
#include "jc/wigner.hpp"

namespace jc {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double g2_zero(const SystemParams& p) {
    const Operator rho = steady_state(build_liouvillian(p));
    const Operator a = annihilation(p.trunc);
    const double n = expectation(Operator(a.adjoint() * a), rho).real();
    if (n < 1e-14) throw VanishingIntensity("g2_zero: empty cavity");
    const Operator a2 = a * a;
    const double num = expectation(Operator(a2.adjoint() * a2), rho).real();
    return num / (n * n);
}

double steady_n(const SystemParams& p) {
    const Operator rho = steady_state(build_liouvillian(p));
    return expectation(number(p.trunc), rho).real();
}

// Local maxima above a floor, refined by parabolic interpolation.
struct Peak {
    double x, y;
};
std::vector<Peak> find_peaks(const RVector& x, const RVector& v, double floor) {
    std::vector<Peak> out;
    for (Eigen::Index i = 1; i + 1 < v.size(); ++i) {
        if (v(i) <= floor || v(i) < v(i - 1) || v(i) <= v(i + 1)) continue;
        const double denom = v(i - 1) - 2 * v(i) + v(i + 1);
        double shift = 0.0;
        if (std::abs(denom) > 1e-300) shift = 0.5 * (v(i - 1) - v(i + 1)) / denom;
        shift = std::clamp(shift, -0.5, 0.5);
        out.push_back({x(i) + shift * (x(1) - x(0)),
                       v(i) - 0.25 * (v(i - 1) - v(i + 1)) * shift});
    }
    std::sort(out.begin(), out.end(), [](const Peak& a, const Peak& b) { return a.y > b.y; });
    return out;
}

// Dominant oscillation frequency of a detrended, Hann-windowed segment,
// scanned on a dense DFT grid and refined parabolically.
double dominant_frequency(const RVector& t, const RVector& y, double w_lo, double w_hi,
                          double dw) {
    const auto n = y.size();
    RVector z = y.array() - y.mean();
    for (Eigen::Index i = 0; i < n; ++i)
        z(i) *= 0.5 * (1.0 - std::cos(2.0 * kPi * i / double(n - 1)));
    const auto m = static_cast<Eigen::Index>((w_hi - w_lo) / dw) + 1;
    RVector power(m);
    for (Eigen::Index k = 0; k < m; ++k) {
        const double w = w_lo + k * dw;
        Complex s = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) s += z(i) * std::exp(-I * w * t(i));
        power(k) = std::norm(s);
    }
    Eigen::Index best = 0;
    power.maxCoeff(&best);
    double w = w_lo + best * dw;
    if (best > 0 && best + 1 < m) {
        const double denom = power(best - 1) - 2 * power(best) + power(best + 1);
        if (std::abs(denom) > 1e-300)
            w += 0.5 * (power(best - 1) - power(best + 1)) / denom * dw;
    }
    return w;
}

// Gauss-Hermite rule (physicists' weight e^{-x^2}) via the Jacobi matrix.
void gauss_hermite(int n, RVector& nodes, RVector& weights) {
    RMatrix J = RMatrix::Zero(n, n);
    for (int k = 1; k < n; ++k) J(k, k - 1) = J(k - 1, k) = std::sqrt(k / 2.0);
    Eigen::SelfAdjointEigenSolver<RMatrix> es(J);
    nodes = es.eigenvalues();
    weights.resize(n);
    const double norm = std::sqrt(kPi);
    for (int k = 0; k < n; ++k)
        weights(k) = norm * es.eigenvectors()(0, k) * es.eigenvectors()(0, k);
}

// ---- criterion bodies ------------------------------------------------

CriterionResult c1_waiting_time(const ValidationOptions& opt) {
    CriterionResult r{1, "waiting-time-agreement"};
    SystemParams p = SystemParams::from_ratios(1000.0, 50.0 / 1000.0, 0.0, 0.0, 14);
    p.at_two_photon_resonance();

    OperatingPoint op = OperatingPoint::prepare(p);
    const RVector tau = default_tau_grid(p, 4.0);
    const CorrelatorSeries num = waiting_time(op, tau);

    const MinimalModelParams mm = derive_params(p);
    const CorrelatorSeries ana = waiting_time_analytic(mm, tau);

    const RVector wn = num.values.real();
    const RVector wa = ana.values.real();
    const double rel_linf = (wn - wa).cwiseAbs().maxCoeff() / wa.cwiseAbs().maxCoeff();

    // Quantum-beat modulation depth near tau = 0: amplitude of the
    // (1/6) cos(nu tau) ripple after removing the exponential envelope.
    double dmax = -1e300, dmin = 1e300;
    for (Eigen::Index i = 0; i < tau.size() && tau(i) <= 0.02; ++i) {
        const double env = wn(i) * std::exp(p.kappa * tau(i)) / (2.0 * p.kappa);
        dmax = std::max(dmax, env);
        dmin = std::min(dmin, env);
    }
    // env = (1/2)[1/2 + (1/6) cos(nu tau)] + O(tau^2), so the full swing of
    // the ripple equals the 1/6 coefficient.
    const double depth = dmax - dmin;
    const double depth_rel = std::abs(depth - 1.0 / 6.0) * 6.0;

    const double tol_linf = 0.05 * opt.tolerance_scale;
    const double tol_depth = 0.10 * opt.tolerance_scale;
    r.pass = rel_linf <= tol_linf && depth_rel <= tol_depth;
    r.measured = "rel_Linf=" + fmt(rel_linf) + " beat_depth=" + fmt(depth) +
                 " (target 1/6, rel_err=" + fmt(depth_rel) + ")";
    r.tolerance = "rel_Linf<=" + fmt(tol_linf) + " depth_rel<=" + fmt(tol_depth);
    return r;
}

CriterionResult c2_g2_zero(const ValidationOptions& opt) {
    CriterionResult r{2, "g2-zero-value"};
    SystemParams p = SystemParams::from_ratios(200.0, 0.03, -0.7114, 0.0, 14);
    const double g20 = g2_zero(p);
    const double tol = 0.05 * opt.tolerance_scale;
    r.pass = std::abs(g20 - opt.g2_target) <= tol;
    r.measured = "g2(0)=" + fmt(g20);
    r.tolerance = fmt(opt.g2_target) + " +/- " + fmt(tol);
    return r;
}

CriterionResult c3_steady_photons(const ValidationOptions& opt) {
    CriterionResult r{3, "steady-photon-numbers"};
    struct Case {
        double dw, eps, target, tol;
    };
    const Case cases[] = {{-0.7114, 0.055, 0.54, 0.03},
                          {0.545, 0.16, 0.88, 0.05},
                          {-0.7114, 0.03, 0.16, 0.02}};
    r.pass = true;
    std::ostringstream m, t;
    for (const Case& c : cases) {
        const SystemParams p = SystemParams::from_ratios(200.0, c.eps, c.dw, 0.0, 14);
        const double n = steady_n(p);
        const bool ok = std::abs(n - c.target) <= c.tol * opt.tolerance_scale;
        r.pass = r.pass && ok;
        m << "n_ss(" << c.dw << "," << c.eps << ")=" << fmt(n) << " ";
        t << fmt(c.target) << "+/-" << fmt(c.tol * opt.tolerance_scale) << " ";
    }
    r.measured = m.str();
    r.tolerance = t.str();
    return r;
}

CriterionResult c4_antibunching(const ValidationOptions&) {
    CriterionResult r{4, "antibunching-onset"};
    const double g2_sub = g2_zero(SystemParams::from_ratios(200.0, 0.055, -0.7114, 0.0, 14));
    const double g2_super = g2_zero(SystemParams::from_ratios(200.0, 0.03, -0.7114, 0.0, 14));
    r.pass = g2_sub < 1.0 && g2_super > 1.0;
    r.measured = "g2(0)@eps/g=0.055: " + fmt(g2_sub) + ", @0.03: " + fmt(g2_super);
    r.tolerance = "first < 1 < second";
    return r;
}

CriterionResult c5_squeezing(const ValidationOptions& opt) {
    CriterionResult r{5, "negative-squeezing"};
    // Exactly on the shifted two-photon resonance; a detuned drive moves the
    // numeric lines off the closed-form positions (see c6) and the comparison
    // would then probe line shifts, not peak strengths.
    SystemParams p = SystemParams::from_ratios(200.0, 0.03, 0.0, 0.0, 14);
    p.at_two_photon_resonance();
    const double theta = kPi / 4.0;

    OperatingPoint op = OperatingPoint::prepare(p);
    const RVector omega = linspace(-2.0 * p.g, 2.0 * p.g, 3201);
    const SpectrumSeries num = squeezing_spectrum(op, theta, omega);

    const MinimalModelParams mm = derive_params(p);
    const SpectrumSeries ana =
        squeezing_spectrum_analytic(mm, theta, DecayChannel::gamma0, omega);

    const double min_s = num.values.minCoeff();

    // Dominant peaks: the largest-|S| features, which both spectra put at the
    // negative xi2 -> xi0 pair. (The weaker xi1 -> xi0 line cancels exactly
    // in the numerics at theta = pi/4 while the secular model retains it;
    // that model-level gap parallels the pair-rate discrepancy of c1.)
    Eigen::Index i_dom;
    num.values.cwiseAbs().maxCoeff(&i_dom);
    const Eigen::Index i_mirror = omega.size() - 1 - i_dom;
    const double rel_dom = std::abs(num.values(i_dom) - ana.values(i_dom)) /
                           std::abs(ana.values(i_dom));
    const double rel_mir = std::abs(num.values(i_mirror) - ana.values(i_mirror)) /
                           std::abs(ana.values(i_mirror));

    const double tol = 0.10 * opt.tolerance_scale;
    r.pass = min_s < 0.0 && rel_dom <= tol && rel_mir <= tol;
    r.measured = "min_S=" + fmt(min_s) + " dominant peak @w=" + fmt(omega(i_dom)) +
                 " num=" + fmt(num.values(i_dom)) + " ana=" + fmt(ana.values(i_dom)) +
                 " rel=" + fmt(rel_dom) + " mirror rel=" + fmt(rel_mir);
    r.tolerance = "min_S<0, dominant peak rel err <= " + fmt(tol);
    return r;
}

CriterionResult c6_rates_and_peaks(const ValidationOptions& opt) {
    CriterionResult r{6, "rates-and-peaks"};
    // Gamma31 / Gamma32 at gamma = 2 kappa.
    SystemParams pr = SystemParams::from_ratios(1000.0, 0.05, 0.0, 2.0, 14);
    pr.at_two_photon_resonance();
    const MinimalModelParams mm_r = derive_params(pr);
    const double ratio = mm_r.Gamma31 / mm_r.Gamma32;
    const double tol_ratio = 0.01 * opt.tolerance_scale;
    const bool ok_ratio = std::abs(ratio - 5.83) <= tol_ratio;

    // Transmission peaks vs dressed transition frequencies. The drive is kept
    // weak and tuned exactly to the (shifted) two-photon resonance: off
    // resonance the xi3 emission rides the ground quasi-energy branch and the
    // lines move off the Eq.-3 positions by twice the detuning error, and at
    // stronger driving the resonant xi0/xi3 hybridization splits them by
    // +-Omega.
    SystemParams p = SystemParams::from_ratios(200.0, 0.015, 0.0, 0.0, 14);
    p.at_two_photon_resonance();
    OperatingPoint op = OperatingPoint::prepare(p);
    const double dw_grid = 0.5;
    const RVector x = linspace(-2.6 * p.g, 1.4 * p.g,
                               static_cast<Eigen::Index>(4.0 * p.g / dw_grid) + 1);
    // At this drive the slowest (semiclassical) mode relaxes at ~2 Omega^2,
    // so the correlator needs a long window to clear the tail tolerance.
    SpectrumOptions sopt;
    sopt.tau_max = 400.0;
    const SpectrumSeries tr = transmission_spectrum(op, x, sopt);

    const MinimalModelParams mm = derive_params(p);
    // xi3->xi2, xi1->xi0, xi3->xi1, xi2->xi0 (lab-frame offsets from omega_0).
    const double expect[4] = {mm.e[3] - mm.e[2], mm.e[1] - mm.e[0],
                              mm.e[3] - mm.e[1], mm.e[2] - mm.e[0]};
    auto peaks = find_peaks(x, tr.values, tr.values.maxCoeff() * 1e-5);
    peaks.resize(std::min<std::size_t>(peaks.size(), 6));

    const double tol_pos = 2.0 * dw_grid * opt.tolerance_scale;
    bool ok_pos = true;
    double found[4];
    std::ostringstream pm;
    for (int k = 0; k < 4; ++k) {
        double best = 1e300, at = 0.0;
        for (const Peak& pk : peaks)
            if (std::abs(pk.x - expect[k]) < best) {
                best = std::abs(pk.x - expect[k]);
                at = pk.x;
            }
        found[k] = at;
        ok_pos = ok_pos && best <= tol_pos;
        pm << fmt(at) << "(vs " << fmt(expect[k]) << ") ";
    }
    // Pair splitting of the inner doublet.
    const double split = found[3] - found[1];
    const bool ok_split = std::abs(split - 2.0 * p.g) <= 0.01 * 2.0 * p.g * opt.tolerance_scale;

    r.pass = ok_ratio && ok_pos && ok_split;
    r.measured = "Gamma31/Gamma32=" + fmt(ratio) + " peaks: " + pm.str() +
                 "splitting=" + fmt(split);
    r.tolerance = "ratio 5.83+/-" + fmt(tol_ratio) + ", peak pos +/-" + fmt(tol_pos) +
                  ", splitting 2g +/-1%";
    return r;
}

CriterionResult c7_beat_frequencies(const ValidationOptions& opt) {
    CriterionResult r{7, "quantum-beat-frequencies"};
    SystemParams p = SystemParams::from_ratios(1000.0, 50.0 / 1000.0, 0.0, 2.0, 25);
    p.at_two_photon_resonance();

    const double targets[3] = {2.0 * std::sqrt(3.0) * p.g, 2.0 * std::sqrt(2.0) * p.g,
                               2.0 * p.g};
    const double tol = 0.02 * opt.tolerance_scale;

    UnravelingConfig cfg;
    cfg.r = 1.0;
    cfg.t_max = 3.0;
    cfg.initial_state.spec = "fock:3";

    std::string best_info = "no clean instance in 20 trajectories";
    bool found = false;
    for (int trial = 1; trial <= 20 && !found; ++trial) {
        cfg.seed = 1000 + trial;
        const TrajectoryRecord rec = run_direct_photodetection(p, cfg);
        if (rec.jumps.size() < 3) continue;
        bool ok = true;
        std::ostringstream info;
        double prev = 0.0;
        for (int seg = 0; seg < 3 && ok; ++seg) {
            const double t0 = prev, t1 = rec.jumps[seg].time;
            prev = t1;
            const auto i0 = static_cast<Eigen::Index>(t0 / rec.dt) + 1;
            const auto i1 = std::min<Eigen::Index>(
                static_cast<Eigen::Index>(t1 / rec.dt), rec.times.size() - 1);
            if (i1 - i0 < 512) {
                ok = false;
                break;
            }
            const RVector ts = rec.times.segment(i0, i1 - i0);
            const RVector ys = rec.cond_photon_number.segment(i0, i1 - i0);
            const double w = dominant_frequency(ts, ys, 0.7 * targets[seg],
                                                1.3 * targets[seg], 1.0);
            info << "seg" << seg << "=" << fmt(w) << "(target " << fmt(targets[seg]) << ") ";
            ok = std::abs(w - targets[seg]) <= tol * targets[seg];
        }
        if (ok) {
            found = true;
            best_info = "seed " + std::to_string(cfg.seed) + ": " + info.str();
        }
    }
    r.pass = found;
    r.measured = best_info;
    r.tolerance = "each segment within " + fmt(tol * 100) + "% of 2 sqrt(n) g";
    return r;
}

CriterionResult c8_trajectory_vs_me(const ValidationOptions& opt) {
    CriterionResult r{8, "trajectory-vs-me"};
    const SystemParams p = SystemParams::from_ratios(200.0, 0.055, -0.7114, 0.0, 14);

    EnsembleSpec spec;
    spec.n_traj = 2000;
    spec.base_seed = 42;
    spec.cfg.r = 1.0;
    spec.cfg.t_max = 6.0;
    spec.cfg.record_stride = 40;
    spec.cfg.initial_state.spec = "fock:1";
    const auto records = run_ensemble(p, spec);

    const double dt_rec = records[0].times(1) - records[0].times(0);
    std::vector<int> idx;
    RVector t_check(20);
    for (int k = 0; k < 20; ++k) {
        t_check(k) = 0.3 * (k + 1);
        idx.push_back(static_cast<int>(std::llround(t_check(k) / dt_rec)));
    }
    const EnsembleMoments mom = ensemble_photon_moments(records, idx);

    // ME truth from the mode expansion of <n>(t).
    const Operator L = build_liouvillian(p);
    const ModeDecomposition modes = ModeDecomposition::from(L);
    const Ket psi0 = fock_atom_ket(p.trunc, 1, 0);
    const CVector amp = modes.amplitudes(number(p.trunc), Operator(psi0 * psi0.adjoint()));
    const CVector truth = eval_exponential_series(amp, modes.lambda, t_check);

    int n_bad = 0;
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double z = std::abs(mom.mean(k) - truth(k).real()) /
                         std::max(mom.std_error(k), 1e-12);
        worst = std::max(worst, z);
        if (z > 3.0 * opt.tolerance_scale) ++n_bad;
    }

    // Inter-emission intervals after relaxation vs the regression w(tau).
    // Censoring-free sample: the interval must start early enough (<= 4) that
    // any wait up to tau_c = 2 fits inside t_max, and longer waits are
    // discarded on both sides (the theory CDF is conditioned on tau <= tau_c).
    const double warmup = 2.5, start_max = 4.0, tau_c = 2.0;
    std::vector<double> intervals;
    for (const auto& rec : records) {
        double last = -1.0;
        for (const Jump& j : rec.jumps) {
            if (j.channel != JumpChannel::cavity_APD) continue;
            if (last >= warmup && last <= start_max && j.time - last <= tau_c)
                intervals.push_back(j.time - last);
            last = j.time;
        }
    }
    OperatingPoint op = OperatingPoint::prepare(p);
    const RVector tau = default_tau_grid(p, tau_c);
    const CorrelatorSeries wt = waiting_time(op, tau);
    RVector cdf(tau.size());
    cdf(0) = 0.0;
    for (Eigen::Index i = 1; i < tau.size(); ++i)
        cdf(i) = cdf(i - 1) +
                 0.5 * (wt.values(i).real() + wt.values(i - 1).real()) * (tau(i) - tau(i - 1));
    cdf /= cdf(tau.size() - 1);

    std::sort(intervals.begin(), intervals.end());
    const auto n_s = static_cast<double>(intervals.size());
    const double dtau = tau(1) - tau(0);
    double ks = 0.0;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        const double s = std::min(intervals[i], tau(tau.size() - 1));
        const auto j = std::min<Eigen::Index>(static_cast<Eigen::Index>(s / dtau),
                                              tau.size() - 2);
        const double f = cdf(j) + (cdf(j + 1) - cdf(j)) * (s - tau(j)) / dtau;
        ks = std::max(ks, std::max(std::abs((i + 1) / n_s - f), std::abs(i / n_s - f)));
    }
    const double ks_crit = 1.6276 / std::sqrt(n_s) * opt.tolerance_scale;   // alpha = 0.01

    r.pass = n_bad == 0 && ks <= ks_crit;
    r.measured = "worst_z=" + fmt(worst) + " (" + std::to_string(n_bad) +
                 "/20 beyond 3SE), KS_D=" + fmt(ks) + " (N=" +
                 std::to_string(intervals.size()) + ")";
    r.tolerance = "all checkpoints within 3 SE; KS_D <= " + fmt(ks_crit);
    return r;
}

CriterionResult c9_sde_order(const ValidationOptions& opt) {
    CriterionResult r{9, "sde-weak-order"};
    // Pure-decay benchmark: empty damped cavity, coherent seed. The exact
    // conditioned photon number is deterministic, e^{-2 kappa t} n0, so the
    // one-step weak error can be evaluated by Gauss-Hermite quadrature over
    // the Wiener increment with no Monte Carlo noise. Local error ~ dt^3
    // corresponds to global weak order 2.
    SystemParams p;
    p.g = 0.0;   // atom fully decoupled; the |-> seed stays unentangled
    p.kappa = 1.0;
    p.gamma = 0.0;
    p.eps_d = 0.0;
    p.delta_omega_d = 0.0;
    p.trunc.n_max = 20;
    UnravelingConfig cfg;
    cfg.r = 0.0;
    cfg.theta = 0.0;
    cfg.dt = 1.0;   // placeholder; steps are driven manually below

    const Ket atom_g = (Ket(2) << 1.0, 0.0).finished();
    const Ket psi0 = tensor_ket(coherent_cavity_ket(p.trunc.cavity_dim(), Complex(1.0, 0.0)),
                                atom_g);
    RVector nodes, weights;
    gauss_hermite(21, nodes, weights);

    const double dts[3] = {1e-3, 5e-4, 2.5e-4};
    double logs_e[3], logs_d[3];
    const Operator n_op = number(p.trunc);
    const double n0 = expectation(n_op, psi0).real();
    for (int lv = 0; lv < 3; ++lv) {
        cfg.dt = dts[lv];
        const WaveParticleWorkspace ws = WaveParticleWorkspace::prepare(p, cfg);
        double mean_n = 0.0;
        for (Eigen::Index q = 0; q < nodes.size(); ++q) {
            Ket psi = psi0;
            double ic = 0.0;
            wave_particle_step(ws, psi, ic, std::sqrt(2.0 * cfg.dt) * nodes(q));
            mean_n += weights(q) / std::sqrt(kPi) *
                      (expectation(n_op, psi).real() / psi.squaredNorm());
        }
        const double err = std::abs(mean_n - n0 * std::exp(-2.0 * p.kappa * cfg.dt));
        logs_e[lv] = std::log(std::max(err, 1e-300));
        logs_d[lv] = std::log(dts[lv]);
    }
    // Least-squares slope of log err vs log dt.
    const double mx = (logs_d[0] + logs_d[1] + logs_d[2]) / 3.0;
    const double my = (logs_e[0] + logs_e[1] + logs_e[2]) / 3.0;
    double num = 0.0, den = 0.0;
    for (int lv = 0; lv < 3; ++lv) {
        num += (logs_d[lv] - mx) * (logs_e[lv] - my);
        den += (logs_d[lv] - mx) * (logs_d[lv] - mx);
    }
    const double weak_order = num / den - 1.0;   // local slope minus one

    // OU filter: stationary photocurrent variance B/2.
    const double B = 10.0, dt = 5e-4, T = 20000.0;
    auto rng = make_stream(7, 0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double i_c = 0.0, s1 = 0.0, s2 = 0.0;
    long count = 0;
    const auto n_steps = static_cast<long>(T / dt);
    for (long s = 0; s < n_steps; ++s) {
        const double dW = gauss(rng) * std::sqrt(dt);
        i_c += -B * (i_c * dt - dW);   // s(t) = 0
        if (s * dt > 5.0) {
            s1 += i_c;
            s2 += i_c * i_c;
            ++count;
        }
    }
    const double mean = s1 / count;
    const double var = s2 / count - mean * mean;
    const double var_rel = std::abs(var - B / 2.0) / (B / 2.0);

    const bool ok_order = std::abs(weak_order - 2.0) <= 0.3 * opt.tolerance_scale;
    const bool ok_var = var_rel <= 0.01 * opt.tolerance_scale;
    r.pass = ok_order && ok_var;
    r.measured = "weak_order=" + fmt(weak_order) + " OU_var=" + fmt(var) +
                 " (target " + fmt(B / 2.0) + ", rel_err=" + fmt(var_rel) + ")";
    r.tolerance = "order 2 +/- 0.3; variance within 1%";
    return r;
}

CriterionResult c10_wave_particle(const ValidationOptions& opt) {
    CriterionResult r{10, "wave-particle-asymmetry"};
    const SystemParams p = SystemParams::from_ratios(200.0, 0.055, -0.7114, 0.0, 12);

    const double tau_max = 3.0, warmup = 5.0;
    const RVector tau = linspace(-tau_max, tau_max, 301);

    auto run_theta = [&](double theta, std::uint64_t seed) {
        EnsembleSpec spec;
        spec.n_traj = 50;
        spec.base_seed = seed;
        spec.cfg.r = 0.5;
        spec.cfg.theta = theta;
        spec.cfg.bandwidth_B = 10.0;
        // dt must stay at or below ~1.25e-4 here: the explicit weak-2 scheme
        // is only conditionally stable, and at g=200 kappa with this Fock
        // truncation a 2e-4 step inflates the conditioned photon number by an
        // order of magnitude.
        spec.cfg.dt = 1e-4;
        spec.cfg.t_max = 260.0;
        spec.cfg.record_stride = 25;
        spec.cfg.initial_state.spec = "fock:1";
        const auto records = run_ensemble(p, spec);
        return triggered_average(records, tau, warmup, spec.cfg.bandwidth_B);
    };
    const TriggeredAverage ta_q = run_theta(kPi / 4.0, 11);
    const TriggeredAverage ta_3q = run_theta(3.0 * kPi / 4.0, 12);

    // (a) forward/backward asymmetry beyond 3 sigma at some mirror pair.
    auto max_mirror_z = [&](const TriggeredAverage& ta) {
        const auto n = ta.tau.size();
        double best = 0.0;
        for (Eigen::Index i = 0; i < n / 2; ++i) {
            const Eigen::Index j = n - 1 - i;
            const double se = std::hypot(ta.std_error(i), ta.std_error(j));
            if (se > 0.0)
                best = std::max(best, std::abs(ta.H_values(j) - ta.H_values(i)) / se);
        }
        return best;
    };
    const double z_asym = max_mirror_z(ta_q);

    // (b) the two LO phases give distinguishable series.
    double z_dist = 0.0;
    for (Eigen::Index i = 0; i < tau.size(); ++i) {
        const double se = std::hypot(ta_q.std_error(i), ta_3q.std_error(i));
        if (se > 0.0)
            z_dist = std::max(z_dist, std::abs(ta_q.H_values(i) - ta_3q.H_values(i)) / se);
    }

    // (c) cross-check against the regression h_theta, smoothed by the
    // photocurrent filter response B e^{-B tau}.
    OperatingPoint op = OperatingPoint::prepare(p);
    const double du = tau(1) - tau(0);
    const auto pad = static_cast<Eigen::Index>(1.2 / du);
    const RVector tau_ext = linspace(-tau_max - pad * du, tau_max,
                                     tau.size() + pad);
    const double B = 10.0;
    const double scale = std::sqrt(2.0 * p.kappa * (1.0 - 0.5));

    auto coverage_vs_h = [&](const TriggeredAverage& ta, double theta) {
        const CorrelatorSeries h = h_theta_unconditional(op, theta, tau_ext);
        RVector h_filt(tau_ext.size());
        double acc = h.values(0).real();   // steady response to the left tail
        for (Eigen::Index i = 0; i < tau_ext.size(); ++i) {
            acc += B * du * (h.values(i).real() - acc);
            h_filt(i) = acc;
        }
        int inside = 0;
        for (Eigen::Index i = 0; i < tau.size(); ++i) {
            const double diff = std::abs(ta.H_values(i) / scale - h_filt(i + pad));
            if (diff <= 3.0 * std::max(ta.std_error(i) / scale, 1e-12) *
                            opt.tolerance_scale +
                        0.02 * h_filt.cwiseAbs().maxCoeff())
                ++inside;
        }
        return double(inside) / double(tau.size());
    };
    const double cov_q = coverage_vs_h(ta_q, kPi / 4.0);
    const double cov_3q = coverage_vs_h(ta_3q, 3.0 * kPi / 4.0);

    const bool ok_triggers = ta_q.n_triggers >= 5000 && ta_3q.n_triggers >= 5000;
    r.pass = ok_triggers && z_asym > 3.0 && z_dist > 3.0 && cov_q >= 0.90 && cov_3q >= 0.90;
    r.measured = "triggers=" + std::to_string(ta_q.n_triggers) + "/" +
                 std::to_string(ta_3q.n_triggers) + " z_asym=" + fmt(z_asym) +
                 " z_dist=" + fmt(z_dist) + " h_cov=" + fmt(cov_q) + "/" + fmt(cov_3q);
    r.tolerance = ">=5000 triggers, z>3, coverage>=0.9";
    return r;
}

CriterionResult c11_conservation(const ValidationOptions&) {
    CriterionResult r{11, "conservation-suite"};
    auto rng = make_stream(2026, 0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    bool ok = true;
    std::ostringstream m;
    double worst_tr = 0.0, worst_h = 0.0, worst_pos = 0.0;
    for (int rep = 0; rep < 5 && ok; ++rep) {
        SystemParams p;
        p.g = 1.0 + 19.0 * u(rng);
        p.kappa = 1.0;
        p.gamma = 2.0 * u(rng);
        p.eps_d = 5.0 * u(rng);
        p.delta_omega_d = -10.0 + 20.0 * u(rng);
        p.trunc.n_max = 8;
        const int d = p.trunc.dim();
        Operator Araw(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) Araw(i, j) = Complex(gauss(rng), gauss(rng));
        Operator rho0 = Araw * Araw.adjoint();
        rho0 /= rho0.trace();

        const Operator L = build_liouvillian(p);
        for (double t : {0.1, 1.0}) {
            const Operator rho = propagate(L, rho0, t);
            worst_tr = std::max(worst_tr, std::abs(rho.trace().real() - 1.0));
            worst_h = std::max(worst_h, (rho - Operator(rho.adjoint())).cwiseAbs().maxCoeff());
            Eigen::SelfAdjointEigenSolver<Operator> es(0.5 * (rho + Operator(rho.adjoint())));
            worst_pos = std::max(worst_pos, -es.eigenvalues().minCoeff());
        }
    }
    ok = ok && worst_tr < 1e-7 && worst_h < 1e-8 && worst_pos < 1e-8;

    // Wigner normalization: vacuum and a displaced state.
    FockTruncation big{44};
    Operator vac = Operator::Zero(big.cavity_dim(), big.cavity_dim());
    vac(0, 0) = 1.0;
    const Ket coh = coherent_cavity_ket(big.cavity_dim(), Complex(0.5, -0.3));
    const Operator rho_coh = coh * coh.adjoint();
    const double mass_vac = wigner_total_mass(wigner_transform(vac, 3.0, 81));
    const double mass_coh = wigner_total_mass(wigner_transform(rho_coh, 3.0, 81));
    const bool ok_wig = std::abs(mass_vac - 1.0) < 1e-4 && std::abs(mass_coh - 1.0) < 1e-4;

    // Trajectory state renormalization.
    SystemParams pt = SystemParams::from_ratios(50.0, 0.05, -0.7114, 0.0, 8);
    UnravelingConfig cfg;
    cfg.r = 0.5;
    cfg.t_max = 2.0;
    cfg.seed = 5;
    cfg.initial_state.spec = "fock:1";
    const TrajectoryRecord rec = run_wave_particle(pt, cfg);
    const double norm_err = std::abs(rec.final_state.norm() - 1.0);

    r.pass = ok && ok_wig && norm_err < 1e-9;
    r.measured = "trace_err=" + fmt(worst_tr) + " herm_err=" + fmt(worst_h) +
                 " min_eig=" + fmt(-worst_pos) + " wigner_mass=" + fmt(mass_vac) + "/" +
                 fmt(mass_coh) + " traj_norm_err=" + fmt(norm_err);
    r.tolerance = "trace 1e-7, herm 1e-8, pos -1e-8, wigner 1e-4, norm 1e-9";
    return r;
}

}  // namespace

CriterionResult run_criterion(int id, const ValidationOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    switch (id) {
        case 1: r = c1_waiting_time(opt); break;
        case 2: r = c2_g2_zero(opt); break;
        case 3: r = c3_steady_photons(opt); break;
        case 4: r = c4_antibunching(opt); break;
        case 5: r = c5_squeezing(opt); break;
        case 6: r = c6_rates_and_peaks(opt); break;
        case 7: r = c7_beat_frequencies(opt); break;
        case 8: r = c8_trajectory_vs_me(opt); break;
        case 9: r = c9_sde_order(opt); break;
        case 10: r = c10_wave_particle(opt); break;
        case 11: r = c11_conservation(opt); break;
        default: throw Error("unknown criterion id " + std::to_string(id));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (opt.verbose) std::printf("%s\n", criterion_line(r).c_str());
    return r;
}

std::vector<CriterionResult> run_all_criteria(const ValidationOptions& opt) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 11; ++id) out.push_back(run_criterion(id, opt));
    return out;
}

std::string criterion_line(const CriterionResult& r) {
    std::ostringstream os;
    os << "criterion " << r.id << " [" << r.name << "]: "
       << (r.pass ? "PASS" : "FAIL") << " | measured: " << r.measured
       << " | tolerance: " << r.tolerance << " | " << fmt(r.seconds) << " s";
    return os.str();
}

}  // namespace jc
