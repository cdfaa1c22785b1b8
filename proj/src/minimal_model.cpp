#include "jc/minimal_model.hpp"

#include <cmath>
#include <vector>

#include "jc/errors.hpp"
#include "jc/liouvillian.hpp"

namespace jc {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;
}

MinimalModelParams derive_params(const SystemParams& p) {
    MinimalModelParams mm{};
    const double w = p.eps_d * p.eps_d / p.g;   // eps^2/g, the shift scale
    mm.g = p.g;
    mm.gamma = p.gamma;
    mm.kappa = p.kappa;
    mm.Omega = 2.0 * kSqrt2 * w;
    mm.Gamma31 = p.gamma / 4.0 + (kSqrt2 + 1.0) * (kSqrt2 + 1.0) * p.kappa / 2.0;
    mm.Gamma32 = p.gamma / 4.0 + (kSqrt2 - 1.0) * (kSqrt2 - 1.0) * p.kappa / 2.0;
    mm.Gamma = p.gamma / 2.0 + p.kappa;
    mm.Gamma3 = mm.Gamma31 + mm.Gamma32;
    mm.delta[0] = kSqrt2 * w;
    mm.delta[1] = -(20.0 + 19.0 * kSqrt2) / 7.0 * w;
    mm.delta[2] = (20.0 - 19.0 * kSqrt2) / 7.0 * w;
    mm.delta[3] = -kSqrt2 * w;
    mm.e[0] = mm.delta[0];
    mm.e[1] = -p.g + mm.delta[1];
    mm.e[2] = p.g + mm.delta[2];
    mm.e[3] = -kSqrt2 * p.g + mm.delta[3];
    mm.nu = mm.e[2] - mm.e[1];   // 2g + (40/7) eps^2/g
    mm.resonant_detuning = SystemParams::two_photon_resonance_detuning(p.g, p.eps_d);
    return mm;
}

CascadeSteadyState cascade_steady_state(const MinimalModelParams& mm) {
    CascadeSteadyState s{};
    const double O2 = mm.Omega * mm.Omega;
    s.p3 = 4.0 * O2 / (mm.Gamma3 * mm.Gamma3 + 4.0 * O2 * (2.0 + mm.Gamma3 / mm.Gamma));
    s.p1 = (mm.Gamma31 / mm.Gamma) * s.p3;
    s.p2 = (mm.Gamma32 / mm.Gamma) * s.p3;
    s.p0 = 1.0 - s.p1 - s.p2 - s.p3;
    s.rho03 = I * mm.Gamma3 * s.p3 / (2.0 * mm.Omega);
    return s;
}

Operator effective_liouvillian(const MinimalModelParams& mm, double delta_omega_d) {
    Operator H = Operator::Zero(4, 4);
    for (int k = 0; k < 4; ++k)
        H(k, k) = mm.e[k] - kLevelExcitation[k] * delta_omega_d;
    H(0, 3) = mm.Omega;
    H(3, 0) = mm.Omega;

    const Operator id = Operator::Identity(4, 4);
    Operator L = -I * (tensor(id, H) - tensor(H.transpose(), id));
    auto ket_bra = [](int i, int j) {
        Operator m = Operator::Zero(4, 4);
        m(i, j) = 1.0;
        return m;
    };
    L += lindblad_dissipator(ket_bra(1, 3), mm.Gamma31);
    L += lindblad_dissipator(ket_bra(2, 3), mm.Gamma32);
    L += lindblad_dissipator(ket_bra(0, 1), mm.Gamma);
    L += lindblad_dissipator(ket_bra(0, 2), mm.Gamma);
    return L;
}

FourStateDensity effective_propagate(const MinimalModelParams& mm, double delta_omega_d,
                                     const FourStateDensity& rho0, double t) {
    const Operator L = effective_liouvillian(mm, delta_omega_d);
    const Operator out = propagate(L, Operator(rho0), t);
    return FourStateDensity(out);
}

CorrelatorSeries waiting_time_analytic(const MinimalModelParams& mm, const RVector& tau,
                                       const WaitingTimeOptions& opt) {
    const double k = mm.kappa, O2 = mm.Omega * mm.Omega;
    const double nu = (opt.printed_form || !opt.nu_shift) ? 2.0 * mm.g : mm.nu;
    const Complex D(9.0 * k * k - 16.0 * O2, 0.0);
    // sinh argument: derived from the cascade-matrix eigenvalues; the printed
    // variant replaces 16 Omega^2 by 9 Omega^2 under the root.
    const Complex q = opt.printed_form
        ? std::sqrt(Complex(9.0 * k * k - 9.0 * O2, 0.0)) / 4.0
        : std::sqrt(D) / 4.0;
    const double rabi_amp = opt.printed_form ? 3.0 * O2 : 12.0 * O2;

    CorrelatorSeries s;
    s.kind = CorrelatorKind::waiting_time;
    s.method = "analytic";
    s.tau = tau;
    s.values = CVector::Zero(tau.size());
    for (Eigen::Index j = 0; j < tau.size(); ++j) {
        const double t = tau(j);
        const double beat = 0.5 * (0.5 * std::exp(-k * t)
                                   + std::exp(-k * t) * std::cos(nu * t) / 6.0);
        const Complex sh = std::sinh(q * t);
        const double rabi = std::real(rabi_amp * sh * sh / D) * std::exp(-1.5 * k * t);
        s.values(j) = 2.0 * k * (beat + rabi);
    }
    return s;
}

RVector waiting_time_lower_asymptote(const MinimalModelParams& mm, const RVector& tau) {
    return (mm.kappa / 3.0) * (-mm.kappa * tau).array().exp();
}

namespace {

// One autonomous pair u' = -a u + s i Omega v, v' = -b v + s i Omega u.
// Returns the slow envelopes over tau >= 0 (complex-analytic through the
// overdamped branch).
struct PairSolution {
    Complex m, mu, delta;
    Complex u0, v0;
    double sign;
    double Omega;

    Complex u(double t) const {
        const Complex c = cosf(t), s = sinf(t);
        return std::exp(-m * t) * (u0 * c + (delta * u0 + sign * I * Omega * v0) * s);
    }
    Complex v(double t) const {
        const Complex c = cosf(t), s = sinf(t);
        return std::exp(-m * t) * (v0 * c + (-delta * v0 + sign * I * Omega * u0) * s);
    }

private:
    // cos(mu t) and sin(mu t)/mu, stable as mu -> 0.
    Complex cosf(double t) const { return std::cos(mu * t); }
    Complex sinf(double t) const {
        if (std::abs(mu) * t < 1e-8) return Complex(t, 0.0);
        return std::sin(mu * t) / mu;
    }
};

PairSolution make_pair(double a, double b, double sign, double Omega,
                       Complex u0, Complex v0) {
    PairSolution ps;
    ps.m = 0.5 * (a + b);
    ps.delta = 0.5 * (b - a);
    ps.mu = std::sqrt(Complex(Omega * Omega, 0.0) - ps.delta * ps.delta);
    ps.sign = sign;
    ps.Omega = Omega;
    ps.u0 = u0;
    ps.v0 = v0;
    return ps;
}

MinimalModelParams channel_params(const MinimalModelParams& mm, DecayChannel ch) {
    if (ch == DecayChannel::gamma0 && mm.gamma == 0.0) return mm;
    if (ch == DecayChannel::gamma_eq_2kappa && mm.gamma == 2.0 * mm.kappa) return mm;
    SystemParams p;
    p.g = mm.g;
    p.kappa = mm.kappa;
    p.gamma = (ch == DecayChannel::gamma0) ? 0.0 : 2.0 * mm.kappa;
    // Rebuild rates for the requested channel, keeping Omega (drive) fixed.
    p.eps_d = std::sqrt(mm.Omega * mm.g / (2.0 * kSqrt2));
    return derive_params(p);
}

}  // namespace

CorrelatorElements correlator_elements(const MinimalModelParams& mm_in, DecayChannel ch,
                                       const RVector& tau) {
    const MinimalModelParams mm = channel_params(mm_in, ch);
    const CascadeSteadyState ss = cascade_steady_state(mm);
    const double a = mm.Gamma / 2.0, b = mm.Gamma3 / 2.0;
    const double c_plus = (kSqrt2 + 1.0) / 2.0, c_minus = (kSqrt2 - 1.0) / 2.0;

    // <a^dag(0) a(tau)>: (rho10, rho13) and (rho20, rho23) with +i Omega,
    // (rho01, rho31) and (rho02, rho32) with -i Omega; Eq.-B7 initial data.
    const auto p10 = make_pair(a, b, +1.0, mm.Omega, ss.p1 / kSqrt2, 0.0);
    const auto p20 = make_pair(a, b, +1.0, mm.Omega, ss.p2 / kSqrt2, 0.0);
    const auto p31 = make_pair(a, b, -1.0, mm.Omega, c_plus * ss.rho03, c_plus * ss.p3);
    const auto p32 = make_pair(a, b, -1.0, mm.Omega, c_minus * ss.rho03, c_minus * ss.p3);
    // <a(tau) a(0)>: regression seeds a rho_ss instead.
    const Complex rho30 = std::conj(ss.rho03);
    const auto p10a = make_pair(a, b, +1.0, mm.Omega, c_plus * rho30, 0.0);
    const auto p20a = make_pair(a, b, +1.0, mm.Omega, c_minus * rho30, 0.0);

    CorrelatorElements el;
    const auto n = tau.size();
    el.rho10.resize(n); el.rho20.resize(n);
    el.rho31.resize(n); el.rho32.resize(n);
    el.rho10_anom.resize(n); el.rho20_anom.resize(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const double t = tau(j);
        el.rho10(j) = p10.u(t);
        el.rho20(j) = p20.u(t);
        el.rho31(j) = p31.v(t);
        el.rho32(j) = p32.v(t);
        el.rho10_anom(j) = p10a.u(t);
        el.rho20_anom(j) = p20a.u(t);
    }
    return el;
}

namespace {

// Transition phases in the drive-rotating frame. Element rho_ij carries
// e^{-i nu_ij tau}, nu_ij = e_i - e_j - (n_i - n_j) delta_omega_d, evaluated
// at the two-photon resonance the closed forms assume.
double rot_phase(const MinimalModelParams& mm, int i, int j) {
    return mm.e[i] - mm.e[j]
           - (kLevelExcitation[i] - kLevelExcitation[j]) * mm.resonant_detuning;
}

struct ExpSum {
    std::vector<std::pair<Complex, Complex>> terms;   // (coef, rate)

    void add(Complex coef, Complex rate) {
        if (std::abs(coef) > 0.0) terms.emplace_back(coef, rate);
    }
    // coef * env(tau) * e^{-i phase tau}, env from a PairSolution component
    // written as e^{-m tau}[w0 cos(mu tau) + w1 sin(mu tau)/mu].
    void add_envelope(Complex coef, Complex m, Complex mu, Complex w0, Complex w1,
                      double phase) {
        const Complex rot = -I * phase;
        if (std::abs(mu) < 1e-12) {   // critically damped: w0 + w1 tau, split off
            // represent by two nearby exponentials (numerically adequate here)
            const Complex eps(1e-7, 0.0);
            add(coef * 0.5 * (w0 + w1 / eps), -m + eps + rot);
            add(coef * 0.5 * (w0 - w1 / eps), -m - eps + rot);
            return;
        }
        add(coef * 0.5 * (w0 + w1 / (I * mu)), -m + I * mu + rot);
        add(coef * 0.5 * (w0 - w1 / (I * mu)), -m - I * mu + rot);
    }
    Complex eval(double t) const {
        Complex s = 0.0;
        for (const auto& [c, r] : terms) s += c * std::exp(r * t);
        return s;
    }
    Complex fourier(double omega) const {   // int_0^inf e^{i omega t} f(t) dt
        Complex s = 0.0;
        for (const auto& [c, r] : terms) s -= c / (r + I * omega);
        return s;
    }
};

struct AnalyticCorrelators {
    ExpSum c1, c2;        // drive-frame <a^dag(0)a(tau)>, <a(tau)a(0)>
    ExpSum c1_lab;        // lab-frame phases (rel. omega_0) for transmission
};

AnalyticCorrelators build_exp_sums(const MinimalModelParams& mm_in, DecayChannel ch) {
    const MinimalModelParams mm = channel_params(mm_in, ch);
    const CascadeSteadyState ss = cascade_steady_state(mm);
    const double a = mm.Gamma / 2.0, b = mm.Gamma3 / 2.0;
    const Complex m = Complex(0.5 * (a + b), 0.0);
    const Complex delta(0.5 * (b - a), 0.0);
    const Complex mu = std::sqrt(Complex(mm.Omega * mm.Omega, 0.0) - delta * delta);
    const double c_plus = (kSqrt2 + 1.0) / 2.0, c_minus = (kSqrt2 - 1.0) / 2.0;
    const Complex rho30 = std::conj(ss.rho03);

    // u-component weights: w0 = u0, w1 = delta u0 + sign i Omega v0;
    // v-component: w0 = v0, w1 = -delta v0 + sign i Omega u0.
    auto u_w1 = [&](double sign, Complex u0, Complex v0) {
        return delta * u0 + sign * I * mm.Omega * v0;
    };
    auto v_w1 = [&](double sign, Complex u0, Complex v0) {
        return -delta * v0 + sign * I * mm.Omega * u0;
    };

    AnalyticCorrelators ac;
    struct Term {
        int i, j;          // element rho_ij
        Complex coef;
        Complex w0, w1;
    };
    const Complex u0_31 = c_plus * ss.rho03, v0_31 = Complex(c_plus * ss.p3, 0.0);
    const Complex u0_32 = c_minus * ss.rho03, v0_32 = Complex(c_minus * ss.p3, 0.0);
    const std::vector<Term> c1_terms = {
        {1, 0, 1.0 / kSqrt2, ss.p1 / kSqrt2, u_w1(+1, ss.p1 / kSqrt2, 0.0)},
        {2, 0, 1.0 / kSqrt2, ss.p2 / kSqrt2, u_w1(+1, ss.p2 / kSqrt2, 0.0)},
        {3, 1, c_plus, v0_31, v_w1(-1, u0_31, v0_31)},
        {3, 2, c_minus, v0_32, v_w1(-1, u0_32, v0_32)},
    };
    const std::vector<Term> c2_terms = {
        {1, 0, 1.0 / kSqrt2, c_plus * rho30, u_w1(+1, c_plus * rho30, 0.0)},
        {2, 0, 1.0 / kSqrt2, c_minus * rho30, u_w1(+1, c_minus * rho30, 0.0)},
    };
    for (const auto& t : c1_terms) {
        ac.c1.add_envelope(t.coef, m, mu, t.w0, t.w1, rot_phase(mm, t.i, t.j));
        ac.c1_lab.add_envelope(t.coef, m, mu, t.w0, t.w1, mm.e[t.i] - mm.e[t.j]);
    }
    for (const auto& t : c2_terms)
        ac.c2.add_envelope(t.coef, m, mu, t.w0, t.w1, rot_phase(mm, t.i, t.j));
    return ac;
}

}  // namespace

CVector first_order_corr_analytic(const MinimalModelParams& mm, DecayChannel ch,
                                  const RVector& tau) {
    const auto ac = build_exp_sums(mm, ch);
    CVector out(tau.size());
    for (Eigen::Index j = 0; j < tau.size(); ++j) out(j) = ac.c1.eval(tau(j));
    return out;
}

CVector anomalous_corr_analytic(const MinimalModelParams& mm, DecayChannel ch,
                                const RVector& tau) {
    const auto ac = build_exp_sums(mm, ch);
    CVector out(tau.size());
    for (Eigen::Index j = 0; j < tau.size(); ++j) out(j) = ac.c2.eval(tau(j));
    return out;
}

SpectrumSeries squeezing_spectrum_analytic(const MinimalModelParams& mm, double theta,
                                           DecayChannel ch, const RVector& omega_grid) {
    const auto ac = build_exp_sums(mm, ch);
    // R(tau) = (1/4)[e^{-2 i theta} C2 + C1 + conj(...)]; S = 4k Re F[R].
    ExpSum R;
    const Complex ph = std::exp(-2.0 * I * theta);
    for (const auto& [c, r] : ac.c2.terms) {
        R.add(0.25 * ph * c, r);
        R.add(0.25 * std::conj(ph * c), std::conj(r));
    }
    for (const auto& [c, r] : ac.c1.terms) {
        R.add(0.25 * c, r);
        R.add(0.25 * std::conj(c), std::conj(r));
    }
    SpectrumSeries s;
    s.kind = SpectrumKind::squeezing;
    s.theta = theta;
    s.method = "analytic";
    s.omega = omega_grid;
    s.values.resize(omega_grid.size());
    for (Eigen::Index w = 0; w < omega_grid.size(); ++w)
        s.values(w) = 2.0 * mm.kappa
                      * std::real(R.fourier(omega_grid(w)) + R.fourier(-omega_grid(w)));
    return s;
}

SpectrumSeries transmission_spectrum_analytic(const MinimalModelParams& mm, DecayChannel ch,
                                              const RVector& omega_grid) {
    const auto ac = build_exp_sums(mm, ch);
    SpectrumSeries s;
    s.kind = SpectrumKind::transmission;
    s.method = "analytic";
    s.omega = omega_grid;   // x = omega - omega_0
    s.values.resize(omega_grid.size());
    for (Eigen::Index w = 0; w < omega_grid.size(); ++w)
        s.values(w) = std::real(ac.c1_lab.fourier(omega_grid(w))) / M_PI;
    double area = 0.0;
    for (Eigen::Index w = 0; w + 1 < omega_grid.size(); ++w)
        area += 0.5 * (s.values(w) + s.values(w + 1)) * (omega_grid(w + 1) - omega_grid(w));
    if (std::abs(area) > 1e-15) s.values /= area;
    return s;
}

Complex laplace_cos_sin_integral(double omega, double a, Complex b, Complex q) {
    const Complex plus = 1.0 / (a - I * (omega + b));
    const Complex minus = 1.0 / (a - I * (omega - b));
    return 0.5 * (plus + minus) + q / (2.0 * I) * (plus - minus);
}

}  // namespace jc
