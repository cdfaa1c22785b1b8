#include "jc/correlators.hpp"

#include <cmath>

#include "jc/errors.hpp"

namespace jc {

OperatingPoint OperatingPoint::prepare(const SystemParams& p) {
    OperatingPoint op;
    op.params = p;
    op.a = annihilation(p.trunc);
    op.n = op.a.adjoint() * op.a;
    const Operator L = build_liouvillian(p);
    op.rho_ss = steady_state(L);
    op.n_ss = expectation(op.n, op.rho_ss).real();
    op.L_modes = ModeDecomposition::from(L);
    return op;
}

const ModeDecomposition& OperatingPoint::bar_modes() {
    if (!Lbar_modes) {
        const Operator L = build_liouvillian(params);
        Lbar_modes = ModeDecomposition::from(remove_cavity_feeding(L, params));
    }
    return *Lbar_modes;
}

RVector default_tau_grid(const SystemParams& p, double tau_max) {
    const double dtau = M_PI / (10.0 * 2.0 * p.g);
    const auto n = static_cast<Eigen::Index>(std::ceil(tau_max / dtau)) + 1;
    return linspace(0.0, tau_max, n);
}

CorrelatorSeries g2(OperatingPoint& op, const RVector& tau_grid) {
    if (op.n_ss <= 1e-12)
        throw VanishingIntensity("g2: steady-state intensity vanishes");
    const Operator rho_cond_unnorm = op.a * op.rho_ss * op.a.adjoint();
    const CVector amp = op.L_modes.amplitudes(op.n, rho_cond_unnorm);
    CorrelatorSeries s;
    s.kind = CorrelatorKind::g2;
    s.tau = tau_grid;
    s.values = eval_exponential_series(amp, op.L_modes.lambda, tau_grid)
               / (op.n_ss * op.n_ss);
    s.values = s.values.real().cast<Complex>();
    return s;
}

CorrelatorSeries waiting_time(OperatingPoint& op, const RVector& tau_grid) {
    if (op.n_ss <= 1e-12)
        throw VanishingIntensity("waiting_time: steady-state intensity vanishes");
    const auto& bar = op.bar_modes();
    const Operator x0 = op.a * op.rho_ss * op.a.adjoint() / op.n_ss;
    const CVector amp = bar.amplitudes(op.n, x0);
    CorrelatorSeries s;
    s.kind = CorrelatorKind::waiting_time;
    s.tau = tau_grid;
    s.values = 2.0 * op.params.kappa
               * eval_exponential_series(amp, bar.lambda, tau_grid).real().cast<Complex>();
    s.integral = 2.0 * op.params.kappa
                 * exponential_series_integral(amp, bar.lambda).real();
    return s;
}

CorrelatorSeries first_order_corr(OperatingPoint& op, const RVector& tau_grid) {
    const CVector amp = op.L_modes.amplitudes(op.a, op.rho_ss * op.a.adjoint());
    CorrelatorSeries s;
    s.kind = CorrelatorKind::first_order;
    s.tau = tau_grid;
    s.values = eval_exponential_series(amp, op.L_modes.lambda, tau_grid);
    return s;
}

CorrelatorSeries anomalous_corr(OperatingPoint& op, const RVector& tau_grid) {
    const CVector amp = op.L_modes.amplitudes(op.a, op.a * op.rho_ss);
    CorrelatorSeries s;
    s.kind = CorrelatorKind::anomalous;
    s.tau = tau_grid;
    s.values = eval_exponential_series(amp, op.L_modes.lambda, tau_grid);
    return s;
}

CorrelatorSeries h_theta_unconditional(OperatingPoint& op, double theta,
                                       const RVector& tau_grid) {
    if (op.n_ss <= 1e-12)
        throw VanishingIntensity("h_theta: steady-state intensity vanishes");
    const Operator rho_cond = op.a * op.rho_ss * op.a.adjoint() / op.n_ss;
    const CVector amp_fwd = op.L_modes.amplitudes(op.a, rho_cond);

    // Time-reversed branch: the field is read out before the trigger, so the
    // regression inserts A_theta symmetrically at the earlier time and the
    // photon number at the later one. Normalization by the trigger rate.
    const Operator Aq = quadrature(op.params.trunc, theta);
    const Operator x_back = 0.5 * (Aq * op.rho_ss + op.rho_ss * Aq);
    const CVector amp_back = op.L_modes.amplitudes(op.n, x_back);

    CorrelatorSeries s;
    s.kind = CorrelatorKind::h_theta;
    s.theta = theta;
    s.tau = tau_grid;
    s.values = CVector::Zero(tau_grid.size());
    for (Eigen::Index j = 0; j < tau_grid.size(); ++j) {
        const double tau = tau_grid(j);
        if (tau >= 0.0) {
            Complex a_c = 0.0;
            for (Eigen::Index k = 0; k < amp_fwd.size(); ++k)
                a_c += amp_fwd(k) * std::exp(op.L_modes.lambda(k) * tau);
            s.values(j) = 2.0 * std::real(a_c * std::exp(-I * theta));
        } else {
            Complex v = 0.0;
            for (Eigen::Index k = 0; k < amp_back.size(); ++k)
                v += amp_back(k) * std::exp(op.L_modes.lambda(k) * (-tau));
            // 2 <A_theta(-|tau|) n(0)>_sym / <n>
            s.values(j) = 2.0 * v.real() / op.n_ss;
        }
    }
    return s;
}

namespace {

// R_theta(tau) on a dense grid from the Delta-correlator mode amplitudes.
struct RThetaData {
    RVector tau;
    CVector c1, c2;   // fluctuation parts of <a^dag(0)a(tau)>, <a(tau)a(0)>
};

RThetaData correlator_tail_data(OperatingPoint& op, const SpectrumOptions& opt) {
    RThetaData d;
    d.tau = default_tau_grid(op.params, opt.tau_max);
    CVector amp1 = op.L_modes.amplitudes(op.a, op.rho_ss * op.a.adjoint());
    CVector amp2 = op.L_modes.amplitudes(op.a, op.a * op.rho_ss);
    amp1 = drop_stationary_modes(amp1, op.L_modes.lambda);
    amp2 = drop_stationary_modes(amp2, op.L_modes.lambda);
    d.c1 = eval_exponential_series(amp1, op.L_modes.lambda, d.tau);
    d.c2 = eval_exponential_series(amp2, op.L_modes.lambda, d.tau);
    const double tail = std::max(std::abs(d.c1(d.tau.size() - 1)),
                                 std::abs(d.c2(d.tau.size() - 1)));
    if (tail > opt.tail_tol)
        throw UnconvergedTail("spectrum: correlator tail above tolerance at tau_max");
    return d;
}

// Trapezoid cosine transform, arbitrary omega grid.
RVector cosine_transform(const RVector& tau, const RVector& f, const RVector& omega,
                         double prefactor) {
    const double dtau = tau(1) - tau(0);
    RVector out(omega.size());
    for (Eigen::Index w = 0; w < omega.size(); ++w) {
        double acc = 0.0;
        for (Eigen::Index j = 0; j < tau.size(); ++j) {
            const double weight = (j == 0 || j + 1 == tau.size()) ? 0.5 : 1.0;
            acc += weight * std::cos(omega(w) * tau(j)) * f(j);
        }
        out(w) = prefactor * acc * dtau;
    }
    return out;
}

}  // namespace

SpectrumSeries squeezing_spectrum(OperatingPoint& op, double theta,
                                  const RVector& omega_grid, const SpectrumOptions& opt) {
    const RThetaData d = correlator_tail_data(op, opt);
    RVector R(d.tau.size());
    for (Eigen::Index j = 0; j < d.tau.size(); ++j)
        R(j) = 0.5 * std::real(std::exp(-2.0 * I * theta) * d.c2(j) + d.c1(j));
    SpectrumSeries s;
    s.kind = SpectrumKind::squeezing;
    s.theta = theta;
    s.omega = omega_grid;
    s.values = cosine_transform(d.tau, R, omega_grid, 4.0 * op.params.kappa);
    return s;
}

SpectrumSeries transmission_spectrum(OperatingPoint& op, const RVector& omega_grid,
                                     const SpectrumOptions& opt) {
    const RThetaData d = correlator_tail_data(op, opt);
    // T(x) = (1/pi) Re int e^{i(x - dw_d) tau} C1(tau) d tau, x = omega - omega_0;
    // the e^{-i dw_d tau} undoes the drive-frame rotation of the correlator.
    const double dtau = d.tau(1) - d.tau(0);
    SpectrumSeries s;
    s.kind = SpectrumKind::transmission;
    s.omega = omega_grid;
    s.values.resize(omega_grid.size());
    for (Eigen::Index w = 0; w < omega_grid.size(); ++w) {
        const double x = omega_grid(w) - op.params.delta_omega_d;
        Complex acc = 0.0;
        for (Eigen::Index j = 0; j < d.tau.size(); ++j) {
            const double weight = (j == 0 || j + 1 == d.tau.size()) ? 0.5 : 1.0;
            acc += weight * std::exp(I * x * d.tau(j)) * d.c1(j);
        }
        s.values(w) = std::real(acc) * dtau / M_PI;
    }
    // Unit area on the supplied grid.
    double area = 0.0;
    for (Eigen::Index w = 0; w + 1 < omega_grid.size(); ++w)
        area += 0.5 * (s.values(w) + s.values(w + 1)) * (omega_grid(w + 1) - omega_grid(w));
    if (std::abs(area) > 1e-15) s.values /= area;
    return s;
}

}  // namespace jc
