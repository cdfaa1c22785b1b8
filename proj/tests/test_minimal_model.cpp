#include "doctest.h"

#include <cmath>

#include "jc/correlators.hpp"
#include "jc/hilbert.hpp"
#include "jc/liouvillian.hpp"
#include "jc/minimal_model.hpp"

using namespace jc;

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kPi = 3.14159265358979323846;

MinimalModelParams mm_for(double g, double eps, double gamma) {
    SystemParams p = SystemParams::from_ratios(g, eps / g, 0.0, gamma, 14);
    p.at_two_photon_resonance();
    return derive_params(p);
}

}  // namespace

TEST_CASE("cascade rates from the dressed-state overlaps") {
    const MinimalModelParams m0 = mm_for(1000.0, 50.0, 0.0);
    CHECK(m0.Omega == doctest::Approx(2.0 * kSqrt2 * 2500.0 / 1000.0).epsilon(1e-12));
    // gamma = 0: ratio ((sqrt2+1)/(sqrt2-1))^2 = (sqrt2+1)^4
    CHECK(m0.Gamma31 / m0.Gamma32 ==
          doctest::Approx(std::pow(kSqrt2 + 1.0, 4)).epsilon(1e-12));
    CHECK(m0.Gamma == doctest::Approx(m0.gamma / 2.0 + m0.kappa).epsilon(1e-12));

    const MinimalModelParams m2 = mm_for(1000.0, 50.0, 2.0);
    CHECK(m2.Gamma31 / m2.Gamma32 == doctest::Approx(5.8284271247).epsilon(1e-8));
    CHECK(m2.Gamma3 == doctest::Approx(m2.Gamma31 + m2.Gamma32).epsilon(1e-14));
}

TEST_CASE("dressed energies and the beat frequency") {
    const double g = 1000.0, eps = 50.0, w = eps * eps / g;
    const MinimalModelParams m = mm_for(g, eps, 0.0);
    CHECK(m.e[0] == doctest::Approx(kSqrt2 * w).epsilon(1e-12));
    CHECK(m.e[1] == doctest::Approx(-g - (20.0 + 19.0 * kSqrt2) * w / 7.0).epsilon(1e-12));
    CHECK(m.e[2] == doctest::Approx(g + (20.0 - 19.0 * kSqrt2) * w / 7.0).epsilon(1e-12));
    CHECK(m.e[3] == doctest::Approx(-kSqrt2 * g - kSqrt2 * w).epsilon(1e-12));
    CHECK(m.nu == doctest::Approx(2.0 * g + 40.0 * w / 7.0).epsilon(1e-12));
    CHECK(m.resonant_detuning ==
          doctest::Approx(-g / kSqrt2 - kSqrt2 * w).epsilon(1e-12));
}

TEST_CASE("cascade steady state reduces to the known gamma=0 populations") {
    const MinimalModelParams m = mm_for(1000.0, 30.0, 0.0);
    const CascadeSteadyState ss = cascade_steady_state(m);
    const double O2 = m.Omega * m.Omega, k2 = m.kappa * m.kappa;
    CHECK(ss.p3 == doctest::Approx(4.0 * O2 / (9.0 * k2 + 20.0 * O2)).epsilon(1e-10));
    CHECK(ss.p0 + ss.p1 + ss.p2 + ss.p3 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ss.rho03 == I * m.Gamma3 * ss.p3 / (2.0 * m.Omega));
    // population flux balance within the cascade
    CHECK(ss.p1 * m.Gamma == doctest::Approx(ss.p3 * m.Gamma31).epsilon(1e-10));
    CHECK(ss.p2 * m.Gamma == doctest::Approx(ss.p3 * m.Gamma32).epsilon(1e-10));
}

TEST_CASE("effective four-state generator relaxes to the cascade steady state") {
    const MinimalModelParams m = mm_for(400.0, 20.0, 0.0);
    const Operator Leff = effective_liouvillian(m, m.resonant_detuning);
    const Operator rho = steady_state(Leff);
    const CascadeSteadyState ss = cascade_steady_state(m);
    CHECK(rho(0, 0).real() == doctest::Approx(ss.p0).epsilon(1e-8));
    CHECK(rho(1, 1).real() == doctest::Approx(ss.p1).epsilon(1e-8));
    CHECK(rho(2, 2).real() == doctest::Approx(ss.p2).epsilon(1e-8));
    CHECK(rho(3, 3).real() == doctest::Approx(ss.p3).epsilon(1e-8));
    CHECK(std::abs(rho(0, 3) - ss.rho03) < 1e-8);

    FourStateDensity rho0 = FourStateDensity::Zero();
    rho0(0, 0) = 1.0;
    const FourStateDensity late = effective_propagate(m, m.resonant_detuning, rho0, 40.0);
    CHECK(std::abs(late(3, 3).real() - ss.p3) < 1e-6);
}

TEST_CASE("analytic waiting time matches full numerics at weak drive") {
    // Omega / kappa = 1 / sqrt(2): secular approximation solidly valid.
    SystemParams p = SystemParams::from_ratios(1000.0, std::sqrt(250.0) / 1000.0, 0.0,
                                               0.0, 10);
    p.at_two_photon_resonance();
    OperatingPoint op = OperatingPoint::prepare(p);
    const RVector tau = default_tau_grid(p, 3.0);
    const CorrelatorSeries num = waiting_time(op, tau);
    const CorrelatorSeries ana = waiting_time_analytic(derive_params(p), tau);
    const double rel = (num.values.real() - ana.values.real()).cwiseAbs().maxCoeff() /
                       ana.values.real().cwiseAbs().maxCoeff();
    CHECK(rel < 0.03);
}

TEST_CASE("Rabi term integral is Omega independent") {
    // Stripping the quantum-beat part off the analytic w/(2 kappa) leaves the
    // Rabi piece, whose integral is exactly 1/4 regardless of drive strength.
    for (double eps : {20.0, 50.0, 80.0}) {
        const MinimalModelParams m = mm_for(1000.0, eps, 0.0);
        const RVector tau = linspace(0.0, 60.0, 600001);
        const CorrelatorSeries w = waiting_time_analytic(m, tau);
        double integral = 0.0;
        for (Eigen::Index i = 1; i < tau.size(); ++i) {
            auto rabi = [&](Eigen::Index j) {
                const double beat =
                    0.5 * std::exp(-m.kappa * tau(j)) +
                    std::exp(-m.kappa * tau(j)) * std::cos(m.nu * tau(j)) / 6.0;
                return w.values(j).real() / (2.0 * m.kappa) - 0.5 * beat;
            };
            integral += 0.5 * (rabi(i) + rabi(i - 1)) * (tau(i) - tau(i - 1));
        }
        CHECK(integral * m.kappa == doctest::Approx(0.25).epsilon(2e-3));
    }
}

TEST_CASE("lower asymptote touches the beat minima envelope") {
    const MinimalModelParams m = mm_for(1000.0, 50.0, 0.0);
    RVector tau(2);
    tau << 0.5, 2.0;
    const RVector s = waiting_time_lower_asymptote(m, tau);
    CHECK(s(0) == doctest::Approx(m.kappa / 3.0 * std::exp(-0.5)).epsilon(1e-12));
    CHECK(s(1) == doctest::Approx(m.kappa / 3.0 * std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("pair-solution initial conditions follow the steady cascade") {
    const MinimalModelParams m = mm_for(500.0, 15.0, 0.0);
    const CascadeSteadyState ss = cascade_steady_state(m);
    RVector tau(1);
    tau << 0.0;
    const CorrelatorElements el = correlator_elements(m, DecayChannel::gamma0, tau);
    CHECK(std::abs(el.rho10(0) - ss.p1 / kSqrt2) < 1e-12);
    CHECK(std::abs(el.rho20(0) - ss.p2 / kSqrt2) < 1e-12);
    CHECK(std::abs(el.rho31(0) - (kSqrt2 + 1.0) / 2.0 * ss.p3) < 1e-12);
    CHECK(std::abs(el.rho32(0) - (kSqrt2 - 1.0) / 2.0 * ss.p3) < 1e-12);
    CHECK(std::abs(el.rho10_anom(0) - (kSqrt2 + 1.0) / 2.0 * std::conj(ss.rho03)) < 1e-12);
    CHECK(std::abs(el.rho20_anom(0) - (kSqrt2 - 1.0) / 2.0 * std::conj(ss.rho03)) < 1e-12);
}

TEST_CASE("correlator elements reproduce RK integration of the pair ODEs") {
    const MinimalModelParams m = mm_for(200.0, 6.0, 0.0);
    const CascadeSteadyState ss = cascade_steady_state(m);
    const double a = m.Gamma / 2.0, b = m.Gamma3 / 2.0;

    // RK4 on u' = -a u + s i Omega v, v' = -b v + s i Omega u.
    auto rk_u = [&](double sign, Complex u0, Complex v0, double t_end) {
        Complex u = u0, v = v0;
        const int n_steps = 4000;
        const double h = t_end / n_steps;
        auto du = [&](Complex uu, Complex vv) { return -a * uu + sign * I * m.Omega * vv; };
        auto dv = [&](Complex uu, Complex vv) { return -b * vv + sign * I * m.Omega * uu; };
        for (int s = 0; s < n_steps; ++s) {
            const Complex k1u = du(u, v), k1v = dv(u, v);
            const Complex k2u = du(u + 0.5 * h * k1u, v + 0.5 * h * k1v);
            const Complex k2v = dv(u + 0.5 * h * k1u, v + 0.5 * h * k1v);
            const Complex k3u = du(u + 0.5 * h * k2u, v + 0.5 * h * k2v);
            const Complex k3v = dv(u + 0.5 * h * k2u, v + 0.5 * h * k2v);
            const Complex k4u = du(u + h * k3u, v + h * k3v);
            const Complex k4v = dv(u + h * k3u, v + h * k3v);
            const Complex un = u + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
            const Complex vn = v + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
            u = un; v = vn;
        }
        return std::pair<Complex, Complex>(u, v);
    };

    RVector tau(3);
    tau << 0.4, 1.1, 2.7;
    const CorrelatorElements el = correlator_elements(m, DecayChannel::gamma0, tau);
    const double cp = (kSqrt2 + 1.0) / 2.0, cm = (kSqrt2 - 1.0) / 2.0;
    for (Eigen::Index j = 0; j < tau.size(); ++j) {
        const double t = tau(j);
        CHECK(std::abs(el.rho10(j) - rk_u(+1.0, ss.p1 / kSqrt2, 0.0, t).first) < 1e-8);
        CHECK(std::abs(el.rho20(j) - rk_u(+1.0, ss.p2 / kSqrt2, 0.0, t).first) < 1e-8);
        CHECK(std::abs(el.rho31(j) -
                       rk_u(-1.0, cp * ss.rho03, cp * ss.p3, t).second) < 1e-8);
        CHECK(std::abs(el.rho32(j) -
                       rk_u(-1.0, cm * ss.rho03, cm * ss.p3, t).second) < 1e-8);
        CHECK(std::abs(el.rho10_anom(j) -
                       rk_u(+1.0, cp * std::conj(ss.rho03), 0.0, t).first) < 1e-8);
    }
}

TEST_CASE("analytic first-order correlator vs full numerics at weak drive") {
    SystemParams p = SystemParams::from_ratios(200.0, 0.03, 0.0, 0.0, 10);
    p.at_two_photon_resonance();
    OperatingPoint op = OperatingPoint::prepare(p);
    const RVector tau = default_tau_grid(p, 2.0);
    const CorrelatorSeries num = first_order_corr(op, tau);
    const CVector ana = first_order_corr_analytic(derive_params(p), DecayChannel::gamma0, tau);
    // tau = 0 (phase independent) pins the amplitudes tightly
    CHECK(std::abs(num.values(0) - ana(0)) / std::abs(num.values(0)) < 0.01);
    // The pair ODEs put the rho13/rho31 coherence decay at Gamma3/2 where the
    // effective cascade ME gives (Gamma + Gamma3)/2; the full Liouvillian
    // sides with the latter (overdamped pair modes at -1.25 kappa +- 0.55
    // kappa here instead of -kappa +- i mu). That model-level gap caps the
    // pointwise agreement at the ~15% seen below; it is not a phase bug.
    double worst = 0.0;
    for (Eigen::Index i = 0; i < tau.size(); ++i)
        worst = std::max(worst, std::abs(num.values(i) - ana(i)));
    CHECK(worst / std::abs(ana(0)) < 0.25);
}

TEST_CASE("analytic spectra: squeezing peak positions and transmission lines") {
    const double g = 200.0;
    const MinimalModelParams m = mm_for(g, 6.0, 0.0);
    const double w = 6.0 * 6.0 / g;

    const RVector omega = linspace(-2.0 * g, 2.0 * g, 8001);
    const SpectrumSeries ssq =
        squeezing_spectrum_analytic(m, kPi / 4.0, DecayChannel::gamma0, omega);
    // dominant structure near +/- A and +/- Btilde from the drive
    const double A = g * (1.0 - 1.0 / kSqrt2) + (20.0 + 19.0 * kSqrt2) * w / 7.0;
    Eigen::Index imax;
    ssq.values.cwiseAbs().maxCoeff(&imax);
    CHECK(std::abs(std::abs(omega(imax)) - A) < 2.0);

    const SpectrumSeries tr =
        transmission_spectrum_analytic(m, DecayChannel::gamma0, omega);
    double area = 0.0;
    for (Eigen::Index i = 1; i < omega.size(); ++i)
        area += 0.5 * (tr.values(i) + tr.values(i - 1)) * (omega(i) - omega(i - 1));
    CHECK(area == doctest::Approx(1.0).epsilon(1e-3));
    // the inner doublet sits at e1-e0 and e2-e0, split by ~2g
    Eigen::Index ipk;
    tr.values.cwiseAbs().maxCoeff(&ipk);
    const bool near_line = std::abs(omega(ipk) - (m.e[1] - m.e[0])) < 2.0 ||
                           std::abs(omega(ipk) - (m.e[2] - m.e[0])) < 2.0 ||
                           std::abs(omega(ipk) - (m.e[3] - m.e[1])) < 2.0 ||
                           std::abs(omega(ipk) - (m.e[3] - m.e[2])) < 2.0;
    CHECK(near_line);
}

TEST_CASE("Laplace cos/sin integral against quadrature, both branches") {
    auto quad = [](double omega, double a, Complex b, Complex q) {
        const RVector t = linspace(0.0, 40.0, 400001);
        Complex acc = 0.0;
        for (Eigen::Index i = 1; i < t.size(); ++i) {
            auto f = [&](double tt) {
                return std::exp(I * omega * tt) * std::exp(-a * tt) *
                       (std::cos(b * tt) + q * std::sin(b * tt));
            };
            acc += 0.5 * (f(t(i)) + f(t(i - 1))) * (t(i) - t(i - 1));
        }
        return acc;
    };
    // oscillatory branch (real b)
    CHECK(std::abs(laplace_cos_sin_integral(0.9, 1.3, Complex(0.7, 0.0), Complex(0.2, 0.1)) -
                   quad(0.9, 1.3, Complex(0.7, 0.0), Complex(0.2, 0.1))) < 1e-6);
    // overdamped branch (imaginary b, i.e. cosh/sinh)
    CHECK(std::abs(laplace_cos_sin_integral(0.4, 2.0, Complex(0.0, 0.9), Complex(0.0, -0.3)) -
                   quad(0.4, 2.0, Complex(0.0, 0.9), Complex(0.0, -0.3))) < 1e-6);
}
