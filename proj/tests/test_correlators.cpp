#include "doctest.h"

#include <cmath>

#include "jc/correlators.hpp"
#include "jc/hilbert.hpp"
#include "jc/liouvillian.hpp"

using namespace jc;

namespace {

constexpr double kPi = 3.14159265358979323846;

OperatingPoint& test_point() {
    // Small but structured operating point; shared across cases because the
    // generator eigensolve dominates the test cost.
    static OperatingPoint op =
        OperatingPoint::prepare(SystemParams::from_ratios(20.0, 0.08, -0.7, 0.0, 6));
    return op;
}

}  // namespace

TEST_CASE("g2(0) equals the normally ordered moment") {
    OperatingPoint& op = test_point();
    RVector tau(2);
    tau << 0.0, 0.5;
    const CorrelatorSeries s = g2(op, tau);
    const Operator a2 = op.a * op.a;
    const double direct = expectation(Operator(a2.adjoint() * a2), op.rho_ss).real() /
                          (op.n_ss * op.n_ss);
    CHECK(std::abs(s.values(0).real() - direct) < 1e-9);
    // factorization at long delays
    RVector far(1);
    far << 40.0;
    CHECK(std::abs(g2(op, far).values(0).real() - 1.0) < 1e-6);
}

TEST_CASE("waiting time: w(0) identity and unit normalization") {
    OperatingPoint& op = test_point();
    RVector tau(3);
    tau << 0.0, 0.2, 1.0;
    const CorrelatorSeries w = waiting_time(op, tau);

    // w(0) = 2 kappa <n> g2(0)
    const Operator a2 = op.a * op.a;
    const double g20 = expectation(Operator(a2.adjoint() * a2), op.rho_ss).real() /
                       (op.n_ss * op.n_ss);
    CHECK(std::abs(w.values(0).real() - 2.0 * op.params.kappa * op.n_ss * g20) < 1e-8);

    REQUIRE(w.integral.has_value());
    CHECK(std::abs(*w.integral - 1.0) < 1e-8);
    CHECK(w.values(1).real() > 0.0);
}

TEST_CASE("first-order correlator starts at <n> and factorizes") {
    OperatingPoint& op = test_point();
    RVector tau(2);
    tau << 0.0, 50.0;
    const CorrelatorSeries c1 = first_order_corr(op, tau);
    CHECK(std::abs(c1.values(0).real() - op.n_ss) < 1e-9);
    const Complex a_ss = expectation(op.a, op.rho_ss);
    CHECK(std::abs(c1.values(1) - std::conj(a_ss) * a_ss) < 1e-7);
}

TEST_CASE("h_theta symmetries and long-delay limit") {
    OperatingPoint& op = test_point();
    const RVector tau = linspace(-3.0, 3.0, 61);
    const double th = 0.6;
    const CorrelatorSeries h = h_theta_unconditional(op, th, tau);
    const CorrelatorSeries h_flip = h_theta_unconditional(op, th + kPi, tau);
    for (Eigen::Index i = 0; i < tau.size(); ++i)
        CHECK(std::abs(h.values(i) + h_flip.values(i)) < 1e-10);

    RVector far(1);
    far << 60.0;
    const CorrelatorSeries h_far = h_theta_unconditional(op, th, far);
    const Complex a_ss = expectation(op.a, op.rho_ss);
    const double limit = 2.0 * (std::exp(-I * th) * a_ss).real();
    CHECK(std::abs(h_far.values(0).real() - limit) < 1e-7);
}

TEST_CASE("squeezing spectrum: evenness, theta periodicity, zero-frequency check") {
    OperatingPoint& op = test_point();
    const RVector omega = linspace(-60.0, 60.0, 241);
    const SpectrumSeries s = squeezing_spectrum(op, kPi / 4.0, omega);
    for (Eigen::Index i = 0; i < omega.size(); ++i) {
        const Eigen::Index j = omega.size() - 1 - i;
        CHECK(std::abs(s.values(i) - s.values(j)) < 1e-10);
    }
    const SpectrumSeries s_pi = squeezing_spectrum(op, kPi / 4.0 + kPi, omega);
    CHECK((s.values - s_pi.values).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("transmission spectrum has unit area") {
    OperatingPoint& op = test_point();
    const SystemParams& p = op.params;
    const RVector x = linspace(-3.0 * p.g, 2.0 * p.g, 4001);
    const SpectrumSeries t = transmission_spectrum(op, x);
    double area = 0.0;
    for (Eigen::Index i = 1; i < x.size(); ++i)
        area += 0.5 * (t.values(i) + t.values(i - 1)) * (x(i) - x(i - 1));
    CHECK(std::abs(area - 1.0) < 1e-9);
    CHECK(t.values.minCoeff() > -1e-6);   // physical spectrum, up to tail ripple
}
