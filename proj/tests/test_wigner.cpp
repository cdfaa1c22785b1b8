#include "doctest.h"

#include <cmath>

#include "jc/errors.hpp"
#include "jc/hilbert.hpp"
#include "jc/modes.hpp"
#include "jc/wigner.hpp"

using namespace jc;

namespace {

constexpr double kPi = 3.14159265358979323846;

Operator fock_density(int dim, int n) {
    Operator rho = Operator::Zero(dim, dim);
    rho(n, n) = 1.0;
    return rho;
}

}  // namespace

TEST_CASE("vacuum Wigner function is the 2/pi Gaussian") {
    const WignerGrid w = wigner_transform(fock_density(25, 0), 2.0, 41);
    const Eigen::Index c = 20;   // x = p = 0
    CHECK(w.values(c, c) == doctest::Approx(2.0 / kPi).epsilon(1e-10));
    // profile accuracy degrades toward the guard boundary with the basis size
    for (Eigen::Index i = 0; i < w.x.size(); i += 7)
        for (Eigen::Index j = 0; j < w.p.size(); j += 7) {
            const double r2 = w.x(i) * w.x(i) + w.p(j) * w.p(j);
            CHECK(std::abs(w.values(i, j) - 2.0 / kPi * std::exp(-2.0 * r2)) < 1e-5);
        }
    CHECK(wigner_total_mass(w) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("Fock |1> is negative at the origin") {
    const WignerGrid w = wigner_transform(fock_density(45, 1), 3.0, 61);
    CHECK(w.values(30, 30) == doctest::Approx(-2.0 / kPi).epsilon(1e-10));
    CHECK(wigner_total_mass(w) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("coherent state peaks at its amplitude") {
    const Complex alpha(0.8, -0.4);
    const Ket c = coherent_cavity_ket(30, alpha);
    const WignerGrid w = wigner_transform(Operator(c * c.adjoint()), 2.5, 101);
    Eigen::Index imax = 0, jmax = 0;
    double best = -1e300;
    for (Eigen::Index i = 0; i < w.x.size(); ++i)
        for (Eigen::Index j = 0; j < w.p.size(); ++j)
            if (w.values(i, j) > best) {
                best = w.values(i, j);
                imax = i;
                jmax = j;
            }
    const double dx = w.x(1) - w.x(0);
    CHECK(std::abs(w.x(imax) - alpha.real()) <= dx);
    CHECK(std::abs(w.p(jmax) - alpha.imag()) <= dx);
    CHECK(best == doctest::Approx(2.0 / kPi).epsilon(1e-3));
}

TEST_CASE("marginals reproduce the quadrature distributions") {
    const RVector x_pts = linspace(0.0, 1.75, 8);
    const RVector p_pts = linspace(-3.5, 3.5, 141);
    for (int n : {0, 1}) {
        const WignerGrid w = wigner_transform(fock_density(50, n), x_pts, p_pts);
        const double dp = w.p(1) - w.p(0);
        for (Eigen::Index i = 0; i < w.x.size(); ++i) {
            double marg = 0.0;
            for (Eigen::Index j = 1; j < w.p.size(); ++j)
                marg += 0.5 * (w.values(i, j) + w.values(i, j - 1)) * dp;
            const double x = w.x(i);
            const double psi2 =
                n == 0 ? std::sqrt(2.0 / kPi) * std::exp(-2.0 * x * x)
                       : 4.0 * x * x * std::sqrt(2.0 / kPi) * std::exp(-2.0 * x * x);
            CHECK(std::abs(marg - psi2) < 1e-3);
        }
    }
}

TEST_CASE("rotating the state rotates the distribution") {
    const int dim = 30;
    const Ket c = coherent_cavity_ket(dim, Complex(0.5, 0.0));
    const Operator rho = c * c.adjoint();
    // e^{i (pi/2) n} rho e^{-i (pi/2) n}: alpha -> i alpha
    Operator U = Operator::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) U(n, n) = std::exp(I * (kPi / 2.0) * double(n));
    const Operator rho_rot = U * rho * U.adjoint();

    const RVector grid = linspace(-1.5, 1.5, 31);
    const WignerGrid w0 = wigner_transform(rho, grid, grid);
    const WignerGrid w1 = wigner_transform(rho_rot, grid, grid);
    // W_rot(x, p) = W(p, -x) on the symmetric grid
    const auto m = grid.size();
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j)
            CHECK(std::abs(w1.values(i, j) - w0.values(j, m - 1 - i)) < 1e-9);
}

TEST_CASE("truncation guard rejects grids the basis cannot support") {
    CHECK_THROWS_AS(wigner_transform(fock_density(6, 0), 3.0, 11), TruncationLeak);
}
