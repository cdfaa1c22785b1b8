#include "doctest.h"

#include "jc/hilbert.hpp"

using namespace jc;

TEST_CASE("tensor product matches the hand-expanded Kronecker") {
    Operator A(2, 2), B(2, 2);
    A << 1.0, 2.0, 3.0, 4.0;
    B << 0.0, Complex(0.0, 1.0), 5.0, 6.0;
    const Operator T = tensor(A, B);
    REQUIRE(T.rows() == 4);
    CHECK(T(0, 1) == Complex(0.0, 1.0));        // A(0,0) B(0,1)
    CHECK(T(1, 0) == Complex(5.0, 0.0));
    CHECK(T(0, 3) == Complex(0.0, 2.0));        // A(0,1) B(0,1)
    CHECK(T(3, 2) == Complex(20.0, 0.0));       // A(1,1) B(1,0)
    CHECK(tensor(Operator::Identity(3, 3), Operator::Identity(2, 2))
              .isApprox(Operator::Identity(6, 6)));
}

TEST_CASE("ladder and composite operators") {
    FockTruncation t{4};
    const Operator a = annihilation(t);
    const Operator n = number(t);
    // a|n,atom> = sqrt(n) |n-1,atom>
    const Ket k2 = fock_atom_ket(t, 2, 1);
    const Ket down = a * k2;
    CHECK(std::abs(down(2 * 1 + 1) - std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(expectation(n, k2).real() - 2.0) < 1e-14);
    // commutator truncates only in the top level
    const Operator comm = a * a.adjoint() - a.adjoint() * a;
    CHECK(std::abs(comm(0, 0) - 1.0) < 1e-14);
    // sigma_minus annihilates the ground atom
    CHECK((sigma_minus(t) * fock_atom_ket(t, 1, 0)).norm() < 1e-14);
    CHECK((sigma_minus(t) * fock_atom_ket(t, 1, 1) - fock_atom_ket(t, 1, 0)).norm() < 1e-14);
}

TEST_CASE("coherent state expectations") {
    const Complex alpha(0.6, -0.2);
    const Ket c = coherent_cavity_ket(25, alpha);
    const Operator a = destroy(25);
    CHECK(std::abs(c.dot(a * c) - alpha) < 1e-10);
    CHECK(std::abs(c.dot(a.adjoint() * a * c).real() - std::norm(alpha)) < 1e-10);
}

TEST_CASE("quadrature is Hermitian with the right commutators") {
    FockTruncation t{6};
    const Operator X = quadrature(t, 0.3);
    CHECK((X - Operator(X.adjoint())).cwiseAbs().maxCoeff() < 1e-14);
    // A_theta + A_{theta+pi} = 0
    CHECK((quadrature(t, 0.3) + quadrature(t, 0.3 + 3.14159265358979323846))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
}

TEST_CASE("partial trace and projected blocks") {
    FockTruncation t{3};
    Ket psi = 0.6 * fock_atom_ket(t, 1, 0) + 0.8 * fock_atom_ket(t, 2, 1);
    const Operator rho = psi * psi.adjoint();
    const Operator cav = partial_trace_atom(rho);
    CHECK(std::abs(cav.trace().real() - 1.0) < 1e-14);
    CHECK(std::abs(cav(1, 1).real() - 0.36) < 1e-14);
    CHECK(std::abs(cav(2, 2).real() - 0.64) < 1e-14);
    // coherences between different atom states do not survive the trace
    CHECK(std::abs(cav(1, 2)) < 1e-14);
    const Operator blk0 = atom_projected_block(rho, 0);
    CHECK(std::abs(blk0(1, 1).real() - 0.36) < 1e-14);
    CHECK(std::abs(blk0(2, 2)) < 1e-14);
}
