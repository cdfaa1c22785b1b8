#pragma once

// Operators and states on the truncated space H_cav(n_max) (x) H_atom.
// Ordering convention, fixed globally: cavity (x) atom, atom basis
// index 0 = |-> (ground), 1 = |+>. Every module builds through these
// helpers so the bases can never drift apart.

#include <cmath>

#include "jc/errors.hpp"
#include "jc/types.hpp"

namespace jc {

inline Operator tensor(const Operator& left, const Operator& right) {
    if (left.rows() != left.cols() || right.rows() != right.cols())
        throw DimensionMismatch("tensor: factors must be square");
    const auto n = left.rows(), m = right.rows();
    Operator out(n * m, n * m);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out.block(i * m, j * m, m, m) = left(i, j) * right;
    return out;
}

inline Ket tensor_ket(const Ket& left, const Ket& right) {
    Ket out(left.size() * right.size());
    for (Eigen::Index i = 0; i < left.size(); ++i)
        out.segment(i * right.size(), right.size()) = left(i) * right;
    return out;
}

// Ladder operator on the bare cavity factor, a[n-1, n] = sqrt(n).
inline Operator destroy(int cavity_dim) {
    Operator a = Operator::Zero(cavity_dim, cavity_dim);
    for (int n = 1; n < cavity_dim; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

inline Operator sigma_minus_bare() {
    Operator s = Operator::Zero(2, 2);
    s(0, 1) = 1.0;   // |-><+|
    return s;
}

// Composite-space operators.
inline Operator annihilation(const FockTruncation& t) {
    return tensor(destroy(t.cavity_dim()), Operator::Identity(2, 2));
}

inline Operator sigma_minus(const FockTruncation& t) {
    return tensor(Operator::Identity(t.cavity_dim(), t.cavity_dim()), sigma_minus_bare());
}

inline Operator number(const FockTruncation& t) {
    const Operator a = annihilation(t);
    return a.adjoint() * a;
}

// A_theta = (a e^{-i theta} + a^dag e^{i theta}) / 2
inline Operator quadrature(const FockTruncation& t, double theta) {
    const Operator a = annihilation(t);
    return 0.5 * (a * std::exp(-I * theta) + a.adjoint() * std::exp(I * theta));
}

inline Ket fock_atom_ket(const FockTruncation& t, int n, int atom /*0=|->,1=|+>*/) {
    Ket k = Ket::Zero(t.dim());
    k(2 * n + atom) = 1.0;
    return k;
}

// Coherent state built in truncation (unnormalized tail cut, then renormalized).
inline Ket coherent_cavity_ket(int cavity_dim, Complex alpha) {
    Ket k(cavity_dim);
    Complex amp = 1.0;
    for (int n = 0; n < cavity_dim; ++n) {
        k(n) = amp;
        amp *= alpha / std::sqrt(double(n + 1));
    }
    k.normalize();
    return k;
}

inline Complex expectation(const Operator& op, const Ket& psi) {
    if (op.rows() != psi.size())
        throw DimensionMismatch("expectation: operator/state dimensions differ");
    return psi.dot(op * psi);   // Eigen's dot conjugates the left argument
}

inline Complex expectation(const Operator& op, const Operator& rho) {
    if (op.rows() != rho.rows())
        throw DimensionMismatch("expectation: operator/state dimensions differ");
    return (op * rho).trace();
}

inline Operator partial_trace_atom(const Operator& rho) {
    if (rho.rows() % 2 != 0)
        throw DimensionMismatch("partial_trace_atom: dimension not divisible by 2");
    const auto nc = rho.rows() / 2;
    Operator out(nc, nc);
    for (Eigen::Index m = 0; m < nc; ++m)
        for (Eigen::Index n = 0; n < nc; ++n)
            out(m, n) = rho(2 * m, 2 * n) + rho(2 * m + 1, 2 * n + 1);
    return out;
}

// <atom| rho |atom> cavity block (atom = 0 for |->, 1 for |+>), used for the
// projected Wigner views.
inline Operator atom_projected_block(const Operator& rho, int atom) {
    const auto nc = rho.rows() / 2;
    Operator out(nc, nc);
    for (Eigen::Index m = 0; m < nc; ++m)
        for (Eigen::Index n = 0; n < nc; ++n)
            out(m, n) = rho(2 * m + atom, 2 * n + atom);
    return out;
}

}  // namespace jc
