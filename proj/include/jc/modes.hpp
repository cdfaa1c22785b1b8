#pragma once

// Mode expansion of two-time functions: one eigendecomposition of the
// (damped) generator is reused for every delay on a grid,
//   tr[A e^{G tau} X0] = sum_k amp_k e^{lambda_k tau},
// with amp_k = (vec(A^T)^T V)_k (V^{-1} vec X0)_k. Exact tail integrals
// come for free, int_0^inf = -sum amp_k / lambda_k.

#include <vector>

#include "jc/liouvillian.hpp"
#include "jc/types.hpp"

namespace jc {

struct ModeDecomposition {
    CVector lambda;            // eigenvalues of the generator
    Operator V;                // right eigenvectors (columns)
    Eigen::PartialPivLU<Operator> lu;   // factorization of V for V^{-1} x

    static ModeDecomposition from(const Operator& generator);

    // Amplitudes of tr[A e^{G tau} X0].
    CVector amplitudes(const Operator& A, const Operator& X0) const;
};

// f(tau_j) = sum_k amp_k e^{lambda_k tau_j}; modes below amp_floor are skipped.
CVector eval_exponential_series(const CVector& amp, const CVector& lambda,
                                const RVector& tau, double amp_floor = 1e-16);

// Exact int_0^inf sum amp e^{lambda tau} d tau. Modes with |Re lambda| below
// stationary_tol (the steady-state mode) are excluded; they would diverge.
Complex exponential_series_integral(const CVector& amp, const CVector& lambda,
                                    double stationary_tol = 1e-9);

// Zero out amplitudes of (near-)stationary modes; turns a correlator into its
// fluctuation (Delta) part, e.g. <a^dag(0)a(tau)> - <a^dag><a>.
CVector drop_stationary_modes(const CVector& amp, const CVector& lambda,
                              double stationary_tol = 1e-9);

RVector linspace(double lo, double hi, Eigen::Index n);

}  // namespace jc
