#pragma once

// Full-space Lindblad generator in the drive-rotating frame, steady state,
// and adaptive time propagation of density operators.
//
// Vectorization is column-stacking: vec(A X B) = (B^T kron A) vec X.

#include "jc/hilbert.hpp"
#include "jc/types.hpp"

namespace jc {

inline CVector vec(const Operator& rho) {
    return Eigen::Map<const CVector>(rho.data(), rho.size());
}

inline Operator unvec(const CVector& x, Eigen::Index dim) {
    return Eigen::Map<const Operator>(x.data(), dim, dim);
}

// H = -dw_d (sigma+ sigma- + a^dag a) + g (a sigma+ + a^dag sigma-) + eps_d (a + a^dag)
Operator build_hamiltonian(const SystemParams& p);

// Superoperator for rate * D[c]: rate (2 c rho c^dag - {c^dag c, rho}) / 2 scaled
// so that the cavity channel enters as 2 kappa D'[a] in the paper's convention,
// i.e. pass rate = 2 kappa for c = a and rate = gamma for c = sigma-.
Operator lindblad_dissipator(const Operator& c, double rate);

Operator build_liouvillian(const SystemParams& p);

// L_bar = L - 2 kappa (a . a^dag): the feeding term removed (Appendix-style
// exclusive evolution between counted emissions).
Operator remove_cavity_feeding(const Operator& L, const SystemParams& p);

// Direct solve with one row replaced by the trace constraint. Throws
// DegenerateSteadyState when the projected system is numerically singular.
Operator steady_state(const Operator& L);

// Adaptive RK45 (Dormand-Prince) on the vectorized ODE dx/dt = L x.
Operator propagate(const Operator& L, const Operator& rho0, double t,
                   double rtol = 1e-9, double atol = 1e-12);

}  // namespace jc
