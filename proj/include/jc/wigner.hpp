#pragma once

// Displaced-parity Wigner transform of cavity-only density operators,
// W(alpha) = (2/pi) tr[rho D(2 alpha) Pi], normalized so that
// int W d^2alpha = 1 and vacuum gives W(0) = 2/pi.

#include <string>

#include "jc/types.hpp"

namespace jc {

struct WignerGrid {
    RVector x, p;       // alpha = x + i p
    RMatrix values;     // values(i, j) = W(x_i, p_j)
    std::string convention = "2/pi displaced parity, int W d^2a = 1";
};

struct WignerOptions {
    // Truncation accuracy guard: require n_max >= |alpha|^2 + 4 sqrt(|alpha|^2)
    // at the grid corners, else TruncationLeak.
    bool truncation_guard = true;
    double boundary_tol = 1e-6;    // |W| at the grid boundary (normalization guard)
    bool boundary_check = false;
};

WignerGrid wigner_transform(const Operator& rho_cav, const RVector& x_grid,
                            const RVector& p_grid, const WignerOptions& opt = {});

// Convenience square grid [-half_extent, half_extent]^2.
WignerGrid wigner_transform(const Operator& rho_cav, double half_extent, int points,
                            const WignerOptions& opt = {});

double wigner_total_mass(const WignerGrid& w);

}  // namespace jc
