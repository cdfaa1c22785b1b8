#include "jc/wigner.hpp"

#include <cmath>

#include "jc/errors.hpp"
#include "jc/types.hpp"

namespace jc {

namespace {

// Truncated displacement D(beta) = exp(beta a^dag - conj(beta) a), evaluated
// as exp(i K) with K Hermitian so the unitary structure survives truncation.
Operator displacement(int dim, Complex beta) {
    Operator K(dim, dim);
    K.setZero();
    // K = -i (beta a^dag - conj(beta) a) is Hermitian
    for (int n = 1; n < dim; ++n) {
        const Complex up = -I * beta * std::sqrt(double(n));   // a^dag part, row n, col n-1
        K(n, n - 1) = up;
        K(n - 1, n) = std::conj(up);
    }
    Eigen::SelfAdjointEigenSolver<Operator> es(K);
    const auto& vals = es.eigenvalues();
    const Operator& U = es.eigenvectors();
    CVector phases(dim);
    for (int k = 0; k < dim; ++k) phases(k) = std::exp(I * vals(k));
    return U * phases.asDiagonal() * U.adjoint();
}

}  // namespace

WignerGrid wigner_transform(const Operator& rho_cav, const RVector& x_grid,
                            const RVector& p_grid, const WignerOptions& opt) {
    const int dim = static_cast<int>(rho_cav.rows());
    const double corner = std::hypot(x_grid.cwiseAbs().maxCoeff(),
                                     p_grid.cwiseAbs().maxCoeff());
    if (opt.truncation_guard) {
        const double needed = corner * corner + 4.0 * corner;
        if (dim - 1 < needed)
            throw TruncationLeak("wigner_transform: n_max too small for grid extent");
    }

    CVector parity(dim);
    for (int n = 0; n < dim; ++n) parity(n) = (n % 2 == 0) ? 1.0 : -1.0;

    WignerGrid w;
    w.x = x_grid;
    w.p = p_grid;
    w.values.resize(x_grid.size(), p_grid.size());
    for (Eigen::Index i = 0; i < x_grid.size(); ++i) {
        for (Eigen::Index j = 0; j < p_grid.size(); ++j) {
            const Complex alpha(x_grid(i), p_grid(j));
            const Operator D = displacement(dim, 2.0 * alpha);
            // W = (2/pi) tr[rho D(2 alpha) Pi]
            const Complex val = (rho_cav * D * parity.asDiagonal()).trace();
            w.values(i, j) = (2.0 / M_PI) * val.real();
        }
    }
    if (opt.boundary_check) {
        const double edge = std::max({w.values.row(0).cwiseAbs().maxCoeff(),
                                      w.values.row(w.values.rows() - 1).cwiseAbs().maxCoeff(),
                                      w.values.col(0).cwiseAbs().maxCoeff(),
                                      w.values.col(w.values.cols() - 1).cwiseAbs().maxCoeff()});
        if (edge > opt.boundary_tol)
            throw TruncationLeak("wigner_transform: |W| above tolerance at grid boundary");
    }
    return w;
}

WignerGrid wigner_transform(const Operator& rho_cav, double half_extent, int points,
                            const WignerOptions& opt) {
    const RVector axis = RVector::LinSpaced(points, -half_extent, half_extent);
    return wigner_transform(rho_cav, axis, axis, opt);
}

double wigner_total_mass(const WignerGrid& w) {
    const double dx = w.x(1) - w.x(0), dp = w.p(1) - w.p(0);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < w.x.size(); ++i)
        for (Eigen::Index j = 0; j < w.p.size(); ++j) {
            const double wx = (i == 0 || i + 1 == w.x.size()) ? 0.5 : 1.0;
            const double wp = (j == 0 || j + 1 == w.p.size()) ? 0.5 : 1.0;
            acc += wx * wp * w.values(i, j);
        }
    return acc * dx * dp;
}

}  // namespace jc
