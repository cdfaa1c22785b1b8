#include "jc/liouvillian.hpp"

#include <cmath>

#include "jc/errors.hpp"
#include "jc/modes.hpp"

namespace jc {

Operator build_hamiltonian(const SystemParams& p) {
    const Operator a = annihilation(p.trunc);
    const Operator sm = sigma_minus(p.trunc);
    const Operator sp = sm.adjoint();
    return -p.delta_omega_d * (sp * sm + a.adjoint() * a)
         + p.g * (a * sp + a.adjoint() * sm)
         + p.eps_d * (a + Operator(a.adjoint()));
}

Operator lindblad_dissipator(const Operator& c, double rate) {
    const auto d = c.rows();
    const Operator id = Operator::Identity(d, d);
    const Operator cdc = c.adjoint() * c;
    return rate * (tensor(c.conjugate(), c)
                   - 0.5 * tensor(id, cdc)
                   - 0.5 * tensor(cdc.transpose(), id));
}

Operator build_liouvillian(const SystemParams& p) {
    const Operator H = build_hamiltonian(p);
    const auto d = H.rows();
    const Operator id = Operator::Identity(d, d);
    Operator L = -I * (tensor(id, H) - tensor(H.transpose(), id));
    L += lindblad_dissipator(annihilation(p.trunc), 2.0 * p.kappa);
    if (p.gamma > 0.0) L += lindblad_dissipator(sigma_minus(p.trunc), p.gamma);
    return L;
}

Operator remove_cavity_feeding(const Operator& L, const SystemParams& p) {
    const Operator a = annihilation(p.trunc);
    return L - 2.0 * p.kappa * tensor(a.conjugate(), a);
}

Operator steady_state(const Operator& L) {
    const Eigen::Index d2 = L.rows();
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(d2))));
    Operator A = L;
    A.row(0).setZero();
    for (Eigen::Index k = 0; k < d; ++k) A(0, k * (d + 1)) = 1.0;   // trace row
    CVector b = CVector::Zero(d2);
    b(0) = 1.0;

    Eigen::PartialPivLU<Operator> lu(A);
    CVector x = lu.solve(b);
    const double resid = (A * x - b).norm();
    if (!x.allFinite() || resid > 1e-6)
        throw DegenerateSteadyState("steady_state: trace-projected solve is singular");

    Operator rho = unvec(x, d);
    rho = 0.5 * (rho + Operator(rho.adjoint()));
    rho /= rho.trace().real();
    return rho;
}

namespace {

// Dormand-Prince 5(4) on dx/dt = L x.
struct Rk45Tableau {
    static constexpr double c[7] = {0, 1. / 5, 3. / 10, 4. / 5, 8. / 9, 1, 1};
    static constexpr double a[7][6] = {
        {},
        {1. / 5},
        {3. / 40, 9. / 40},
        {44. / 45, -56. / 15, 32. / 9},
        {19372. / 6561, -25360. / 2187, 64448. / 6561, -212. / 729},
        {9017. / 3168, -355. / 33, 46732. / 5247, 49. / 176, -5103. / 18656},
        {35. / 384, 0, 500. / 1113, 125. / 192, -2187. / 6784, 11. / 84}};
    static constexpr double b5[7] = {35. / 384, 0, 500. / 1113, 125. / 192,
                                     -2187. / 6784, 11. / 84, 0};
    static constexpr double b4[7] = {5179. / 57600, 0, 7571. / 16695, 393. / 640,
                                     -92097. / 339200, 187. / 2100, 1. / 40};
};

}  // namespace

Operator propagate(const Operator& L, const Operator& rho0, double t,
                   double rtol, double atol) {
    if (t < 0) throw Error("propagate: negative time");
    const auto d = rho0.rows();
    CVector x = vec(rho0);
    if (t == 0.0) return rho0;

    double h = std::min(t, 0.1 / std::max(1.0, L.cwiseAbs().rowwise().sum().maxCoeff()));
    double time = 0.0;
    CVector k[7];
    while (time < t) {
        h = std::min(h, t - time);
        if (h < 1e-15 * std::max(1.0, t))
            throw Error("propagate: step-size underflow");
        k[0] = L * x;
        for (int s = 1; s < 7; ++s) {
            CVector xs = x;
            for (int j = 0; j < s; ++j)
                if (Rk45Tableau::a[s][j] != 0.0) xs += h * Rk45Tableau::a[s][j] * k[j];
            k[s] = L * xs;
        }
        CVector x5 = x, err = CVector::Zero(x.size());
        for (int s = 0; s < 7; ++s) {
            if (Rk45Tableau::b5[s] != 0.0) x5 += h * Rk45Tableau::b5[s] * k[s];
            const double db = Rk45Tableau::b5[s] - Rk45Tableau::b4[s];
            if (db != 0.0) err += h * db * k[s];
        }
        const double scale = atol + rtol * std::max(x.norm(), x5.norm());
        const double e = err.norm() / scale;
        if (e <= 1.0) {
            time += h;
            x = x5;
        }
        h *= std::clamp(0.9 * std::pow(std::max(e, 1e-10), -0.2), 0.2, 5.0);
    }

    Operator rho = unvec(x, d);
    rho = 0.5 * (rho + Operator(rho.adjoint()));
    return rho;
}

ModeDecomposition ModeDecomposition::from(const Operator& generator) {
    Eigen::ComplexEigenSolver<Operator> es(generator, /*computeEigenvectors=*/true);
    if (es.info() != Eigen::Success)
        throw Error("ModeDecomposition: eigensolver failed to converge");
    ModeDecomposition m;
    m.lambda = es.eigenvalues();
    m.V = es.eigenvectors();
    m.lu.compute(m.V);
    return m;
}

CVector ModeDecomposition::amplitudes(const Operator& A, const Operator& X0) const {
    // tr[A M] = vec(A^T)^T vec(M)
    const CVector left = (vec(A.transpose()).transpose() * V).transpose();
    const CVector right = lu.solve(vec(X0));
    return left.cwiseProduct(right);
}

CVector eval_exponential_series(const CVector& amp, const CVector& lambda,
                                const RVector& tau, double amp_floor) {
    CVector out = CVector::Zero(tau.size());
    for (Eigen::Index k = 0; k < amp.size(); ++k) {
        if (std::abs(amp(k)) < amp_floor) continue;
        for (Eigen::Index j = 0; j < tau.size(); ++j)
            out(j) += amp(k) * std::exp(lambda(k) * tau(j));
    }
    return out;
}

Complex exponential_series_integral(const CVector& amp, const CVector& lambda,
                                    double stationary_tol) {
    Complex s = 0.0;
    for (Eigen::Index k = 0; k < amp.size(); ++k) {
        if (std::abs(lambda(k).real()) < stationary_tol) continue;
        s -= amp(k) / lambda(k);
    }
    return s;
}

CVector drop_stationary_modes(const CVector& amp, const CVector& lambda,
                              double stationary_tol) {
    CVector out = amp;
    for (Eigen::Index k = 0; k < amp.size(); ++k)
        if (std::abs(lambda(k).real()) < stationary_tol) out(k) = 0.0;
    return out;
}

RVector linspace(double lo, double hi, Eigen::Index n) {
    return RVector::LinSpaced(n, lo, hi);
}

}  // namespace jc
