#pragma once

#include <complex>
#include <Eigen/Dense>

// LAPACKE-backed builds pull in C99 <complex.h>, whose I macro would shadow
// the imaginary unit below.
#ifdef I
#undef I
#endif

namespace jc {

using Complex = std::complex<double>;
using Operator = Eigen::MatrixXcd;   // dense complex matrix on the truncated space
using Ket = Eigen::VectorXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

inline constexpr Complex I{0.0, 1.0};

struct FockTruncation {
    int n_max = 14;

    int cavity_dim() const { return n_max + 1; }
    int dim() const { return 2 * (n_max + 1); }   // cavity (x) atom
};

// All rates in units of kappa (kappa = 1 internally). Detuning
// delta_omega_d = omega_d - omega_0 is stored in units of kappa as well;
// use from_ratios() for the paper-style (g/kappa, eps_d/g, dw_d/g) inputs.
struct SystemParams {
    double g = 200.0;
    double kappa = 1.0;
    double gamma = 0.0;
    double eps_d = 0.0;
    double delta_omega_d = 0.0;
    FockTruncation trunc{};

    static SystemParams from_ratios(double g_over_kappa, double eps_over_g,
                                    double dw_over_g, double gamma_over_kappa = 0.0,
                                    int n_max = 14) {
        SystemParams p;
        p.g = g_over_kappa;
        p.kappa = 1.0;
        p.gamma = gamma_over_kappa;
        p.eps_d = eps_over_g * p.g;
        p.delta_omega_d = dw_over_g * p.g;
        p.trunc.n_max = n_max;
        return p;
    }

    // Drive frequency hitting the two-photon resonance including the
    // second-order drive shift.
    static double two_photon_resonance_detuning(double g, double eps_d) {
        return -g / std::sqrt(2.0) - std::sqrt(2.0) * eps_d * eps_d / g;
    }

    SystemParams& at_two_photon_resonance() {
        delta_omega_d = two_photon_resonance_detuning(g, eps_d);
        return *this;
    }
};

}  // namespace jc
