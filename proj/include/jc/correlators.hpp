#pragma once

// Two-time averages on the full master equation via the quantum regression
// formula, and their Fourier-domain counterparts.

#include <optional>
#include <string>

#include "jc/modes.hpp"
#include "jc/types.hpp"

namespace jc {

enum class CorrelatorKind { g2, waiting_time, first_order, anomalous, h_theta };
enum class SpectrumKind { squeezing, transmission };

struct CorrelatorSeries {
    RVector tau;
    CVector values;
    CorrelatorKind kind;
    std::optional<double> theta;
    std::string method = "numeric";
    // Exact tail integral where meaningful (waiting time normalization check).
    std::optional<double> integral;
};

struct SpectrumSeries {
    RVector omega;     // squeezing: omega - omega_d; transmission: omega - omega_0
    RVector values;
    SpectrumKind kind;
    std::optional<double> theta;
    std::string method = "numeric";
};

// Shared eigendecompositions for one operating point; the 4(n_max+1)^2-dim
// eigensolve dominates the cost, so callers can reuse this across series.
struct OperatingPoint {
    SystemParams params;
    Operator a, n;                  // composite-space operators
    Operator rho_ss;
    double n_ss;
    ModeDecomposition L_modes;      // full generator
    std::optional<ModeDecomposition> Lbar_modes;   // built on demand

    static OperatingPoint prepare(const SystemParams& p);
    const ModeDecomposition& bar_modes();   // generator minus cavity feeding
};

// Beat-resolving default grid, d tau <= pi / (10 * 2g).
RVector default_tau_grid(const SystemParams& p, double tau_max);

CorrelatorSeries g2(OperatingPoint& op, const RVector& tau_grid);
CorrelatorSeries waiting_time(OperatingPoint& op, const RVector& tau_grid);
CorrelatorSeries first_order_corr(OperatingPoint& op, const RVector& tau_grid);
CorrelatorSeries anomalous_corr(OperatingPoint& op, const RVector& tau_grid);

// h_theta over a two-sided grid (tau < 0 uses the time-reversed regression
// with the symmetrized insertion of A_theta; see triggered_average for the
// operational ground truth fixing that ordering).
CorrelatorSeries h_theta_unconditional(OperatingPoint& op, double theta,
                                       const RVector& tau_grid_bidirectional);

struct SpectrumOptions {
    double tau_max = 30.0;          // integration window (units 1/kappa)
    double tail_tol = 1e-8;         // endpoint decay requirement
};

// S_->^theta(omega) = 4 kappa int_0^inf cos(omega tau) R_theta(tau) d tau with
// R_theta built from the Delta-correlators; omega measured from omega_d.
SpectrumSeries squeezing_spectrum(OperatingPoint& op, double theta,
                                  const RVector& omega_grid,
                                  const SpectrumOptions& opt = {});

// T(x), x = omega - omega_0, unit-area normalized on the supplied grid.
SpectrumSeries transmission_spectrum(OperatingPoint& op, const RVector& omega_grid,
                                     const SpectrumOptions& opt = {});

}  // namespace jc
