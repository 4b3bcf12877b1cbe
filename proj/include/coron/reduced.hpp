#pragma once

#include <Eigen/Dense>

#include "coron/energy.hpp"
#include "coron/fit.hpp"
#include "coron/projection.hpp"

namespace coron {

// Point of the reduced parameter space (d, tau, a, theta); theta is treated
// periodically, the rest live in a box.
struct ReducedPoint {
  double d = 1.0;
  Point tau;
  double a1 = 0.0, a2 = 0.0;
  RotationCoords theta;

  static ReducedPoint origin(int n, double d0 = 1.0) {
    ReducedPoint pt;
    pt.d = d0;
    pt.tau = zero_point(n);
    pt.theta = RotationCoords::zero(n);
    return pt;
  }
};

struct RegimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Psi(d,tau,a,theta) = 1/2 [ gamma_n^{-2} Q(-R_theta a)^2 H(0,0) d^{n-2}
//                            + (c2 / d^{n-2}) F(tau,a,theta) ].
// H(0,0) = gamma_n for the unit ball. far_field: cached far-field constant
// of Q for the tau = 0 branch of F (NaN = compute internally).
double psi(const ReducedPoint& pt, const EnergyConstants& consts, const ScalarField& q,
           double far_field = std::nan(""), double eta = 0.05);

// Closed-form critical point in d and its finite-difference verification.
struct DCritical {
  double d0 = 0.0;
  double first_derivative = 0.0;   // d Psi / dd at d0 (central differences)
  double second_derivative = 0.0;  // d^2 Psi / dd^2 at d0
};
DCritical d_critical(const Point& tau, double a1, double a2, const RotationCoords& theta,
                     const EnergyConstants& consts, const ScalarField& q,
                     double far_field = std::nan(""));

// Verifies Prop 4.1 against the reduced function: fits
// J_eps(P Q_A) - c1 ~ K eps^{(n-2)/2} over eps_list and compares K with
// Psi(pt); optionally the same for the d-derivative at d_factor * d.
struct ExpansionCheck {
  ExpansionReport energy;     // slope and K vs Psi
  double psi_value = 0.0;
  double measured_sign = 0.0;  // sign of J - c1 (resolves the paper's sign)
  ExpansionReport d_derivative;
  double dpsi_value = 0.0;
};
ExpansionCheck expansion_check(const ReducedPoint& pt, const std::vector<double>& eps_list,
                               const EnergyConstants& consts, const ScalarField& q,
                               const QuadratureSpec& spec, bool with_derivative = true,
                               double derivative_d_factor = 1.2);

// Saddle search: min over (d, theta), max over (tau, a), by alternating
// inner loops (closed-form d, Newton ascent in (tau,a), coordinate descent
// in theta with degeneracy detection).
struct OptimizeResult {
  ReducedPoint point;
  double psi_value = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  bool theta_degenerate = false;      // smallest theta-curvature below 1e-8
  double theta_min_curvature = 0.0;
  Eigen::MatrixXd tau_a_hessian;      // (n+2) x (n+2) at the returned point
  double d_second_derivative = 0.0;
};
OptimizeResult optimize(const EnergyConstants& consts, const ScalarField& q,
                        const ReducedPoint& start, double eta = 0.05, int max_iter = 60);

}  // namespace coron
