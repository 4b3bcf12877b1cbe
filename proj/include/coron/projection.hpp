#pragma once

#include "coron/fit.hpp"
#include "coron/crown.hpp"
#include "coron/kelvin.hpp"
#include "coron/quadrature.hpp"

namespace coron {

// Leading-order model of the projection of Q_A onto H^1_0(Omega_eps):
//   P Q_A ~ Q_A - gamma_n^{-1} lambda^{(n-2)/2} Q(-R_theta a) H(x, xi)
//               - lambda^{-(n-2)/2} F(tau,a,theta) eps^{n-2} |x|^{2-n}.
// Both corrections are harmonic away from their singular points, so the
// true remainder is harmonic with boundary data equal to -total on
// d Omega_eps and the maximum principle turns boundary sups into interior
// bounds.
struct ProjectionField {
  ScalarField total;
  ScalarField base;             // Q_A
  ScalarField h_correction;     // -gamma_n^{-1} lambda^{(n-2)/2} Q(-R a) H(x,xi)
  ScalarField hole_correction;  // -lambda^{-(n-2)/2} F eps^{n-2} |x|^{2-n}
  double eps = 0.0;
  ParamSet params;
};

// F(tau, a, theta) = Q(-tau/|tau|^2 - R_theta a) |tau|^{2-n}, continued at
// tau = 0 by the far-field constant of Q (pass it precomputed to avoid
// re-extrapolating in hot loops; NaN means "compute it here").
double f_function(const Point& tau, double a1, double a2, const RotationCoords& theta,
                  const ScalarField& q, double far_field = std::nan(""));

ProjectionField project_leading(const ParamSet& A, double eps, const ScalarField& q,
                                double far_field = std::nan(""));

// sup of |total| over the two boundary spheres |x| = eps and |x| = 1,
// sampled at n_dirs directions: bounds sup |remainder| by the maximum
// principle. Returns (inner_sup, outer_sup).
std::pair<double, double> remainder_boundary_defect(const ParamSet& A, double eps,
                                                    const ScalarField& q, int n_dirs = 256,
                                                    double far_field = std::nan(""));

// Same sups for the central finite difference of the model in one parameter
// ("lambda", "tau_i", "a_i", "theta_ij"); used to fit the parameter-derivative
// bounds by the same boundary mechanism.
std::pair<double, double> remainder_boundary_defect_derivative(
    const ParamSet& A, double eps, const ScalarField& q, const std::string& parameter,
    int index = 0, int n_dirs = 64);

// E = |V|^{p-1} V - |Q_A~|^{p-1} Q_A~ on D_eps, with V the rescaled leading
// projection V(y) = eps^{1/(p-1)} P(sqrt(eps) y).
ScalarField error_field(const ParamSet& A, double eps, const ScalarField& q,
                        double far_field = std::nan(""));

// Regression of log ||E||_** against log eps with the regime parameters
// (lambda = d sqrt(eps), xi = lambda tau) rebuilt at every sweep point;
// target slope (n-2)/2.
ExpansionReport error_norm_scaling(double d, const Point& tau, double a1, double a2,
                                   const RotationCoords& theta,
                                   const std::vector<double>& eps_list, const ScalarField& q,
                                   double slope_tol_rel = 0.10);

}  // namespace coron
