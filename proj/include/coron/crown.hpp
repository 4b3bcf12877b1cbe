#pragma once

#include <utility>
#include <vector>

#include "coron/field.hpp"
#include "coron/special.hpp"

namespace coron {

// Root of the balance equation
//   [ sum_{j=2}^{k} (1 - cos th_j)^{-(n-2)/2} ] mu^{(n-2)/2} = 1,
// th_j = 2 pi (j-1)/k. The j = 1 term of the formal sum is excluded (it is
// singular); this reading reproduces the stated mu_k ~ k^{-2} asymptotics.
struct MuBalance {
  double mu = 0.0;
  double residual = 0.0;
  bool in_regime = false;  // mu in (0,1)
};

MuBalance solve_mu(Dimension dim, int k);  // throws for k < 2

// One crown ansatz: central positive bubble minus k sharp bubbles at the
// vertices of a regular k-gon of radius sqrt(1-mu^2) in the (y1,y2)-plane.
struct CrownSpec {
  Dimension dim;
  int k;
  double mu;

  static CrownSpec make(Dimension dim, int k, int k_min = 5);
};

// The standard bubble U(y) = alpha_n (1/(1+|y|^2))^{(n-2)/2}; analytic
// gradient, Laplacian and Hessian. Solves Delta U + U^p = 0 exactly.
ScalarField bubble(Dimension dim);

// The profile U_*(y) = U(y) - sum_j U_j(y) with the correction phi~ omitted.
ScalarField crown(const CrownSpec& spec);

// Bubble centers xi_j of the spec.
std::vector<Point> crown_centers(const CrownSpec& spec);

// Pointwise PDE defect Delta Q + |Q|^{p-1} Q of the crown, analytic
// (each bubble's Laplacian is closed form).
ScalarField crown_pde_defect(const CrownSpec& spec);

// sup over probes of |defect| (1+|y|)^{n+2}; the interaction error budget.
double crown_residual_budget(const CrownSpec& spec, const std::vector<Point>& probes);

// max over samples of |Q(y) - |y|^{2-n} Q(y/|y|^2)| / (1 + |Q(y)|).
double kelvin_defect(const ScalarField& q, const std::vector<Point>& samples);

// Estimate of lim_{|y|->oo} |y|^{n-2} Q(y) by Richardson extrapolation over
// radii 1e2, 1e3, 1e4 averaged over a fixed direction set. Throws
// EstimationError when the extrapolants spread by more than 1e-3 relative.
struct EstimationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
double far_field_constant(const ScalarField& q);

// Largest R1 < 1 with Q > 0 on |y| <= R1 and smallest R2 > 1 with Q > 0 on
// |y| >= R2, by radial bisection along sampled directions (the ray through
// xi_1 is the worst one). Throws DegenerateProfileError when no sign change
// is detected.
struct DegenerateProfileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
std::pair<double, double> sign_radii(const ScalarField& q);

}  // namespace coron
