#pragma once

#include <Eigen/Dense>

#include "coron/crown.hpp"
#include "coron/quadrature.hpp"

namespace coron {

struct EnergyConstants {
  double c1 = 0;       // (1/n) Int |Q|^{p+1}
  double c2 = 0;       // Int |Q|^p
  double S_n = 0;      // per-bubble energy constant
  double c_tilde = 0;  // Int U^{p-1} Z0^2, closed form
  double alpha_n = 0;
  double gamma_n = 0;
};

// Closed form of Int U^{p-1} Z0^2 by Beta-function arithmetic:
//   c~ = n (n-2)^2 (n(n-2))^{n/2} pi^{n/2} Gamma(n/2) / (4 Gamma(n+2)).
// (32 pi^2 / 15 at n = 4.)
double c_tilde_closed_form(int n);

// The same constant as displayed in the source material,
// 2^{(n-4)/2} n (n-2)^2 Gamma(n/2)^2 / Gamma(n+2) (2/15 at n = 4). The
// display drops the amplitude and sphere-measure factors; the ratio to the
// true value is (pi n (n-2)/2)^{n/2} / Gamma(n/2). Kept for reporting.
double c_tilde_display_form(int n);

// E(u) = 1/2 Int |grad u|^2 - 1/(p+1) Int |u|^{p+1} over R^n.
double energy_entire(const ScalarField& u, const QuadratureSpec& spec);

// Same functional over the annulus Omega_eps = B(0,1) \ B(0,eps).
double energy_domain(const ScalarField& u, double eps, const QuadratureSpec& spec);

// Q-dependent constants; c_tilde is evaluated both in closed form and by
// quadrature of Int U^{p-1} Z0^2 and the two must agree (a disagreement
// beyond 1e-4 relative signals an implementation bug and throws).
EnergyConstants constants(Dimension dim, const ScalarField& q, const QuadratureSpec& spec);

// Parity signature of the kernel fields under coordinate reflections for a
// reflection-symmetric crown (k even): bit l set means odd in y_{l+1}.
unsigned kernel_parity(int alpha, int n);

// Gram matrix M_ij = Int |Q|^{p-1} z_i z_j over R^n, 3n x 3n. Entries whose
// integrand is odd under some coordinate reflection are exactly zero by
// parity and are not integrated. Requires k even.
Eigen::MatrixXd gram_matrix(const CrownSpec& spec, const QuadratureSpec& quad);

}  // namespace coron
