#pragma once

#include <string>
#include <vector>

#include "coron/field.hpp"
#include "coron/geometry.hpp"

namespace coron {

// Parameter tuple A = (lambda, xi, a, theta) driving the solution family.
// a = (a1, a2) is embedded as (a1, a2, 0, ..., 0). In the eps-regime
// lambda = d sqrt(eps) and xi = lambda tau.
struct ParamSet {
  double lambda = 1.0;
  Point xi;
  double a1 = 0.0, a2 = 0.0;
  RotationCoords theta;

  static ParamSet identity(int n) {
    ParamSet A;
    A.xi = zero_point(n);
    A.theta = RotationCoords::zero(n);
    return A;
  }
  Point a_vector(int n) const {
    Point a(n);
    a[0] = a1;
    a[1] = a2;
    return a;
  }
  void validate(int n) const;
};

struct SingularLocusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The conjugated dilation-translation-Kelvin-rotation operator
//   Theta_A[f](x) = lambda^{-(n-2)/2} s^{(2-n)/2}
//                   f( R_theta (w - a |w|^2) / s ),
// with w = (x - xi)/lambda and s = 1 - 2 a.w + |a|^2 |w|^2. Written this way
// the apparent singularity of the textbook form at x = xi is removable; the
// genuine singular locus is s = 0 and is reported, never evaluated.
// Analytic gradient via the chain rule; Laplacian is a flagged FD fallback.
ScalarField theta_transform(const ParamSet& A, const ScalarField& f);

// The translated-rotated family Q_A(x); equals
// theta_transform((lambda,0,a,theta), Q) pulled back by x -> R^T (x - xi).
ScalarField q_family(const ParamSet& A, const ScalarField& q);

// The 3n kernel fields of the linearized operator around Q:
//   z_0       = (n-2)/2 Q + grad Q . y            (dilation)
//   z_alpha   = d Q / d y_alpha, alpha = 1..n     (translations)
//   z_{n+1}   = -y2 d1 Q + y1 d2 Q                ((y1,y2) rotation)
//   z_{n+2}   = -2 y1 z_0 + |y|^2 z_1             (Kelvin-translation)
//   z_{n+3}   = -2 y2 z_0 + |y|^2 z_2
//   z_{n+l+1} = -y_l z_1 + y1 z_l,  l = 3..n      ((y1,yl) rotation)
//   z_{2n+l-1}= -y_l z_2 + y2 z_l                 ((y2,yl) rotation)
// Values and gradients are analytic when Q carries a Hessian.
ScalarField kernel_field(int alpha, const ScalarField& q);

// Central finite differences (Richardson) of Theta_A[Q] in each parameter at
// the identity, compared against the kernel fields. Signs are measured and
// reported rather than assumed.
struct IdentityCheckRow {
  std::string parameter;
  int field_index = 0;
  int sign = 0;  // measured best sign in {-1, +1}
  double rel_err = 0.0;
  bool pass = false;
};
struct IdentityCheckReport {
  std::vector<IdentityCheckRow> rows;
  bool all_pass = true;
};
IdentityCheckReport derivative_identity_check(const ScalarField& q,
                                              const std::vector<Point>& probes,
                                              double tol = 1e-5);

// Z_j(y) = Theta_{A~}[z_j](y) with A~ = (d, d tau, a, theta) built from the
// eps-regime parameters A = (d sqrt(eps), lambda tau, a, theta).
ScalarField projected_kernel(int j, const ParamSet& A, double eps, const ScalarField& q);

// All 3n kernel values assembled from one (Q, grad Q) evaluation; out must
// hold 3n doubles. Hot-loop companion of kernel_field.
void kernel_values(int n, const Point& y, double q_value, const Point& q_gradient, double* out);

// sup over probes of (1+|y|)^{n+2} |Delta z + p |Q|^{p-1} z| with the
// Laplacian taken by stencil; compares against the crown's own PDE defect
// through the same weight.
double kernel_linearized_residual(const ScalarField& q, const ScalarField& z,
                                  const std::vector<Point>& probes);

}  // namespace coron
