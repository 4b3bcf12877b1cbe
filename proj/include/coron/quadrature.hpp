#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coron/field.hpp"

namespace coron {

enum class Symmetry {
  none,
  dihedral_k,  // invariant under rotation by 2pi/k in (y1,y2) and all reflections
  full_even    // even in every coordinate
};

enum class Exterior {
  kelvin_map,    // |y| > R folded to a ball via y -> y/|y|^2, Jacobian |z|^{-2n}
  radial_cutoff  // truncate at cutoff_radius, tail bound added to the error
};

struct QuadratureSpec {
  double rel_tol = 1e-7;
  double abs_tol = 1e-12;
  int max_depth = 34;  // per-cell bisection depth, capped at 40
  Symmetry symmetry = Symmetry::none;
  int sym_k = 1;  // order of the dihedral rotation when symmetry == dihedral_k
  Exterior exterior = Exterior::kelvin_map;
  double cutoff_radius = 50.0;
  double fold_radius = 1.0;  // split radius between direct and Kelvin-mapped piece
  std::vector<double> radial_breaks;  // optional initial radial splits
  long max_cells = 3'000'000;
};

struct IntegralResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  long evals = 0;
  int depth = 0;
};

// Non-convergence carries the best estimate so callers can still inspect it.
struct QuadratureError : std::runtime_error {
  std::vector<double> best_values;
  std::vector<double> error_estimates;
  QuadratureError(const std::string& msg, std::vector<double> v, std::vector<double> e)
      : std::runtime_error(msg), best_values(std::move(v)), error_estimates(std::move(e)) {}
};

// Vector integrand evaluated at a point of R^n; writes m components.
using MultiFn = std::function<void(const Point&, double*)>;

// Integral over R^n of a decaying integrand. The domain is split at
// spec.fold_radius; the exterior is either Kelvin-compactified (exact
// Jacobian |z|^{-2n}) or truncated at spec.cutoff_radius. Adaptive
// Genz-Malik cubature in hyperspherical coordinates; with a symmetry the
// integrand is evaluated on a fundamental sector only.
IntegralResult integrate_rn(const std::function<double(const Point&)>& f, int n,
                            const QuadratureSpec& spec);
std::vector<IntegralResult> integrate_rn_multi(const MultiFn& f, int m, int n,
                                               const QuadratureSpec& spec);

// Integral over the annulus B(0,1) \ B(0,eps), log-radial grading toward the
// inner boundary.
IntegralResult integrate_annulus(const std::function<double(const Point&)>& f, int n,
                                 double eps, const QuadratureSpec& spec);
std::vector<IntegralResult> integrate_annulus_multi(const MultiFn& f, int m, int n, double eps,
                                                    const QuadratureSpec& spec);

// Integral over the shell r_lo <= |y - center| <= r_hi in polar coordinates
// about `center`; point singularities at the center of strength up to
// |y-center|^{2-n} are regularized by the volume element.
IntegralResult integrate_ball(const std::function<double(const Point&)>& f, int n,
                              const Point& center, double r_lo, double r_hi,
                              const QuadratureSpec& spec);

// Same shell with log-spaced radial variable (wide dynamic ranges).
IntegralResult integrate_shell_log(const std::function<double(const Point&)>& f, int n,
                                   const Point& center, double r_lo, double r_hi,
                                   const QuadratureSpec& spec);

// Shell with radial substitution r = u^{1/power}: an integrand behaving like
// |y-center|^{power-n} near the center becomes smooth in u.
IntegralResult integrate_ball_power(const std::function<double(const Point&)>& f, int n,
                                    const Point& center, double r_hi, double power,
                                    const QuadratureSpec& spec);

enum class WeightedNorm { star, starstar, fundamental };

// The paper's weighted sup-norms evaluated on a log-radial x angular probe
// grid over D_eps = B(0,1/sqrt(eps)) \ B(0,sqrt(eps)) (star/starstar) or R^n
// (fundamental). star uses weights |y|^alpha, |y|^{alpha+1} on the gradient
// inside and (1+|y|^beta), (1+|y|^{beta+1}) outside, with
// (alpha,beta) = (n-4, 2) for n >= 5 and (sigma, 2-sigma) for n = 4; for
// n = 3 the single-region form (1+|y|)|f| + (1+|y|^2)|Df|. starstar uses
// |y|^{n-2} inside and 1+|y|^4 outside. fundamental is (1+|y|^{n-2})|f|.
double weighted_norm(const ScalarField& f, WeightedNorm which, double eps, double sigma = 0.1,
                     int n_radii = 200, int n_dirs = 64);

}  // namespace coron
