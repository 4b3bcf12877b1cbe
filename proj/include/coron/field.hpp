#pragma once

#include <functional>
#include <vector>

#include "coron/point.hpp"

namespace coron {

// A smooth function R^n -> R bundled with gradient and Laplacian evaluators.
// This is the universal currency passed between modules. Gradient/Laplacian
// are analytic where available; otherwise centered finite differences with
// step h = 1e-4 (1+|y|) are installed and the fallback is flagged.
struct ScalarField {
  int n = 0;
  std::function<double(const Point&)> value;
  std::function<Point(const Point&)> gradient;
  std::function<double(const Point&)> laplacian;
  std::function<SqMat(const Point&)> hessian;  // empty when not available
  bool fd_gradient = false;
  bool fd_laplacian = false;

  double operator()(const Point& y) const { return value(y); }
  bool has_hessian() const { return static_cast<bool>(hessian); }
};

// Centered finite-difference helpers used by fallbacks and test oracles.
double fd_step(const Point& y);
Point fd_gradient(const std::function<double(const Point&)>& f, const Point& y, double h = 0.0);
// 2n+1 point stencil.
double fd_laplacian(const std::function<double(const Point&)>& f, const Point& y, double h = 0.0);

// Build a field from a value evaluator alone; derivatives are FD fallbacks.
ScalarField field_from_value(int n, std::function<double(const Point&)> value);

// Install FD laplacian (flagged) on a field that has value + gradient.
void install_fd_laplacian(ScalarField& f);

// c * f
ScalarField field_scale(double c, const ScalarField& f);

// f(x) = g(R^T (x - shift)), pullback by a rigid motion; gradients rotate.
ScalarField affine_pullback(const ScalarField& g, const SqMat& rot, const Point& shift);

// Fixed deterministic unit directions (seeded Box-Muller, portable).
std::vector<Point> probe_directions(int n, int count, unsigned seed = 12345);

// Deterministic probe set: radii log-spaced in [r_lo, r_hi] times a fixed
// direction set; shared by the test suites and diagnostics.
std::vector<Point> probe_points(int n, int n_radii, int n_dirs, double r_lo, double r_hi,
                                unsigned seed = 12345);

}  // namespace coron
