#pragma once

#include <vector>

#include "coron/point.hpp"
#include "coron/special.hpp"

namespace coron {

// Coordinates on the rotation group generated by the (1,2)-plane and the
// (j,l)-planes, j in {1,2}, l in {3..n}: angles ordered
// (th_12, th_13, ..., th_1n, th_23, ..., th_2n), 2n-3 entries.
struct RotationCoords {
  std::vector<double> theta;

  RotationCoords() = default;
  explicit RotationCoords(std::vector<double> t) : theta(std::move(t)) {}
  static RotationCoords zero(int n) {
    return RotationCoords(std::vector<double>(2 * n - 3, 0.0));
  }
  int size() const { return static_cast<int>(theta.size()); }
};

// Reduce an angle to (-pi, pi]; used only when comparing coordinates.
double wrap_angle(double t);

// Elementary rotation in the (i,j)-plane (0-based indices), angle t.
SqMat plane_rotation(int n, int i, int j, double t);

// Ordered product P_12 P_13 ... P_1n P_23 ... P_2n.
// Throws if theta does not have exactly 2n-3 entries.
SqMat rotation_matrix(const RotationCoords& theta, Dimension dim);

// Fundamental solution Gamma(x) = gamma_n |x|^{2-n}; throws at x = 0.
double fundamental_solution(const Point& x);

// Green's function of the unit ball with - Delta G = delta, G = 0 on |x|=1,
// by the method of images. Valid for x, y in the closed ball, x != y.
double ball_green(const Point& x, const Point& y);

// Regular part H(x,y) = Gamma(x-y) - G(x,y); smooth inside the ball,
// symmetric, H(0,0) = gamma_n.
double ball_regular_part(const Point& x, const Point& y);

// Gradient of H(.,y) in the first argument (analytic).
Point ball_regular_part_gradient(const Point& x, const Point& y);

}  // namespace coron
