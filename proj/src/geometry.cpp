#include "coron/geometry.hpp"

#include <cmath>

namespace coron {

double wrap_angle(double t) {
  double w = std::fmod(t, 2.0 * M_PI);
  if (w <= -M_PI) w += 2.0 * M_PI;
  if (w > M_PI) w -= 2.0 * M_PI;
  return w;
}

SqMat plane_rotation(int n, int i, int j, double t) {
  SqMat m = SqMat::identity(n);
  double c = std::cos(t), s = std::sin(t);
  m(i, i) = c;
  m(i, j) = -s;
  m(j, i) = s;
  m(j, j) = c;
  return m;
}

SqMat rotation_matrix(const RotationCoords& theta, Dimension dim) {
  const int n = dim.n;
  if (theta.size() != 2 * n - 3)
    throw std::invalid_argument("rotation_matrix: angle vector must have 2n-3 entries");
  SqMat r = SqMat::identity(n);
  int idx = 0;
  // P_12, P_13, ..., P_1n
  r = r * plane_rotation(n, 0, 1, theta.theta[idx++]);
  for (int l = 2; l < n; ++l) r = r * plane_rotation(n, 0, l, theta.theta[idx++]);
  // P_23, ..., P_2n
  for (int l = 2; l < n; ++l) r = r * plane_rotation(n, 1, l, theta.theta[idx++]);
  return r;
}

double fundamental_solution(const Point& x) {
  double r2 = norm2(x);
  if (r2 == 0.0) throw std::domain_error("fundamental_solution: singular at x = 0");
  return gamma_n(x.n) * std::pow(r2, 0.5 * (2 - x.n));
}

// H(x,y) = gamma_n (|x|^2 |y|^2 - 2 x.y + 1)^{(2-n)/2}; the image-charge
// potential written in its symmetric form.
static double image_kernel(const Point& x, const Point& y) {
  return norm2(x) * norm2(y) - 2.0 * dot(x, y) + 1.0;
}

static void check_in_ball(const Point& x, const char* who) {
  if (norm2(x) > 1.0 + 1e-12) throw std::domain_error(std::string(who) + ": point outside closed unit ball");
}

double ball_regular_part(const Point& x, const Point& y) {
  check_in_ball(x, "ball_regular_part");
  check_in_ball(y, "ball_regular_part");
  double s = image_kernel(x, y);
  return gamma_n(x.n) * std::pow(s, 0.5 * (2 - x.n));
}

Point ball_regular_part_gradient(const Point& x, const Point& y) {
  double s = image_kernel(x, y);
  double c = gamma_n(x.n) * 0.5 * (2 - x.n) * std::pow(s, 0.5 * (2 - x.n) - 1.0);
  Point g = (2.0 * norm2(y)) * x - 2.0 * y;
  return c * g;
}

double ball_green(const Point& x, const Point& y) {
  check_in_ball(x, "ball_green");
  check_in_ball(y, "ball_green");
  Point d = x - y;
  if (norm2(d) == 0.0) throw std::domain_error("ball_green: singular at x = y");
  return fundamental_solution(d) - ball_regular_part(x, y);
}

}  // namespace coron
