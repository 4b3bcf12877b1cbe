#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "coron/field.hpp"
#include "coron/geometry.hpp"

using namespace coron;

TEST_CASE("rotation at zero angles is the identity") {
  for (int n : {3, 4, 5}) {
    SqMat r = rotation_matrix(RotationCoords::zero(n), Dimension(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(r(i, j) == (i == j ? 1.0 : 0.0));
  }
}

TEST_CASE("plane rotation column structure at pi/2") {
  RotationCoords th = RotationCoords::zero(3);
  th.theta[0] = M_PI / 2;  // theta_12
  SqMat r = rotation_matrix(th, Dimension(3));
  // P_12(pi/2) maps e1 to (cos, sin, 0) = (0, 1, 0)
  Point e1 = unit_vector(3, 0);
  Point im = r.apply(e1);
  CHECK(im[0] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(im[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(im[2] == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("rotation matrices are special orthogonal") {
  int n = 4;
  std::vector<double> angles = {0.3, -1.2, 2.1, 0.7, -0.4};
  RotationCoords th{angles};
  SqMat r = rotation_matrix(th, Dimension(n));
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = r(i, j);
  Eigen::MatrixXd should_be_id = m.transpose() * m;
  CHECK((should_be_id - Eigen::MatrixXd::Identity(n, n)).norm() < 1e-12);
  CHECK(m.determinant() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rotation rejects wrong-length angle vectors") {
  RotationCoords th{std::vector<double>{0.1, 0.2}};
  CHECK_THROWS_AS(rotation_matrix(th, Dimension(3)), std::invalid_argument);
}

TEST_CASE("fundamental solution normalization and homogeneity") {
  Point x3{1.0, 0.0, 0.0};
  CHECK(fundamental_solution(x3) == doctest::Approx(1.0 / (4.0 * M_PI)).epsilon(1e-14));
  Point x3b{2.0, 0.0, 0.0};
  CHECK(fundamental_solution(x3b) ==
        doctest::Approx(0.5 / (4.0 * M_PI)).epsilon(1e-14));
  Point x5{0.0, 1.0, 0.0, 0.0, 0.0};
  CHECK(fundamental_solution(x5) == doctest::Approx(1.0 / (8.0 * M_PI * M_PI)).epsilon(1e-13));

  // Gamma(t x) = t^{2-n} Gamma(x)
  for (int n : {3, 4, 5}) {
    auto dirs = probe_directions(n, 5);
    for (const auto& d : dirs) {
      Point x = 0.8 * d;
      for (double t : {0.5, 2.0, 7.3}) {
        CHECK(fundamental_solution(t * x) ==
              doctest::Approx(std::pow(t, 2 - n) * fundamental_solution(x)).epsilon(1e-13));
      }
    }
  }
  CHECK_THROWS_AS(fundamental_solution(zero_point(3)), std::domain_error);
}

TEST_CASE("ball Green function boundary, symmetry, sign") {
  for (int n : {3, 4, 5}) {
    auto dirs = probe_directions(n, 20, 99);
    // H(0,0) = gamma_n
    Point o = zero_point(n);
    CHECK(ball_regular_part(o, o) == doctest::Approx(gamma_n(n)).epsilon(1e-14));
    // G = 0 on the boundary
    int idx = 0;
    for (const auto& d : dirs) {
      Point y = (0.1 + 0.04 * (idx++ % 10)) * d;
      Point x = dirs[(idx * 7 + 3) % dirs.size()];
      CHECK(std::fabs(ball_green(x, y)) < 1e-10);
    }
    // symmetry and positivity on random interior pairs
    auto pts = probe_points(n, 10, 10, 0.05, 0.9, 4321);
    for (size_t i = 0; i + 1 < pts.size(); i += 2) {
      if (norm(pts[i] - pts[i + 1]) < 1e-3) continue;
      double g1 = ball_green(pts[i], pts[i + 1]);
      double g2 = ball_green(pts[i + 1], pts[i]);
      CHECK(g1 == doctest::Approx(g2).epsilon(1e-10));
      CHECK(g1 > 0.0);
    }
  }
}

TEST_CASE("regular part is harmonic: 7-point stencil oracle") {
  int n = 3;
  Point y{0.2, -0.1, 0.3};
  auto h_field = [&y](const Point& x) { return ball_regular_part(x, y); };
  auto pts = probe_points(n, 5, 4, 0.05, 0.6, 11);
  int checked = 0;
  for (const auto& x : pts) {
    if (checked >= 20) break;
    ++checked;
    double lap = fd_laplacian(h_field, x, 1e-3);
    // H is O(gamma_n); O(h^2) stencil error allows ~1e-4 absolute here
    CHECK(std::fabs(lap) < 2e-4);
  }
  CHECK(checked == 20);
}

TEST_CASE("gradient of the regular part matches finite differences") {
  int n = 4;
  Point y{0.3, 0.1, -0.2, 0.05};
  auto h_field = [&y](const Point& x) { return ball_regular_part(x, y); };
  for (const auto& x : probe_points(n, 4, 4, 0.1, 0.7, 5150)) {
    Point g = ball_regular_part_gradient(x, y);
    Point fd = fd_gradient(h_field, x);
    for (int i = 0; i < n; ++i) CHECK(g[i] == doctest::Approx(fd[i]).epsilon(1e-5));
  }
}

TEST_CASE("ball Green domain and singularity errors") {
  Point far{1.5, 0.0, 0.0};
  Point in{0.2, 0.0, 0.0};
  CHECK_THROWS_AS(ball_green(far, in), std::domain_error);
  CHECK_THROWS_AS(ball_green(in, in), std::domain_error);
}

TEST_CASE("angle wrap reduces mod 2 pi") {
  CHECK(wrap_angle(3.0 * M_PI) == doctest::Approx(M_PI));
  CHECK(wrap_angle(-3.5 * M_PI) == doctest::Approx(0.5 * M_PI));
}
