#include <doctest.h>

#include <cmath>

#include "coron/crown.hpp"
#include "coron/energy.hpp"
#include "coron/quadrature.hpp"
#include "oracles.hpp"

using namespace coron;

namespace {

struct BatteryEntry {
  const char* name;
  int n;
  std::function<double(const Point&)> f;
  double exact;
  bool annulus = false;
  double eps = 0.0;
};

std::vector<BatteryEntry> analytic_battery() {
  std::vector<BatteryEntry> v;
  auto r2 = [](const Point& y) { return norm2(y); };

  v.push_back({"gauss3", 3, [r2](const Point& y) { return std::exp(-r2(y)); },
               std::pow(M_PI, 1.5)});
  v.push_back({"gauss4", 4, [r2](const Point& y) { return std::exp(-r2(y)); }, M_PI * M_PI});
  v.push_back({"gauss5", 5, [r2](const Point& y) { return std::exp(-r2(y)); },
               std::pow(M_PI, 2.5)});
  v.push_back({"x1sq_gauss3", 3, [r2](const Point& y) { return y[0] * y[0] * std::exp(-r2(y)); },
               0.5 * std::pow(M_PI, 1.5)});
  v.push_back({"shifted_gauss3", 3,
               [](const Point& y) {
                 Point c{0.3, 0.2, 0.1};
                 return std::exp(-norm2(y - c));
               },
               std::pow(M_PI, 1.5)});
  v.push_back({"odd3", 3, [r2](const Point& y) { return y[0] * std::exp(-r2(y)); }, 0.0});
  v.push_back({"aniso3", 3,
               [](const Point& y) {
                 return std::exp(-(y[0] * y[0] + 2 * y[1] * y[1] + 3 * y[2] * y[2]));
               },
               std::pow(M_PI, 1.5) / std::sqrt(6.0)});
  v.push_back({"pow3_3", 3, [r2](const Point& y) { return std::pow(1.0 + r2(y), -3.0); },
               oracles::power_integral(3, 3)});
  v.push_back({"pow3_2.5", 3, [r2](const Point& y) { return std::pow(1.0 + r2(y), -2.5); },
               oracles::power_integral(3, 2.5)});
  v.push_back({"pow4_4", 4, [r2](const Point& y) { return std::pow(1.0 + r2(y), -4.0); },
               oracles::power_integral(4, 4)});
  v.push_back({"pow4_3", 4, [r2](const Point& y) { return std::pow(1.0 + r2(y), -3.0); },
               oracles::power_integral(4, 3)});
  v.push_back({"r2pow4_4", 4, [r2](const Point& y) { return r2(y) * std::pow(1.0 + r2(y), -4.0); },
               M_PI * M_PI / 3.0});
  v.push_back({"cos_gauss4", 4,
               [r2](const Point& y) { return std::cos(y[0]) * std::exp(-r2(y)); },
               M_PI * M_PI * std::exp(-0.25)});
  v.push_back({"pow5_4", 5, [r2](const Point& y) { return std::pow(1.0 + r2(y), -4.0); },
               oracles::power_integral(5, 4)});
  v.push_back({"bubble_mass3", 3,
               [r2](const Point& y) {
                 return std::pow(3.0, 1.5) * std::pow(1.0 + r2(y), -3.0);
               },
               bubble_mass_critical(3)});
  v.push_back({"bubble_mass4", 4,
               [r2](const Point& y) { return 64.0 * std::pow(1.0 + r2(y), -4.0); },
               bubble_mass_critical(4)});
  v.push_back({"shifted_bubble3", 3,
               [](const Point& y) {
                 Point c{0.5, 0.0, 0.0};
                 return std::pow(3.0, 1.5) * std::pow(1.0 + norm2(y - c), -3.0);
               },
               bubble_mass_critical(3)});
  // annulus entries
  v.push_back({"annulus_vol3", 3, [](const Point&) { return 1.0; },
               4.0 * M_PI / 3.0 * (1.0 - 1e-6), true, 1e-2});
  v.push_back({"annulus_rm2_3", 3, [r2](const Point& y) { return 1.0 / r2(y); },
               4.0 * M_PI * (1.0 - 1e-2), true, 1e-2});
  v.push_back({"annulus_rm2_4", 4, [r2](const Point& y) { return 1.0 / (r2(y) * r2(y)); },
               2.0 * M_PI * M_PI * std::log(1.0 / 5e-2), true, 5e-2});
  return v;
}

}  // namespace

TEST_CASE("analytic battery: values correct and error estimates honest") {
  QuadratureSpec spec;
  spec.rel_tol = 1e-8;
  spec.abs_tol = 1e-10;
  auto battery = analytic_battery();
  CHECK(battery.size() >= 20);
  for (const auto& e : battery) {
    CAPTURE(e.name);
    IntegralResult res = e.annulus ? integrate_annulus(e.f, e.n, e.eps, spec)
                                   : integrate_rn(e.f, e.n, spec);
    double true_err = std::fabs(res.value - e.exact);
    CHECK(true_err <= std::max(2.0 * res.error, 1e-13 * std::fabs(e.exact) + 1e-13));
    CHECK(res.value == doctest::Approx(e.exact).epsilon(1e-6));
  }
}

TEST_CASE("radial Gauss-Legendre oracle agrees on the bubble mass") {
  // Int U^{p+1}, n = 3, against the 1-D radial reduction
  QuadratureSpec spec;
  spec.rel_tol = 1e-9;
  int n = 3;
  ScalarField u = bubble(Dimension(n));
  double p = Dimension(n).p();
  auto f = [&](const Point& y) { return std::pow(u.value(y), p + 1.0); };
  IntegralResult res = integrate_rn(f, n, spec);
  double oracle = oracles::radial_integral(
      n, [&](double r) { return std::pow(3.0, 1.5) * std::pow(1.0 + r * r, -3.0); });
  CHECK(res.value == doctest::Approx(oracle).epsilon(1e-8));
}

TEST_CASE("odd integrand vanishes to absolute tolerance") {
  QuadratureSpec spec;
  spec.rel_tol = 1e-7;
  spec.abs_tol = 1e-10;
  auto f = [](const Point& y) { return y[0] * std::pow(1.0 + norm2(y), -4.0); };
  IntegralResult res = integrate_rn(f, 4, spec);
  CHECK(std::fabs(res.value) < 1e-10);
}

TEST_CASE("c~ from quadrature matches the closed form (n = 4)") {
  QuadratureSpec spec;
  spec.rel_tol = 1e-9;
  spec.symmetry = Symmetry::full_even;
  int n = 4;
  ScalarField u = bubble(Dimension(n));
  double p = Dimension(n).p();
  auto z0 = [&](const Point& y) {
    return 0.5 * (n - 2) * u.value(y) + dot(u.gradient(y), y);
  };
  auto f = [&](const Point& y) {
    double z = z0(y);
    return std::pow(u.value(y), p - 1.0) * z * z;
  };
  IntegralResult res = integrate_rn(f, n, spec);
  CHECK(res.value == doctest::Approx(32.0 * M_PI * M_PI / 15.0).epsilon(1e-8));
  CHECK(res.value == doctest::Approx(c_tilde_closed_form(4)).epsilon(1e-8));
  // the displayed form misses the amplitude/measure factors: ratio 16 pi^2
  CHECK(c_tilde_display_form(4) == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
  CHECK(c_tilde_closed_form(4) / c_tilde_display_form(4) ==
        doctest::Approx(16.0 * M_PI * M_PI).epsilon(1e-12));
}

TEST_CASE("Kelvin-mapped exterior equals radial cutoff within errors") {
  int n = 3;
  auto f = [](const Point& y) { return std::pow(1.0 + norm2(y), -3.0); };
  QuadratureSpec a;
  a.rel_tol = 1e-8;
  QuadratureSpec b = a;
  b.exterior = Exterior::radial_cutoff;
  b.cutoff_radius = 300.0;
  IntegralResult ra = integrate_rn(f, n, a);
  IntegralResult rb = integrate_rn(f, n, b);
  CHECK(std::fabs(ra.value - rb.value) <= ra.error + rb.error);
}

TEST_CASE("symmetry acceleration changes nothing on symmetric integrands") {
  int n = 4;
  auto f = [](const Point& y) { return std::pow(1.0 + norm2(y), -4.0); };
  QuadratureSpec plain;
  plain.rel_tol = 1e-8;
  QuadratureSpec even = plain;
  even.symmetry = Symmetry::full_even;
  QuadratureSpec dihedral = plain;
  dihedral.symmetry = Symmetry::dihedral_k;
  dihedral.sym_k = 8;
  double v0 = integrate_rn(f, n, plain).value;
  double v1 = integrate_rn(f, n, even).value;
  double v2 = integrate_rn(f, n, dihedral).value;
  CHECK(v1 == doctest::Approx(v0).epsilon(1e-7));
  CHECK(v2 == doctest::Approx(v0).epsilon(1e-7));

  // a genuinely dihedral-8 integrand: cos(8 psi) ring harmonic on top
  auto g = [](const Point& y) {
    double base = std::pow(1.0 + norm2(y), -4.0);
    double x = y[0], z = y[1];
    double c8 = std::cos(8.0 * std::atan2(z, x));
    double r12 = std::sqrt(x * x + z * z);
    return base * (1.0 + 0.5 * c8 * std::pow(r12 / std::sqrt(1.0 + norm2(y)), 8.0));
  };
  double g0 = integrate_rn(g, n, plain).value;
  double g2 = integrate_rn(g, n, dihedral).value;
  CHECK(g2 == doctest::Approx(g0).epsilon(1e-6));
}

TEST_CASE("results are deterministic across repeated runs") {
  int n = 4;
  auto f = [](const Point& y) { return std::cos(y[1]) * std::exp(-norm2(y)); };
  QuadratureSpec spec;
  spec.rel_tol = 1e-8;
  IntegralResult r1 = integrate_rn(f, n, spec);
  IntegralResult r2 = integrate_rn(f, n, spec);
  CHECK(r1.value == r2.value);  // bitwise
  CHECK(r1.error == r2.error);
  CHECK(r1.evals == r2.evals);
}

TEST_CASE("non-convergence carries the best estimate") {
  int n = 3;
  auto f = [](const Point& y) { return std::exp(-norm2(y)); };
  QuadratureSpec spec;
  spec.rel_tol = 1e-14;
  spec.abs_tol = 1e-16;
  spec.max_depth = 2;
  bool threw = false;
  try {
    integrate_rn(f, n, spec);
  } catch (const QuadratureError& e) {
    threw = true;
    CHECK(e.best_values.size() == 1);
    // depth-capped estimate is rough but must be carried and usable
    CHECK(e.best_values[0] == doctest::Approx(std::pow(M_PI, 1.5)).epsilon(0.8));
    CHECK(e.error_estimates[0] > 0.0);
  }
  CHECK(threw);
}

TEST_CASE("shell integrators: log-radial and power-graded") {
  int n = 3;
  QuadratureSpec spec;
  spec.rel_tol = 1e-9;
  // Int_{B(0,1)} |z|^{-2.5} dz = 4 pi Int r^{-0.5} dr = 8 pi
  auto f = [](const Point& z) { return std::pow(norm2(z), -1.25); };
  IntegralResult r = integrate_ball_power(f, n, zero_point(n), 1.0, 0.5, spec);
  CHECK(r.value == doctest::Approx(8.0 * M_PI).epsilon(1e-8));

  // log shell: Int_{1<|z|<100} |z|^{-3} dz = 4 pi ln 100
  auto g = [](const Point& z) { return std::pow(norm2(z), -1.5); };
  IntegralResult s = integrate_shell_log(g, n, zero_point(n), 1.0, 100.0, spec);
  CHECK(s.value == doctest::Approx(4.0 * M_PI * std::log(100.0)).epsilon(1e-8));

  // centered shell regularizes the |y - c|^{2-n} pole
  Point c{0.4, -0.2, 0.1};
  auto k = [&](const Point& z) { return std::pow(norm2(z - c), -0.5); };
  IntegralResult t = integrate_ball(k, n, c, 0.0, 2.0, spec);
  CHECK(t.value == doctest::Approx(4.0 * M_PI * 2.0).epsilon(1e-8));  // 4pi Int_0^2 r dr
}

TEST_CASE("weighted norms: homogeneity, trivial values, stability") {
  int n = 4;
  ScalarField u = bubble(Dimension(n));
  double eps = 1e-3;

  double nu = weighted_norm(u, WeightedNorm::fundamental, eps);
  ScalarField u3 = field_scale(-3.0, u);
  CHECK(weighted_norm(u3, WeightedNorm::fundamental, eps) == doctest::Approx(3.0 * nu));

  // inner branch of starstar for f = |y|^{2-n} (restricted inside)
  ScalarField f;
  f.n = n;
  f.value = [n](const Point& y) {
    double r = norm(y);
    return r <= 1.0 ? std::pow(r, 2 - n) : 0.0;
  };
  f.gradient = [n](const Point& y) { return zero_point(n); };
  CHECK(weighted_norm(f, WeightedNorm::starstar, eps) == doctest::Approx(1.0).epsilon(1e-12));

  // fundamental norm of U against a dense 1-D maximization oracle
  double best = 0.0;
  for (int i = 0; i <= 2000000; ++i) {
    double r = 1e-3 * i;
    best = std::max(best, (1.0 + std::pow(r, n - 2)) * alpha_n(n) *
                              std::pow(1.0 + r * r, -0.5 * (n - 2)));
  }
  CHECK(nu == doctest::Approx(best).epsilon(5e-3));

  // grid-doubling stability
  double s1 = weighted_norm(u, WeightedNorm::star, eps, 0.1, 200, 32);
  double s2 = weighted_norm(u, WeightedNorm::star, eps, 0.1, 400, 64);
  CHECK(std::fabs(s1 - s2) / s2 < 0.02);

  CHECK_THROWS_AS(weighted_norm(u, WeightedNorm::star, eps, 0.1, 0, 0),
                  std::invalid_argument);
}
