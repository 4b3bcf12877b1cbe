#include "coron/appendix.hpp"

#include <cmath>

#include "coron/kelvin.hpp"

namespace coron {

namespace {

// C2 cutoff: 1 for r <= r_in, 0 for r >= r_out (quintic smoothstep between).
double bump(double r, double r_in, double r_out) {
  if (r <= r_in) return 1.0;
  if (r >= r_out) return 0.0;
  double t = (r - r_in) / (r_out - r_in);
  double s = t * t * t * (10.0 - 15.0 * t + 6.0 * t * t);
  return 1.0 - s;
}

double drift_of_last_rows(const std::vector<ConvolutionRow>& rows) {
  if (rows.size() < 2) return 0.0;
  double a = rows[rows.size() - 2].product;
  double b = rows.back().product;
  return std::fabs(b - a) / std::max(std::fabs(a), 1e-300);
}

}  // namespace

std::vector<KernelDecayRow> kernel_decay_report(const CrownSpec& spec,
                                                const std::vector<double>& radii) {
  const int n = spec.dim.n;
  ScalarField q = crown(spec);
  auto qval = q.value;
  auto qgrad = q.gradient;
  auto dirs = probe_directions(n, 48, 555);

  auto sup_for = [&](double radius_scale, std::vector<double>& sups) {
    for (double r0 : radii) {
      double r = r0 * radius_scale;
      for (const auto& d : dirs) {
        Point y = r * d;
        std::array<double, 3 * kMaxDim> z;
        kernel_values(n, y, qval(y), qgrad(y), z.data());
        double w = 1.0 + std::pow(r, n - 2);
        for (int a = 0; a < 3 * n; ++a) sups[a] = std::max(sups[a], w * std::fabs(z[a]));
      }
    }
  };
  std::vector<double> sup1(3 * n, 0.0), sup2(3 * n, 0.0);
  sup_for(1.0, sup1);
  sup_for(2.0, sup2);

  std::vector<KernelDecayRow> rows;
  for (int a = 0; a < 3 * n; ++a) {
    KernelDecayRow r;
    r.alpha = a;
    r.sup = sup1[a];
    r.sup_doubled = std::max(sup1[a], sup2[a]);
    r.rel_change = std::fabs(r.sup_doubled - r.sup) / std::max(r.sup, 1e-300);
    rows.push_back(r);
  }
  return rows;
}

ConvolutionReport convolution_bound_a(double a_exp, const std::vector<double>& y_norms, int n,
                                      const QuadratureSpec& spec) {
  if (!(a_exp > 0.0)) throw std::invalid_argument("convolution_bound_a: a > 0 required");
  ConvolutionReport rep;
  rep.uniform_regime = a_exp < double(n - 2);
  for (double yn : y_norms) {
    Point y = yn * unit_vector(n, 0);
    auto f = [&](const Point& z) {
      Point d = z - y;
      return std::pow(norm2(d), 0.5 * (2 - n)) * std::pow(1.0 + norm(z), -2.0 - a_exp);
    };
    double r1 = 2.0 * (yn + 2.0);
    double rmax = 1e8 * (1.0 + yn);
    auto near = integrate_ball(f, n, y, 0.0, r1, spec);
    auto far = integrate_shell_log(f, n, y, r1, rmax, spec);
    // beyond rmax: |z-y| >= r/2, (1+|z|) >= r/2
    double tail = sphere_area(n) * std::pow(2.0, n + a_exp) * std::pow(rmax, -a_exp) / a_exp;
    ConvolutionRow row;
    row.y_norm = yn;
    row.integral = near.value + far.value;
    row.product = row.integral * (1.0 + std::pow(yn, a_exp));
    row.quad_error = near.error + far.error + tail;
    rep.rows.push_back(row);
  }
  for (const auto& r : rep.rows) rep.empirical_constant = std::max(rep.empirical_constant, r.product);
  rep.last_decade_drift = drift_of_last_rows(rep.rows);
  return rep;
}

ConvolutionReport convolution_bound_b(double b_exp, const std::vector<double>& y_norms, int n,
                                      const QuadratureSpec& spec) {
  if (!(b_exp > 0.0 && b_exp < double(n)))
    throw std::invalid_argument("convolution_bound_b: 0 < b < n required");
  ConvolutionReport rep;
  rep.uniform_regime = b_exp < double(n - 2);
  for (double yn : y_norms) {
    if (!(yn > 0.0 && yn < 0.65))
      throw std::invalid_argument("convolution_bound_b: sweep needs 0 < |y| < 0.65");
    Point y = yn * unit_vector(n, 0);
    double rho = 0.45 * yn;
    auto kern = [&](const Point& z) {
      return std::pow(norm2(z - y), 0.5 * (2 - n)) * std::pow(norm2(z), 0.5 * (b_exp - n));
    };
    // three-region split of the proof, realized as a smooth partition of unity
    auto f0 = [&](const Point& z) { return kern(z) * bump(norm(z), 0.5 * rho, rho); };
    auto fy = [&](const Point& z) { return kern(z) * bump(norm(z - y), 0.5 * rho, rho); };
    auto frest = [&](const Point& z) {
      double w = 1.0 - bump(norm(z), 0.5 * rho, rho) - bump(norm(z - y), 0.5 * rho, rho);
      return w <= 0.0 ? 0.0 : kern(z) * w;
    };
    auto t0 = integrate_ball_power(f0, n, zero_point(n), rho, b_exp, spec);
    auto ty = integrate_ball(fy, n, y, 0.0, rho, spec);
    auto tr = integrate_ball(frest, n, zero_point(n), 0.0, 1.0, spec);
    ConvolutionRow row;
    row.y_norm = yn;
    row.integral = t0.value + ty.value + tr.value;
    row.product = row.integral * std::pow(yn, double(n - 2) - b_exp);
    row.quad_error = t0.error + ty.error + tr.error;
    rep.rows.push_back(row);
  }
  for (const auto& r : rep.rows) rep.empirical_constant = std::max(rep.empirical_constant, r.product);
  rep.last_decade_drift = drift_of_last_rows(rep.rows);
  return rep;
}

}  // namespace coron
