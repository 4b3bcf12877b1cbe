#include "coron/energy.hpp"

#include <cmath>

#include "coron/kelvin.hpp"

namespace coron {

double c_tilde_closed_form(int n) {
  return n * (n - 2) * (n - 2) * std::pow(double(n) * (n - 2), 0.5 * n) *
         std::pow(M_PI, 0.5 * n) * std::tgamma(0.5 * n) / (4.0 * std::tgamma(double(n + 2)));
}

double c_tilde_display_form(int n) {
  return std::pow(2.0, 0.5 * (n - 4)) * n * (n - 2) * (n - 2) *
         std::pow(std::tgamma(0.5 * n), 2) / std::tgamma(double(n + 2));
}

double energy_entire(const ScalarField& u, const QuadratureSpec& spec) {
  const int n = u.n;
  const double p = Dimension(n).p();
  auto grad = u.gradient;
  auto val = u.value;
  MultiFn f = [grad, val, p](const Point& y, double* out) {
    Point g = grad(y);
    out[0] = norm2(g);
    out[1] = std::pow(std::fabs(val(y)), p + 1.0);
  };
  auto res = integrate_rn_multi(f, 2, n, spec);
  return 0.5 * res[0].value - res[1].value / (p + 1.0);
}

double energy_domain(const ScalarField& u, double eps, const QuadratureSpec& spec) {
  const int n = u.n;
  const double p = Dimension(n).p();
  auto grad = u.gradient;
  auto val = u.value;
  MultiFn f = [grad, val, p](const Point& y, double* out) {
    Point g = grad(y);
    out[0] = norm2(g);
    out[1] = std::pow(std::fabs(val(y)), p + 1.0);
  };
  auto res = integrate_annulus_multi(f, 2, n, eps, spec);
  return 0.5 * res[0].value - res[1].value / (p + 1.0);
}

EnergyConstants constants(Dimension dim, const ScalarField& q, const QuadratureSpec& spec) {
  const int n = dim.n;
  const double p = dim.p();
  EnergyConstants ec;
  ec.alpha_n = alpha_n(n);
  ec.gamma_n = gamma_n(n);
  ec.S_n = bubble_energy_constant(n);
  ec.c_tilde = c_tilde_closed_form(n);

  auto val = q.value;
  MultiFn f = [val, p](const Point& y, double* out) {
    double v = std::fabs(val(y));
    out[0] = std::pow(v, p + 1.0);
    out[1] = std::pow(v, p);
  };
  auto res = integrate_rn_multi(f, 2, n, spec);
  ec.c1 = res[0].value / n;
  ec.c2 = res[1].value;

  // quadrature route for c_tilde: Int U^{p-1} Z0^2 with the standard bubble
  ScalarField u = bubble(dim);
  ScalarField z0 = kernel_field(0, u);
  auto uval = u.value;
  auto zval = z0.value;
  QuadratureSpec cspec = spec;
  cspec.symmetry = Symmetry::full_even;
  auto ct = integrate_rn([uval, zval, p](const Point& y) {
    return std::pow(uval(y), p - 1.0) * zval(y) * zval(y);
  }, n, cspec);
  double rel = std::fabs(ct.value - ec.c_tilde) / ec.c_tilde;
  if (rel > 1e-4)
    throw std::runtime_error("constants: closed-form and quadrature c_tilde disagree");
  return ec;
}

unsigned kernel_parity(int alpha, int n) {
  // odd-coordinate bitmask; Q itself is even in every coordinate (k even)
  if (alpha == 0) return 0u;
  if (alpha >= 1 && alpha <= n) return 1u << (alpha - 1);
  if (alpha == n + 1) return 0b11u;
  if (alpha == n + 2) return 0b01u;
  if (alpha == n + 3) return 0b10u;
  if (alpha <= 2 * n + 1) {
    int l = alpha - n - 1;  // 3..n
    return 0b01u | (1u << (l - 1));
  }
  int l = alpha - 2 * n + 1;  // 3..n
  return 0b10u | (1u << (l - 1));
}

Eigen::MatrixXd gram_matrix(const CrownSpec& spec, const QuadratureSpec& quad) {
  const int n = spec.dim.n;
  const int m = 3 * n;
  if (spec.k % 2 != 0)
    throw std::invalid_argument("gram_matrix: k must be even (reflection symmetry)");
  ScalarField q = crown(spec);

  // nonzero entries have matching parity signatures
  std::vector<std::pair<int, int>> live;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      if (kernel_parity(i, n) == kernel_parity(j, n)) live.push_back({i, j});

  const double p = spec.dim.p();
  auto qval = q.value;
  auto qgrad = q.gradient;

  MultiFn f = [&](const Point& y, double* out) {
    double v = qval(y);
    double w = std::pow(std::fabs(v), p - 1.0);
    std::array<double, 3 * kMaxDim> vals;
    kernel_values(n, y, v, qgrad(y), vals.data());
    for (size_t e = 0; e < live.size(); ++e)
      out[e] = w * vals[live[e].first] * vals[live[e].second];
  };

  QuadratureSpec qs = quad;
  qs.symmetry = Symmetry::full_even;
  if (qs.fold_radius == 1.0) qs.fold_radius = 2.0;  // keep the bubble ring interior
  auto res = integrate_rn_multi(f, static_cast<int>(live.size()), n, qs);

  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(m, m);
  for (size_t e = 0; e < live.size(); ++e) {
    gram(live[e].first, live[e].second) = res[e].value;
    gram(live[e].second, live[e].first) = res[e].value;
  }
  return gram;
}

}  // namespace coron
