#include "coron/projection.hpp"

#include <cmath>

namespace coron {

double f_function(const Point& tau, double a1, double a2, const RotationCoords& theta,
                  const ScalarField& q, double far_field) {
  const int n = q.n;
  double t2 = norm2(tau);
  if (t2 == 0.0) {
    if (std::isnan(far_field)) return far_field_constant(q);
    return far_field;
  }
  SqMat rot = rotation_matrix(theta, Dimension(n));
  Point a(n);
  a[0] = a1;
  a[1] = a2;
  Point arg = (-1.0 / t2) * tau - rot.apply(a);
  return q.value(arg) * std::pow(t2, 0.5 * (2 - n));
}

ProjectionField project_leading(const ParamSet& A, double eps, const ScalarField& q,
                                double far_field) {
  const int n = q.n;
  A.validate(n);
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("project_leading: eps in (0,1)");
  const double lam = A.lambda;
  SqMat rot = rotation_matrix(A.theta, Dimension(n));
  Point tau = (1.0 / lam) * A.xi;

  ProjectionField P;
  P.eps = eps;
  P.params = A;
  P.base = q_family(A, q);

  double q_at_a = q.value((-1.0) * rot.apply(A.a_vector(n)));
  double ch = -std::pow(lam, 0.5 * (n - 2)) * q_at_a / gamma_n(n);
  Point xi = A.xi;
  P.h_correction.n = n;
  P.h_correction.value = [ch, xi](const Point& x) { return ch * ball_regular_part(x, xi); };
  P.h_correction.gradient = [ch, xi](const Point& x) {
    return ch * ball_regular_part_gradient(x, xi);
  };
  install_fd_laplacian(P.h_correction);

  double F = f_function(tau, A.a1, A.a2, A.theta, q, far_field);
  double cf = -std::pow(lam, -0.5 * (n - 2)) * F * std::pow(eps, n - 2);
  P.hole_correction.n = n;
  P.hole_correction.value = [cf, n](const Point& x) {
    return cf * std::pow(norm2(x), 0.5 * (2 - n));
  };
  P.hole_correction.gradient = [cf, n](const Point& x) {
    return (cf * (2 - n) * std::pow(norm2(x), -0.5 * n)) * x;
  };
  install_fd_laplacian(P.hole_correction);

  auto bv = P.base.value, hv = P.h_correction.value, kv = P.hole_correction.value;
  auto bg = P.base.gradient, hg = P.h_correction.gradient, kg = P.hole_correction.gradient;
  P.total.n = n;
  P.total.value = [bv, hv, kv](const Point& x) { return bv(x) + hv(x) + kv(x); };
  P.total.gradient = [bg, hg, kg](const Point& x) { return bg(x) + hg(x) + kg(x); };
  install_fd_laplacian(P.total);
  return P;
}

std::pair<double, double> remainder_boundary_defect(const ParamSet& A, double eps,
                                                    const ScalarField& q, int n_dirs,
                                                    double far_field) {
  ProjectionField P = project_leading(A, eps, q, far_field);
  auto dirs = probe_directions(q.n, n_dirs, 2024);
  double inner = 0, outer = 0;
  for (const auto& d : dirs) {
    inner = std::max(inner, std::fabs(P.total.value(eps * d)));
    outer = std::max(outer, std::fabs(P.total.value(1.0 * d)));
  }
  return {inner, outer};
}

std::pair<double, double> remainder_boundary_defect_derivative(const ParamSet& A, double eps,
                                                               const ScalarField& q,
                                                               const std::string& parameter,
                                                               int index, int n_dirs) {
  const int n = q.n;
  Point tau = (1.0 / A.lambda) * A.xi;
  auto build = [&](double h) {
    ParamSet B = A;
    if (parameter == "lambda") {
      B.lambda = A.lambda + h;
      B.xi = B.lambda * tau;  // tau held fixed
    } else if (parameter == "tau") {
      Point t2 = tau;
      t2[index] += h;
      B.xi = A.lambda * t2;
    } else if (parameter == "a") {
      if (index == 0) B.a1 += h;
      else B.a2 += h;
    } else if (parameter == "theta") {
      B.theta.theta[index] += h;
    } else {
      throw std::invalid_argument("remainder_boundary_defect_derivative: unknown parameter");
    }
    return project_leading(B, eps, q);
  };
  double h = parameter == "lambda" ? 1e-4 * A.lambda : 1e-4;
  ProjectionField Pp = build(h), Pm = build(-h);
  auto dirs = probe_directions(n, n_dirs, 2024);
  double inner = 0, outer = 0;
  for (const auto& d : dirs) {
    double di = (Pp.total.value(eps * d) - Pm.total.value(eps * d)) / (2.0 * h);
    double dout = (Pp.total.value(1.0 * d) - Pm.total.value(1.0 * d)) / (2.0 * h);
    inner = std::max(inner, std::fabs(di));
    outer = std::max(outer, std::fabs(dout));
  }
  return {inner, outer};
}

ScalarField error_field(const ParamSet& A, double eps, const ScalarField& q, double far_field) {
  const int n = q.n;
  const double p = Dimension(n).p();
  const double sq = std::sqrt(eps);
  ProjectionField P = project_leading(A, eps, q, far_field);
  ParamSet tilde = A;
  tilde.lambda = A.lambda / sq;
  tilde.xi = (1.0 / sq) * A.xi;
  ScalarField qa = q_family(tilde, q);
  auto pv = P.total.value;
  auto qv = qa.value;
  const double scale = std::pow(eps, 1.0 / (p - 1.0));
  ScalarField E;
  E.n = n;
  E.value = [pv, qv, p, sq, scale](const Point& y) {
    double v = scale * pv(sq * y);
    double w = qv(y);
    auto odd_pow = [p](double t) { return std::pow(std::fabs(t), p - 1.0) * t; };
    return odd_pow(v) - odd_pow(w);
  };
  E.gradient = [E_val = E.value](const Point& y) { return fd_gradient(E_val, y); };
  E.fd_gradient = true;
  install_fd_laplacian(E);
  return E;
}

ExpansionReport error_norm_scaling(double d, const Point& tau, double a1, double a2,
                                   const RotationCoords& theta,
                                   const std::vector<double>& eps_list, const ScalarField& q,
                                   double slope_tol_rel) {
  const int n = q.n;
  double ff = far_field_constant(q);
  std::vector<double> norms;
  for (double eps : eps_list) {
    ParamSet A;
    A.lambda = d * std::sqrt(eps);
    A.xi = A.lambda * tau;
    A.a1 = a1;
    A.a2 = a2;
    A.theta = theta;
    ScalarField E = error_field(A, eps, q, ff);
    norms.push_back(weighted_norm(E, WeightedNorm::starstar, eps));
  }
  LogLogFit fit = loglog_fit(eps_list, norms);
  ExpansionReport rep;
  rep.quantity = "error_norm_starstar";
  rep.exponent_target = 0.5 * (n - 2);
  rep.exponent_fitted = fit.exponent;
  rep.coeff_fitted = fit.coeff;
  rep.r2 = fit.r2;
  rep.tolerance = slope_tol_rel;
  rep.fit_ok = fit.r2 >= 0.99;
  rep.pass = rep.fit_ok &&
             std::fabs(fit.exponent - rep.exponent_target) <= slope_tol_rel * rep.exponent_target;
  rep.xs = eps_list;
  rep.values = norms;
  return rep;
}

}  // namespace coron
