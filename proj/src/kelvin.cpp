#include "coron/kelvin.hpp"

#include <cmath>

namespace coron {

void ParamSet::validate(int n) const {
  if (!(lambda > 0.0)) throw std::invalid_argument("ParamSet: lambda > 0 required");
  if (a1 * a1 + a2 * a2 >= 0.25) throw std::invalid_argument("ParamSet: |a| < 1/2 required");
  if (xi.n != n) throw std::invalid_argument("ParamSet: xi dimension mismatch");
  if (theta.size() != 2 * n - 3)
    throw std::invalid_argument("ParamSet: theta must have 2n-3 entries");
}

ScalarField theta_transform(const ParamSet& A, const ScalarField& f) {
  const int n = f.n;
  A.validate(n);
  const double lam = A.lambda;
  const Point xi = A.xi;
  const Point a = A.a_vector(n);
  const double a2 = norm2(a);
  const SqMat rot = rotation_matrix(A.theta, Dimension(n));
  const double pref = std::pow(lam, -0.5 * (n - 2));
  const ScalarField base = f;

  struct Core {
    int n;
    double lam, a2, pref;
    Point xi, a;
    SqMat rot;

    // maps x to (w, t, s, u, y); throws on the singular locus s ~ 0
    void geometry(const Point& x, Point& w, double& t, double& s, Point& u, Point& y) const {
      w = (1.0 / lam) * (x - xi);
      t = norm2(w);
      s = 1.0 - 2.0 * dot(a, w) + a2 * t;
      if (s < 1e-12)
        throw SingularLocusError("theta_transform: evaluation on the singular sphere");
      u = w - t * a;
      y = (1.0 / s) * rot.apply(u);
    }
  };
  Core core{n, lam, a2, pref, xi, a, rot};

  ScalarField out;
  out.n = n;
  auto val = base.value;
  out.value = [core, val](const Point& x) {
    Point w, u, y;
    double t, s;
    core.geometry(x, w, t, s, u, y);
    return core.pref * std::pow(s, 0.5 * (2 - core.n)) * val(y);
  };
  auto grad = base.gradient;
  out.gradient = [core, val, grad](const Point& x) {
    Point w, u, y;
    double t, s;
    core.geometry(x, w, t, s, u, y);
    const int n = core.n;
    double sp = std::pow(s, 0.5 * (2 - n));
    double fv = val(y);
    Point g = grad(y);
    Point h = core.rot.apply_transposed(g);
    Point sigma = (-2.0) * core.a + (2.0 * core.a2) * w;  // grad_w s
    // J^T g with J = d y / d w
    Point jtg = (1.0 / s) * h - (2.0 * dot(core.a, h) / s) * w - (dot(u, h) / (s * s)) * sigma;
    Point dw = (0.5 * (2 - n) * sp / s * fv) * sigma + sp * jtg;
    return (core.pref / core.lam) * dw;
  };
  install_fd_laplacian(out);
  return out;
}

ScalarField q_family(const ParamSet& A, const ScalarField& q) {
  const int n = q.n;
  A.validate(n);
  ParamSet inner = A;
  inner.xi = zero_point(n);
  ScalarField theta_part = theta_transform(inner, q);
  SqMat rot = rotation_matrix(A.theta, Dimension(n));
  ScalarField out = affine_pullback(theta_part, rot, A.xi);
  install_fd_laplacian(out);
  return out;
}

namespace {

// value + gradient pair built from Q (and its Hessian when available)
struct Deriv {
  std::function<double(const Point&)> value;
  std::function<Point(const Point&)> gradient;
  bool analytic_gradient = true;
};

Deriv make_z_basic(int alpha, const ScalarField& q) {
  const int n = q.n;
  Deriv z;
  bool has_h = q.has_hessian();
  if (alpha == 0) {
    auto val = q.value;
    auto grad = q.gradient;
    z.value = [val, grad, n](const Point& y) { return 0.5 * (n - 2) * val(y) + dot(grad(y), y); };
    if (has_h) {
      auto hes = q.hessian;
      z.gradient = [grad, hes, n](const Point& y) {
        return 0.5 * n * grad(y) + hes(y).apply(y);
      };
    }
  } else {
    int i = alpha - 1;
    auto grad = q.gradient;
    z.value = [grad, i](const Point& y) { return grad(y)[i]; };
    if (has_h) {
      auto hes = q.hessian;
      z.gradient = [hes, i, n](const Point& y) {
        SqMat h = hes(y);
        Point g(n);
        for (int j = 0; j < n; ++j) g[j] = h(i, j);
        return g;
      };
    }
  }
  if (!z.gradient) {
    auto val = z.value;
    z.gradient = [val](const Point& y) { return fd_gradient(val, y); };
    z.analytic_gradient = false;
  }
  return z;
}

// -y_j d_i Q + y_i d_j Q (0-based plane indices)
Deriv make_z_rotation(int i, int j, const ScalarField& q) {
  Deriv zi = make_z_basic(i + 1, q);
  Deriv zj = make_z_basic(j + 1, q);
  Deriv z;
  auto vi = zi.value, vj = zj.value;
  z.value = [vi, vj, i, j](const Point& y) { return -y[j] * vi(y) + y[i] * vj(y); };
  auto gi = zi.gradient, gj = zj.gradient;
  int n = q.n;
  z.gradient = [vi, vj, gi, gj, i, j, n](const Point& y) {
    Point g = (-y[j]) * gi(y) + y[i] * gj(y);
    g[j] -= vi(y);
    g[i] += vj(y);
    return g;
  };
  z.analytic_gradient = zi.analytic_gradient && zj.analytic_gradient;
  return z;
}

// -2 y_i z0 + |y|^2 z_{i+1} (Kelvin-conjugated translation, 0-based i)
Deriv make_z_kelvin(int i, const ScalarField& q) {
  Deriv z0 = make_z_basic(0, q);
  Deriv zt = make_z_basic(i + 1, q);
  Deriv z;
  auto v0 = z0.value, vt = zt.value;
  z.value = [v0, vt, i](const Point& y) { return -2.0 * y[i] * v0(y) + norm2(y) * vt(y); };
  auto g0 = z0.gradient, gt = zt.gradient;
  z.gradient = [v0, vt, g0, gt, i](const Point& y) {
    Point g = (-2.0 * y[i]) * g0(y) + norm2(y) * gt(y);
    g[i] += -2.0 * v0(y);
    g += (2.0 * vt(y)) * y;
    return g;
  };
  z.analytic_gradient = z0.analytic_gradient && zt.analytic_gradient;
  return z;
}

}  // namespace

ScalarField kernel_field(int alpha, const ScalarField& q) {
  const int n = q.n;
  if (alpha < 0 || alpha >= 3 * n) throw std::out_of_range("kernel_field: alpha out of range");
  Deriv z;
  if (alpha <= n) {
    z = make_z_basic(alpha, q);
  } else if (alpha == n + 1) {
    z = make_z_rotation(0, 1, q);
  } else if (alpha == n + 2) {
    z = make_z_kelvin(0, q);
  } else if (alpha == n + 3) {
    z = make_z_kelvin(1, q);
  } else if (alpha <= 2 * n + 1) {
    int l = alpha - n - 1;  // l = 3..n, 1-based coordinate
    z = make_z_rotation(0, l - 1, q);
  } else {
    int l = alpha - 2 * n + 1;  // l = 3..n
    z = make_z_rotation(1, l - 1, q);
  }
  ScalarField f;
  f.n = n;
  f.value = z.value;
  f.gradient = z.gradient;
  f.fd_gradient = !z.analytic_gradient;
  install_fd_laplacian(f);
  return f;
}

IdentityCheckReport derivative_identity_check(const ScalarField& q,
                                              const std::vector<Point>& probes, double tol) {
  const int n = q.n;
  struct Direction {
    std::string name;
    int field_index;
    std::function<ParamSet(double)> at;
  };
  std::vector<Direction> dirs;
  auto base = [n](double) { return ParamSet::identity(n); };
  (void)base;
  dirs.push_back({"lambda", 0, [n](double t) {
                    ParamSet A = ParamSet::identity(n);
                    A.lambda = 1.0 + t;
                    return A;
                  }});
  for (int j = 1; j <= n; ++j)
    dirs.push_back({"xi_" + std::to_string(j), j, [n, j](double t) {
                      ParamSet A = ParamSet::identity(n);
                      A.xi[j - 1] = t;
                      return A;
                    }});
  dirs.push_back({"a_1", n + 2, [n](double t) {
                    ParamSet A = ParamSet::identity(n);
                    A.a1 = t;
                    return A;
                  }});
  dirs.push_back({"a_2", n + 3, [n](double t) {
                    ParamSet A = ParamSet::identity(n);
                    A.a2 = t;
                    return A;
                  }});
  // theta order: (th_12, th_13, ..., th_1n, th_23, ..., th_2n)
  dirs.push_back({"theta_12", n + 1, [n](double t) {
                    ParamSet A = ParamSet::identity(n);
                    A.theta.theta[0] = t;
                    return A;
                  }});
  for (int l = 3; l <= n; ++l) {
    dirs.push_back({"theta_1" + std::to_string(l), n + l + 1, [n, l](double t) {
                      ParamSet A = ParamSet::identity(n);
                      A.theta.theta[l - 2] = t;
                      return A;
                    }});
    dirs.push_back({"theta_2" + std::to_string(l), 2 * n + l - 1, [n, l](double t) {
                      ParamSet A = ParamSet::identity(n);
                      A.theta.theta[n - 2 + (l - 2)] = t;
                      return A;
                    }});
  }

  IdentityCheckReport report;
  const double h = 1e-5;
  double sup_q = 0;
  for (const auto& y : probes) sup_q = std::max(sup_q, std::fabs(q.value(y)));
  for (const auto& dir : dirs) {
    ScalarField z = kernel_field(dir.field_index, q);
    // Richardson central differences of Theta in the parameter
    auto field_at = [&](double t) { return theta_transform(dir.at(t), q); };
    ScalarField fp = field_at(h), fm = field_at(-h);
    ScalarField fp2 = field_at(0.5 * h), fm2 = field_at(-0.5 * h);
    double sup_z = 0, err_plus = 0, err_minus = 0;
    for (const auto& y : probes) {
      double c1 = (fp.value(y) - fm.value(y)) / (2.0 * h);
      double c2 = (fp2.value(y) - fm2.value(y)) / h;
      double d = (4.0 * c2 - c1) / 3.0;
      double zv = z.value(y);
      sup_z = std::max(sup_z, std::fabs(zv));
      err_plus = std::max(err_plus, std::fabs(d - zv));
      err_minus = std::max(err_minus, std::fabs(d + zv));
    }
    IdentityCheckRow row;
    row.parameter = dir.name;
    row.field_index = dir.field_index;
    row.sign = err_plus <= err_minus ? 1 : -1;
    // identically-zero fields (rotations of a radial profile) are compared
    // at the scale of Q itself
    double scale = std::max(sup_z, 1e-3 * sup_q);
    row.rel_err = std::min(err_plus, err_minus) / std::max(scale, 1e-300);
    row.pass = row.rel_err < tol;
    report.all_pass = report.all_pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

void kernel_values(int n, const Point& y, double qv, const Point& qg, double* out) {
  double r2 = norm2(y);
  out[0] = 0.5 * (n - 2) * qv + dot(qg, y);
  for (int i = 0; i < n; ++i) out[1 + i] = qg[i];
  out[n + 1] = -y[1] * qg[0] + y[0] * qg[1];
  out[n + 2] = -2.0 * y[0] * out[0] + r2 * out[1];
  out[n + 3] = -2.0 * y[1] * out[0] + r2 * out[2];
  for (int l = 3; l <= n; ++l) {
    out[n + l + 1] = -y[l - 1] * out[1] + y[0] * out[l];
    out[2 * n + l - 1] = -y[l - 1] * out[2] + y[1] * out[l];
  }
}

ScalarField projected_kernel(int j, const ParamSet& A, double eps, const ScalarField& q) {
  if (!(eps > 0.0)) throw std::invalid_argument("projected_kernel: eps > 0 required");
  const double sq = std::sqrt(eps);
  ParamSet tilde = A;
  tilde.lambda = A.lambda / sq;
  tilde.xi = (1.0 / sq) * A.xi;
  return theta_transform(tilde, kernel_field(j, q));
}

double kernel_linearized_residual(const ScalarField& q, const ScalarField& z,
                                  const std::vector<Point>& probes) {
  const int n = q.n;
  const double p = Dimension(n).p();
  double sup = 0;
  for (const auto& y : probes) {
    double lap = z.laplacian(y);
    double qv = q.value(y);
    double res = lap + p * std::pow(std::fabs(qv), p - 1.0) * z.value(y);
    sup = std::max(sup, std::fabs(res) * std::pow(1.0 + norm(y), n + 2));
  }
  return sup;
}

}  // namespace coron
