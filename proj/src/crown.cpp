#include "coron/crown.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

namespace coron {

namespace {

// One Aubin-Talenti bubble s * alpha_n (mu / (mu^2 + |y-xi|^2))^{(n-2)/2}.
struct BubbleTerm {
  double sign;
  double mu;
  Point xi;
};

struct BubbleSum {
  int n;
  double alpha;
  double p;
  std::vector<BubbleTerm> terms;

  double value(const Point& y) const {
    double acc = 0;
    for (const auto& t : terms) {
      double rho2 = norm2(y - t.xi);
      acc += t.sign * std::pow(t.mu / (t.mu * t.mu + rho2), 0.5 * (n - 2));
    }
    return alpha * acc;
  }

  Point gradient(const Point& y) const {
    Point g(y.n);
    for (const auto& t : terms) {
      Point d = y - t.xi;
      double den = t.mu * t.mu + norm2(d);
      double c = -t.sign * alpha * (n - 2) * std::pow(t.mu, 0.5 * (n - 2)) *
                 std::pow(den, -0.5 * n);
      g += c * d;
    }
    return g;
  }

  SqMat hess(const Point& y) const {
    SqMat h(y.n);
    for (const auto& t : terms) {
      Point d = y - t.xi;
      double den = t.mu * t.mu + norm2(d);
      double c = -t.sign * alpha * (n - 2) * std::pow(t.mu, 0.5 * (n - 2));
      double a0 = c * std::pow(den, -0.5 * n);
      double a1 = -c * n * std::pow(den, -0.5 * (n + 2));
      for (int i = 0; i < y.n; ++i) {
        h(i, i) += a0;
        for (int j = 0; j < y.n; ++j) h(i, j) += a1 * d[i] * d[j];
      }
    }
    return h;
  }

  // Delta of each bubble is -(bubble)^p in closed form.
  double laplacian(const Point& y) const {
    double acc = 0;
    double ap = std::pow(alpha, p);
    for (const auto& t : terms) {
      double rho2 = norm2(y - t.xi);
      double u = std::pow(t.mu / (t.mu * t.mu + rho2), 0.5 * (n + 2));
      acc += -t.sign * ap * u;
    }
    return acc;
  }

  // Delta Q + |Q|^{p-1} Q, analytic.
  double pde_defect(const Point& y) const {
    double v = value(y);
    return laplacian(y) + std::pow(std::fabs(v), p - 1.0) * v;
  }
};

ScalarField wrap(std::shared_ptr<BubbleSum> b) {
  ScalarField f;
  f.n = b->n;
  f.value = [b](const Point& y) { return b->value(y); };
  f.gradient = [b](const Point& y) { return b->gradient(y); };
  f.laplacian = [b](const Point& y) { return b->laplacian(y); };
  f.hessian = [b](const Point& y) { return b->hess(y); };
  return f;
}

}  // namespace

MuBalance solve_mu(Dimension dim, int k) {
  if (k < 2) throw std::invalid_argument("solve_mu: k >= 2 required");
  const double e = 0.5 * (dim.n - 2);
  double s = 0;
  for (int j = 2; j <= k; ++j) {
    double th = 2.0 * M_PI * (j - 1) / k;
    s += std::pow(1.0 - std::cos(th), -e);
  }
  double mu = std::pow(s, -1.0 / e);
  // Newton polish on g(mu) = s mu^e - 1
  for (int it = 0; it < 4; ++it) {
    double g = s * std::pow(mu, e) - 1.0;
    double dg = s * e * std::pow(mu, e - 1.0);
    mu -= g / dg;
  }
  MuBalance out;
  out.mu = mu;
  out.residual = std::fabs(s * std::pow(mu, e) - 1.0);
  out.in_regime = (mu > 0.0 && mu < 1.0);
  return out;
}

CrownSpec CrownSpec::make(Dimension dim, int k, int k_min) {
  if (k < k_min) throw std::invalid_argument("CrownSpec: k below k_min");
  MuBalance mb = solve_mu(dim, k);
  if (!mb.in_regime) throw std::invalid_argument("CrownSpec: mu out of (0,1), k too small");
  if (mb.residual > 1e-12) throw std::runtime_error("CrownSpec: balance residual too large");
  return CrownSpec{dim, k, mb.mu};
}

ScalarField bubble(Dimension dim) {
  auto b = std::make_shared<BubbleSum>();
  b->n = dim.n;
  b->alpha = alpha_n(dim.n);
  b->p = dim.p();
  b->terms.push_back({1.0, 1.0, zero_point(dim.n)});
  return wrap(std::move(b));
}

std::vector<Point> crown_centers(const CrownSpec& spec) {
  std::vector<Point> c;
  double r = std::sqrt(1.0 - spec.mu * spec.mu);
  for (int j = 1; j <= spec.k; ++j) {
    double th = 2.0 * M_PI * (j - 1) / spec.k;
    Point xi(spec.dim.n);
    xi[0] = r * std::cos(th);
    xi[1] = r * std::sin(th);
    c.push_back(xi);
  }
  return c;
}

static std::shared_ptr<BubbleSum> crown_sum(const CrownSpec& spec) {
  auto b = std::make_shared<BubbleSum>();
  b->n = spec.dim.n;
  b->alpha = alpha_n(spec.dim.n);
  b->p = spec.dim.p();
  b->terms.push_back({1.0, 1.0, zero_point(spec.dim.n)});
  for (const auto& xi : crown_centers(spec)) b->terms.push_back({-1.0, spec.mu, xi});
  return b;
}

ScalarField crown(const CrownSpec& spec) { return wrap(crown_sum(spec)); }

ScalarField crown_pde_defect(const CrownSpec& spec) {
  auto b = crown_sum(spec);
  ScalarField f;
  f.n = b->n;
  f.value = [b](const Point& y) { return b->pde_defect(y); };
  f.gradient = [b](const Point& y) {
    return fd_gradient([b](const Point& q) { return b->pde_defect(q); }, y);
  };
  f.fd_gradient = true;
  install_fd_laplacian(f);
  return f;
}

double crown_residual_budget(const CrownSpec& spec, const std::vector<Point>& probes) {
  auto b = crown_sum(spec);
  double sup = 0;
  for (const auto& y : probes) {
    double w = std::pow(1.0 + norm(y), spec.dim.n + 2);
    sup = std::max(sup, std::fabs(b->pde_defect(y)) * w);
  }
  return sup;
}

double kelvin_defect(const ScalarField& q, const std::vector<Point>& samples) {
  double sup = 0;
  for (const auto& y : samples) {
    double r2 = norm2(y);
    if (r2 == 0.0) throw std::invalid_argument("kelvin_defect: sample at origin");
    Point inv = (1.0 / r2) * y;
    double qv = q.value(y);
    double kv = std::pow(r2, 0.5 * (2 - q.n)) * q.value(inv);
    sup = std::max(sup, std::fabs(qv - kv) / (1.0 + std::fabs(qv)));
  }
  return sup;
}

double far_field_constant(const ScalarField& q) {
  auto dirs = probe_directions(q.n, 32, 777);
  auto level = [&](double radius) {
    double acc = 0;
    for (const auto& d : dirs) acc += std::pow(radius, q.n - 2) * q.value(radius * d);
    return acc / dirs.size();
  };
  double f1 = level(1e2), f2 = level(1e3), f3 = level(1e4);
  // error ~ c R^{-2}: two Richardson extrapolants with ratio 10
  double e12 = (100.0 * f2 - f1) / 99.0;
  double e23 = (100.0 * f3 - f2) / 99.0;
  double spread = std::fabs(e12 - e23) / std::max(std::fabs(e23), 1e-300);
  if (spread > 1e-3)
    throw EstimationError("far_field_constant: extrapolation did not converge");
  return e23;
}

std::pair<double, double> sign_radii(const ScalarField& q) {
  Point origin = zero_point(q.n);
  if (q.value(origin) <= 0.0) throw DegenerateProfileError("sign_radii: Q(0) <= 0");

  std::vector<Point> dirs = probe_directions(q.n, 24, 999);
  dirs.push_back(unit_vector(q.n, 0));  // the ray through xi_1 is the worst one

  auto bisect = [&](const Point& d, double ra, double rb) {
    double fa = q.value(ra * d);
    for (int it = 0; it < 80; ++it) {
      double rm = 0.5 * (ra + rb);
      double fm = q.value(rm * d);
      if ((fa > 0) == (fm > 0)) {
        ra = rm;
        fa = fm;
      } else {
        rb = rm;
      }
    }
    return 0.5 * (ra + rb);
  };

  const int ngrid = 800;
  const double rmax = 4.0;
  double r1 = std::numeric_limits<double>::infinity();
  double r2 = -std::numeric_limits<double>::infinity();
  bool any_change = false;
  for (const auto& d : dirs) {
    double prev_r = 1e-6;
    double prev_v = q.value(prev_r * d);
    double first = 0, last = 0;
    bool seen = false;
    for (int i = 1; i <= ngrid; ++i) {
      double r = rmax * double(i) / ngrid;
      double v = q.value(r * d);
      if ((v > 0) != (prev_v > 0)) {
        double rc = bisect(d, prev_r, r);
        if (!seen) first = rc;
        last = rc;
        seen = true;
      }
      prev_r = r;
      prev_v = v;
    }
    if (seen) {
      any_change = true;
      r1 = std::min(r1, first);
      r2 = std::max(r2, last);
    }
  }
  if (!any_change) throw DegenerateProfileError("sign_radii: no sign change detected");
  return {r1, r2};
}

}  // namespace coron
