#include "coron/field.hpp"

#include <cmath>
#include <random>

namespace coron {

double fd_step(const Point& y) { return 1e-4 * (1.0 + norm(y)); }

Point fd_gradient(const std::function<double(const Point&)>& f, const Point& y, double h) {
  if (h == 0.0) h = fd_step(y);
  Point g(y.n);
  Point q = y;
  for (int i = 0; i < y.n; ++i) {
    double yi = y[i];
    q.x[i] = yi + h;
    double fp = f(q);
    q.x[i] = yi - h;
    double fm = f(q);
    q.x[i] = yi;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

double fd_laplacian(const std::function<double(const Point&)>& f, const Point& y, double h) {
  if (h == 0.0) h = fd_step(y);
  double f0 = f(y);
  double acc = 0.0;
  Point q = y;
  for (int i = 0; i < y.n; ++i) {
    double yi = y[i];
    q.x[i] = yi + h;
    double fp = f(q);
    q.x[i] = yi - h;
    double fm = f(q);
    q.x[i] = yi;
    acc += fp + fm - 2.0 * f0;
  }
  return acc / (h * h);
}

ScalarField field_from_value(int n, std::function<double(const Point&)> value) {
  ScalarField f;
  f.n = n;
  f.value = std::move(value);
  auto v = f.value;
  f.gradient = [v](const Point& y) { return fd_gradient(v, y); };
  f.laplacian = [v](const Point& y) { return fd_laplacian(v, y); };
  f.fd_gradient = true;
  f.fd_laplacian = true;
  return f;
}

void install_fd_laplacian(ScalarField& f) {
  auto v = f.value;
  f.laplacian = [v](const Point& y) { return fd_laplacian(v, y); };
  f.fd_laplacian = true;
}

ScalarField field_scale(double c, const ScalarField& f) {
  ScalarField g = f;
  auto val = f.value;
  g.value = [c, val](const Point& y) { return c * val(y); };
  auto grad = f.gradient;
  g.gradient = [c, grad](const Point& y) { return c * grad(y); };
  auto lap = f.laplacian;
  g.laplacian = [c, lap](const Point& y) { return c * lap(y); };
  if (f.hessian) {
    auto hes = f.hessian;
    g.hessian = [c, hes](const Point& y) {
      SqMat m = hes(y);
      for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) m(i, j) *= c;
      return m;
    };
  }
  return g;
}

std::vector<Point> probe_directions(int n, int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  auto next_uniform = [&rng]() {
    return (rng() >> 11) * (1.0 / 9007199254740992.0);  // in [0,1)
  };
  std::vector<Point> dirs;
  while (static_cast<int>(dirs.size()) < count) {
    Point v(n);
    for (int i = 0; i < n; i += 2) {
      double u1 = std::max(next_uniform(), 1e-16), u2 = next_uniform();
      double r = std::sqrt(-2.0 * std::log(u1));
      v[i] = r * std::cos(2.0 * M_PI * u2);
      if (i + 1 < n) v[i + 1] = r * std::sin(2.0 * M_PI * u2);
    }
    double s = norm(v);
    if (s < 1e-8) continue;
    dirs.push_back((1.0 / s) * v);
  }
  return dirs;
}

std::vector<Point> probe_points(int n, int n_radii, int n_dirs, double r_lo, double r_hi,
                                unsigned seed) {
  auto dirs = probe_directions(n, n_dirs, seed);
  std::vector<Point> pts;
  for (int i = 0; i < n_radii; ++i) {
    double t = n_radii == 1 ? 0.0 : double(i) / (n_radii - 1);
    double r = r_lo * std::pow(r_hi / r_lo, t);
    for (const auto& d : dirs) pts.push_back(r * d);
  }
  return pts;
}

ScalarField affine_pullback(const ScalarField& g, const SqMat& rot, const Point& shift) {
  ScalarField f;
  f.n = g.n;
  auto val = g.value;
  auto r = rot;
  auto s = shift;
  f.value = [val, r, s](const Point& x) { return val(r.apply_transposed(x - s)); };
  auto grad = g.gradient;
  f.gradient = [grad, r, s](const Point& x) {
    // grad_x g(R^T(x-s)) = R grad g
    return r.apply(grad(r.apply_transposed(x - s)));
  };
  auto lap = g.laplacian;
  f.laplacian = [lap, r, s](const Point& x) { return lap(r.apply_transposed(x - s)); };
  f.fd_gradient = g.fd_gradient;
  f.fd_laplacian = g.fd_laplacian;
  if (g.hessian) {
    auto hes = g.hessian;
    f.hessian = [hes, r, s](const Point& x) {
      SqMat h = hes(r.apply_transposed(x - s));
      // R H R^T
      SqMat out(h.n);
      for (int i = 0; i < h.n; ++i)
        for (int j = 0; j < h.n; ++j) {
          double acc = 0;
          for (int a = 0; a < h.n; ++a)
            for (int b = 0; b < h.n; ++b) acc += r(i, a) * h(a, b) * r(j, b);
          out(i, j) = acc;
        }
      return out;
    };
  }
  return f;
}

}  // namespace coron
