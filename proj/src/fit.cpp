#include "coron/fit.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace coron {

LogLogFit loglog_fit(const std::vector<double>& x, const std::vector<double>& v) {
  if (x.size() != v.size() || x.size() < 2)
    throw std::invalid_argument("loglog_fit: need matching lists, length >= 2");
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (int i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(std::fabs(v[i]) > 0.0))
      throw std::invalid_argument("loglog_fit: nonpositive data");
    double lx = std::log(x[i]), ly = std::log(std::fabs(v[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
  }
  double det = n * sxx - sx * sx;
  LogLogFit fit;
  fit.exponent = (n * sxy - sx * sy) / det;
  double intercept = (sy - fit.exponent * sx) / n;
  fit.coeff = std::exp(intercept);
  double ss_tot = syy - sy * sy / n;
  double ss_res = 0;
  for (int i = 0; i < n; ++i) {
    double pred = intercept + fit.exponent * std::log(x[i]);
    double d = std::log(std::fabs(v[i])) - pred;
    ss_res += d * d;
  }
  fit.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

double richardson_derivative(const std::function<double(double)>& f, double t, double h) {
  auto central = [&](double step) { return (f(t + step) - f(t - step)) / (2.0 * step); };
  double d1 = central(h);
  double d2 = central(0.5 * h);
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace coron
