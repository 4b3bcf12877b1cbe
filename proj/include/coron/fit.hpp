#pragma once

#include <functional>
#include <string>
#include <vector>

namespace coron {

// Least-squares fit of log(v) against log(x): v ~ coeff * x^exponent.
struct LogLogFit {
  double exponent = 0.0;
  double coeff = 0.0;
  double r2 = 0.0;
};

LogLogFit loglog_fit(const std::vector<double>& x, const std::vector<double>& v);

// Outcome of one asymptotic claim: measured coefficient, fitted scaling
// exponent, residual quality, and the tolerance verdict.
struct ExpansionReport {
  std::string quantity;
  double exponent_target = 0.0;
  double exponent_fitted = 0.0;
  double coeff_fitted = 0.0;
  double coeff_target = 0.0;  // 0 when the claim has no coefficient part
  double r2 = 1.0;
  double tolerance = 0.0;
  bool fit_ok = true;  // false when R^2 < 0.99 (non-convergence report)
  bool pass = false;
  std::vector<double> xs, values;
};

// Richardson-extrapolated central difference of a scalar function.
double richardson_derivative(const std::function<double(double)>& f, double t, double h);

}  // namespace coron
