#include "coron/special.hpp"

namespace coron {

double sphere_area(int n) {
  // |S^{n-1}| = 2 pi^{n/2} / Gamma(n/2)
  return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

double gamma_n(int n) { return 1.0 / ((n - 2) * sphere_area(n)); }

double alpha_n(int n) { return std::pow(double(n) * (n - 2), 0.25 * (n - 2)); }

// Int_{R^n} (1+|y|^2)^{-s} dy = pi^{n/2} Gamma(s - n/2) / Gamma(s)
static double radial_power_integral(int n, double s) {
  return std::pow(M_PI, 0.5 * n) * std::tgamma(s - 0.5 * n) / std::tgamma(s);
}

double bubble_mass_critical(int n) {
  // U^{p+1} = alpha_n^{p+1} (1+|y|^2)^{-n}, alpha_n^{p+1} = (n(n-2))^{n/2}
  return std::pow(double(n) * (n - 2), 0.5 * n) * radial_power_integral(n, double(n));
}

double bubble_mass_p(int n) {
  // U^p = alpha_n^p (1+|y|^2)^{-(n+2)/2}
  double p = double(n + 2) / (n - 2);
  return std::pow(alpha_n(n), p) * radial_power_integral(n, 0.5 * (n + 2));
}

double bubble_energy_constant(int n) { return bubble_mass_critical(n) / n; }

}  // namespace coron
