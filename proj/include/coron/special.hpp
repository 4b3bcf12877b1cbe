#pragma once

#include <cmath>
#include <stdexcept>

namespace coron {

// Dimension of the ambient space. The critical exponent p = (n+2)/(n-2) is
// always derived from n, never stored separately.
struct Dimension {
  int n;
  explicit Dimension(int dim) : n(dim) {
    if (dim < 3) throw std::invalid_argument("Dimension: n >= 3 required");
    if (dim > 6) throw std::invalid_argument("Dimension: n > 6 not supported");
  }
  double p() const { return double(n + 2) / double(n - 2); }
};

// Surface area of the unit sphere S^{n-1} in R^n.
double sphere_area(int n);

// Normalization of the fundamental solution Gamma(x) = gamma_n |x|^{2-n},
// chosen so that -Delta Gamma = delta: gamma_n = 1/((n-2) |S^{n-1}|).
double gamma_n(int n);

// Bubble amplitude alpha_n = [n(n-2)]^{(n-2)/4}.
double alpha_n(int n);

// S_n = (1/n) Int U^{p+1} = (1/2 - 1/(p+1)) Int |grad U|^2, closed form.
double bubble_energy_constant(int n);

// Int_{R^n} U^{p+1} closed form.
double bubble_mass_critical(int n);

// Int_{R^n} U^p closed form (equals alpha_n / gamma_n).
double bubble_mass_p(int n);

}  // namespace coron
