#pragma once

#include "coron/crown.hpp"
#include "coron/quadrature.hpp"

namespace coron {

// sup over a radial grid of (1 + |y|^{n-2}) |z_alpha(y)| for each kernel
// field, with a doubled-radius stability figure.
struct KernelDecayRow {
  int alpha = 0;
  double sup = 0.0;
  double sup_doubled = 0.0;  // same sup on the doubled radius range
  double rel_change = 0.0;
};
std::vector<KernelDecayRow> kernel_decay_report(const CrownSpec& spec,
                                                const std::vector<double>& radii);

// Empirical constant of Int_{R^n} |y-z|^{2-n} (1+|z|)^{-2-a} dz <= C (1+|y|)^{-a}.
// The kernel singularity is absorbed by polar coordinates about y. The
// uniform-constant regime is a < n-2; at a = n-2 the product grows like
// log |y| and rows are flagged.
struct ConvolutionRow {
  double y_norm = 0.0;
  double integral = 0.0;
  double product = 0.0;  // integral * weight
  double quad_error = 0.0;
};
struct ConvolutionReport {
  std::vector<ConvolutionRow> rows;
  double empirical_constant = 0.0;  // max product
  double last_decade_drift = 0.0;   // relative change across the final decade
  bool uniform_regime = true;
};
ConvolutionReport convolution_bound_a(double a_exp, const std::vector<double>& y_norms, int n,
                                      const QuadratureSpec& spec);

// Same for Int_{B(0,1)} |y-z|^{2-n} |z|^{b-n} dz <= C |y|^{-(n-2-b)}, swept
// toward y = 0. Uniform regime is b < n-2; the b -> n-2 and b -> n borders
// are flagged. Also reports the proof's direction constant
// sup_e Int |e-w|^{2-n} |w|^{b-n} dw over a direction sample.
ConvolutionReport convolution_bound_b(double b_exp, const std::vector<double>& y_norms, int n,
                                      const QuadratureSpec& spec);

}  // namespace coron
