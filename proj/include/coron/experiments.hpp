#pragma once

#include <string>
#include <vector>

#include "coron/quadrature.hpp"

namespace coron {

// One standardized result row shared by the CLI emitters and the acceptance
// suite: experiment, n, k, eps, value, error_estimate, target, tolerance,
// verdict.
struct ResultRow {
  std::string experiment;
  int n = 0;
  int k = 0;
  double eps = 0.0;
  double value = 0.0;
  double error_estimate = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  bool has_target = false;
  bool verdict = true;
};

struct RunConfig {
  int n = 4;
  std::vector<int> k_list{8, 16, 32};
  std::vector<double> eps_list{1e-2, 1e-3, 1e-4, 1e-5};
  double rel_tol = 1e-7;
  double abs_tol = 1e-12;
  double sigma = 0.1;
  double q_factor = 0.75;  // q = q_factor * n in the appendix rate fits
  double conv_a = 0.5;     // exponents for the convolution sweeps
  double conv_b = 0.5;
  std::string profile = "bubble";  // "bubble" or "crown"
  int crown_k = 8;

  QuadratureSpec quad() const {
    QuadratureSpec s;
    s.rel_tol = rel_tol;
    s.abs_tol = abs_tol;
    return s;
  }
};

std::vector<ResultRow> run_constants(const RunConfig& cfg);
std::vector<ResultRow> run_crown_energy(const RunConfig& cfg);
std::vector<ResultRow> run_gram(const RunConfig& cfg);
std::vector<ResultRow> run_projection(const RunConfig& cfg);
std::vector<ResultRow> run_expansion(const RunConfig& cfg);
std::vector<ResultRow> run_reduced(const RunConfig& cfg);
std::vector<ResultRow> run_residual(const RunConfig& cfg);
std::vector<ResultRow> run_bounds(const RunConfig& cfg);
std::vector<ResultRow> run_kernel(const RunConfig& cfg);

// CSV serialization with the standardized columns; fixed formatting so that
// identical configs produce byte-identical files.
std::string rows_to_csv(const std::vector<ResultRow>& rows);
std::string format_double(double v);

}  // namespace coron
