#include "coron/experiments.hpp"

#include <cstdio>

namespace coron {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
  std::string out = "experiment,n,k,eps,value,error_estimate,target,tolerance,verdict\n";
  for (const auto& r : rows) {
    out += r.experiment;
    out += ',' + std::to_string(r.n);
    out += ',' + std::to_string(r.k);
    out += ',' + format_double(r.eps);
    out += ',' + format_double(r.value);
    out += ',' + format_double(r.error_estimate);
    out += ',' + (r.has_target ? format_double(r.target) : std::string("-"));
    out += ',' + (r.has_target ? format_double(r.tolerance) : std::string("-"));
    out += ',' + std::string(r.verdict ? "pass" : "fail");
    out += '\n';
  }
  return out;
}

}  // namespace coron
