#pragma once

// Test-side oracles, independent of the library's integration path.

#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

// 15-point Gauss-Kronrod pair on [-1,1] (QUADPACK constants).
inline const double kXgk[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                               0.741531185599394, 0.586087235467691, 0.405845151377397,
                               0.207784955007898, 0.0};
inline const double kWgk[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                               0.140653259715525, 0.169004726639267, 0.190350578064785,
                               0.204432940075298, 0.209482141084728};
inline const double kWg[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                              0.417959183673469};

struct Gk {
  double value, error;
};

inline Gk gk15(const std::function<double(double)>& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fk = 0, fg = 0;
  double fc = f(c);
  fk += kWgk[7] * fc;
  fg += kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double fp = f(c + h * kXgk[i]);
    double fm = f(c - h * kXgk[i]);
    fk += kWgk[i] * (fp + fm);
    if (i % 2 == 1) fg += kWg[i / 2] * (fp + fm);
  }
  return {h * fk, std::fabs(h * (fk - fg))};
}

// plain adaptive bisection to rel 1e-13
inline double adaptive_1d(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-13) {
  struct Seg {
    double a, b, val, err;
  };
  std::vector<Seg> segs;
  auto mk = [&](double x, double y) {
    Gk g = gk15(f, x, y);
    return Seg{x, y, g.value, g.error};
  };
  segs.push_back(mk(a, b));
  for (int it = 0; it < 20000; ++it) {
    double total = 0, err = 0;
    size_t worst = 0;
    double werr = -1;
    for (size_t i = 0; i < segs.size(); ++i) {
      total += segs[i].val;
      err += segs[i].err;
      if (segs[i].err > werr) {
        werr = segs[i].err;
        worst = i;
      }
    }
    if (err <= tol * std::max(1.0, std::fabs(total))) break;
    Seg s = segs[worst];
    segs.erase(segs.begin() + worst);
    double m = 0.5 * (s.a + s.b);
    segs.push_back(mk(s.a, m));
    segs.push_back(mk(m, s.b));
  }
  double total = 0;
  for (const auto& s : segs) total += s.val;
  return total;
}

// Int_{R^n} g(|y|) dy = |S^{n-1}| Int_0^inf r^{n-1} g(r) dr, truncated where g decays fast
inline double radial_integral(int n, const std::function<double(double)>& g, double rmax = 2e4) {
  double area = 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
  auto h = [&](double r) { return std::pow(r, n - 1) * g(r); };
  return area * (adaptive_1d(h, 0.0, 1.0) + adaptive_1d(h, 1.0, 100.0) +
                 adaptive_1d(h, 100.0, rmax));
}

// Int_{R^n} (1+|y|^2)^{-s} dy
inline double power_integral(int n, double s) {
  return std::pow(M_PI, 0.5 * n) * std::tgamma(s - 0.5 * n) / std::tgamma(s);
}

}  // namespace oracles
