#include "coron/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "coron/special.hpp"

namespace coron {

namespace {

// ---------------------------------------------------------------------------
// Adaptive Genz-Malik cubature (degree 7 rule with embedded degree 5) over an
// axis-aligned box in parameter space. Deterministic: cells carry sequential
// ids, the refinement queue breaks ties by id, and the final reduction runs
// in id order.
// ---------------------------------------------------------------------------

struct ParamIntegrand {
  int d = 0;  // box dimension
  int m = 1;  // number of components
  std::function<void(const double*, double*)> eval;
};

struct Cell {
  long id = 0;
  int depth = 0;
  int split_axis = 0;
  bool alive = true;
  std::array<double, kMaxDim> center{};
  std::array<double, kMaxDim> half{};
  std::vector<double> val;  // degree-7 estimate per component
  std::vector<double> err;  // |deg7 - deg5| per component
};

struct GmRule {
  double l2, l3, l4, l5;
  double w1, w2, w3, w4, w5;
  double e1, e2, e3, e4;
  double ratio;  // l2^2 / l3^2

  explicit GmRule(int d) {
    l2 = std::sqrt(9.0 / 70.0);
    l3 = std::sqrt(9.0 / 10.0);
    l4 = l3;
    l5 = std::sqrt(9.0 / 19.0);
    double dd = d;
    w1 = (12824.0 - 9120.0 * dd + 400.0 * dd * dd) / 19683.0;
    w2 = 980.0 / 6561.0;
    w3 = (1820.0 - 400.0 * dd) / 19683.0;
    w4 = 200.0 / 19683.0;
    w5 = 6859.0 / 19683.0 / std::pow(2.0, dd);
    e1 = (729.0 - 950.0 * dd + 50.0 * dd * dd) / 729.0;
    e2 = 245.0 / 486.0;
    e3 = (265.0 - 100.0 * dd) / 1458.0;
    e4 = 25.0 / 729.0;
    ratio = (l2 * l2) / (l3 * l3);
  }
};

// Applies the rule on one cell: fills val/err and picks the split axis.
// Returns the number of integrand evaluations.
long apply_rule(const ParamIntegrand& f, const GmRule& rule, Cell& c) {
  const int d = f.d, m = f.m;
  double vol = 1.0;
  for (int i = 0; i < d; ++i) vol *= 2.0 * c.half[i];

  std::vector<double> out(m), sum7(m, 0.0), sum5(m, 0.0);
  std::array<double, kMaxDim> u;
  for (int i = 0; i < d; ++i) u[i] = c.center[i];

  long evals = 0;
  auto feval = [&](double* dst) {
    f.eval(u.data(), dst);
    ++evals;
  };

  std::vector<double> f0(m);
  feval(f0.data());
  for (int q = 0; q < m; ++q) {
    sum7[q] += rule.w1 * f0[q];
    sum5[q] += rule.e1 * f0[q];
  }

  std::array<double, kMaxDim> fourth_diff{};
  std::vector<double> s2(m), s3(m);
  for (int i = 0; i < d; ++i) {
    std::fill(s2.begin(), s2.end(), 0.0);
    std::fill(s3.begin(), s3.end(), 0.0);
    const double ci = c.center[i], hi = c.half[i];
    for (double sgn : {-1.0, 1.0}) {
      u[i] = ci + sgn * rule.l2 * hi;
      feval(out.data());
      for (int q = 0; q < m; ++q) s2[q] += out[q];
      u[i] = ci + sgn * rule.l3 * hi;
      feval(out.data());
      for (int q = 0; q < m; ++q) s3[q] += out[q];
    }
    u[i] = ci;
    double diff = 0.0;
    for (int q = 0; q < m; ++q) {
      sum7[q] += rule.w2 * s2[q] + rule.w3 * s3[q];
      sum5[q] += rule.e2 * s2[q] + rule.e3 * s3[q];
      diff += std::fabs(s2[q] - 2.0 * f0[q] - rule.ratio * (s3[q] - 2.0 * f0[q]));
    }
    fourth_diff[i] = diff;
  }

  std::vector<double> s4(m, 0.0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      for (double si : {-1.0, 1.0})
        for (double sj : {-1.0, 1.0}) {
          u[i] = c.center[i] + si * rule.l4 * c.half[i];
          u[j] = c.center[j] + sj * rule.l4 * c.half[j];
          feval(out.data());
          for (int q = 0; q < m; ++q) s4[q] += out[q];
        }
      u[i] = c.center[i];
      u[j] = c.center[j];
    }

  std::vector<double> s5(m, 0.0);
  const long corners = 1L << d;
  for (long mask = 0; mask < corners; ++mask) {
    for (int i = 0; i < d; ++i) {
      double sgn = (mask >> i) & 1 ? 1.0 : -1.0;
      u[i] = c.center[i] + sgn * rule.l5 * c.half[i];
    }
    feval(out.data());
    for (int q = 0; q < m; ++q) s5[q] += out[q];
  }
  for (int i = 0; i < d; ++i) u[i] = c.center[i];

  c.val.assign(m, 0.0);
  c.err.assign(m, 0.0);
  for (int q = 0; q < m; ++q) {
    double v7 = vol * (sum7[q] + rule.w4 * s4[q] + rule.w5 * s5[q]);
    double v5 = vol * (sum5[q] + rule.e4 * s4[q]);
    c.val[q] = v7;
    c.err[q] = std::fabs(v7 - v5);
  }

  // split along the axis with the largest scaled fourth difference
  int axis = 0;
  double best = -1.0;
  for (int i = 0; i < d; ++i) {
    double score = fourth_diff[i] * c.half[i];
    if (score > best + 1e-30) {
      best = score;
      axis = i;
    }
  }
  c.split_axis = axis;
  return evals;
}

struct AdaptOutcome {
  std::vector<double> value;
  std::vector<double> error;
  long evals = 0;
  int depth = 0;
  bool converged = false;
};

struct HeapEntry {
  double err;
  long id;
  bool operator<(const HeapEntry& o) const {
    if (err != o.err) return err < o.err;
    return id < o.id;  // larger id wins ties; any fixed rule works
  }
};

AdaptOutcome adapt(const ParamIntegrand& f, const std::array<double, kMaxDim>& lo,
                   const std::array<double, kMaxDim>& hi, const QuadratureSpec& spec,
                   const std::vector<double>& axis0_breaks) {
  const int d = f.d, m = f.m;
  const int max_depth = std::min(spec.max_depth, 40);
  GmRule rule(d);

  std::vector<Cell> cells;
  std::priority_queue<HeapEntry> queue;
  long evals = 0;

  auto push_cell = [&](Cell&& c) {
    c.id = static_cast<long>(cells.size());
    evals += apply_rule(f, rule, c);
    double e = 0.0;
    for (double x : c.err) e += x;
    cells.push_back(std::move(c));
    queue.push({e, cells.back().id});
  };

  // initial cells: axis 0 split at the requested break points
  std::vector<double> knots{lo[0]};
  for (double b : axis0_breaks)
    if (b > lo[0] + 1e-14 && b < hi[0] - 1e-14) knots.push_back(b);
  knots.push_back(hi[0]);
  std::sort(knots.begin(), knots.end());
  for (size_t s = 0; s + 1 < knots.size(); ++s) {
    Cell c;
    c.depth = 0;
    for (int i = 0; i < d; ++i) {
      c.center[i] = 0.5 * (lo[i] + hi[i]);
      c.half[i] = 0.5 * (hi[i] - lo[i]);
    }
    c.center[0] = 0.5 * (knots[s] + knots[s + 1]);
    c.half[0] = 0.5 * (knots[s + 1] - knots[s]);
    push_cell(std::move(c));
  }

  std::vector<double> tot_val(m, 0.0), tot_err(m, 0.0);
  for (const auto& c : cells)
    for (int q = 0; q < m; ++q) {
      tot_val[q] += c.val[q];
      tot_err[q] += c.err[q];
    }

  auto converged = [&]() {
    for (int q = 0; q < m; ++q)
      if (tot_err[q] > std::max(spec.abs_tol, spec.rel_tol * std::fabs(tot_val[q])))
        return false;
    return true;
  };

  int max_depth_seen = 0;
  while (!converged() && !queue.empty()) {
    if (static_cast<long>(cells.size()) > spec.max_cells) break;
    HeapEntry top = queue.top();
    queue.pop();
    if (!cells[top.id].alive) continue;
    if (cells[top.id].depth >= max_depth) continue;  // stuck cell, keep its estimate
    cells[top.id].alive = false;
    // copy before push_cell: growing the vector invalidates references
    const int ax = cells[top.id].split_axis;
    const int child_depth = cells[top.id].depth + 1;
    const std::array<double, kMaxDim> pc = cells[top.id].center;
    const std::array<double, kMaxDim> ph = cells[top.id].half;
    for (int q = 0; q < m; ++q) {
      tot_val[q] -= cells[top.id].val[q];
      tot_err[q] -= cells[top.id].err[q];
    }
    for (double side : {-1.0, 1.0}) {
      Cell child;
      child.depth = child_depth;
      child.center = pc;
      child.half = ph;
      child.half[ax] = 0.5 * ph[ax];
      child.center[ax] = pc[ax] + side * child.half[ax];
      max_depth_seen = std::max(max_depth_seen, child.depth);
      push_cell(std::move(child));
      const Cell& cc = cells.back();
      for (int q = 0; q < m; ++q) {
        tot_val[q] += cc.val[q];
        tot_err[q] += cc.err[q];
      }
    }
  }

  // deterministic final reduction in id order (Kahan)
  AdaptOutcome out;
  out.value.assign(m, 0.0);
  out.error.assign(m, 0.0);
  std::vector<double> comp(m, 0.0);
  for (const auto& c : cells) {
    if (!c.alive) continue;
    for (int q = 0; q < m; ++q) {
      double y = c.val[q] - comp[q];
      double t = out.value[q] + y;
      comp[q] = (t - out.value[q]) - y;
      out.value[q] = t;
      out.error[q] += c.err[q];
    }
  }
  out.evals = evals;
  out.depth = max_depth_seen;
  out.converged = true;
  for (int q = 0; q < m; ++q)
    if (out.error[q] > std::max(spec.abs_tol, spec.rel_tol * std::fabs(out.value[q])))
      out.converged = false;
  return out;
}

// ---------------------------------------------------------------------------
// Hyperspherical parametrization. Coordinates are permuted so that the
// azimuthal plane of the map is (y1, y2); that is where the dihedral group
// acts. Parameters: u = (r, phi_1..phi_{n-2}, psi).
// ---------------------------------------------------------------------------

enum class RadialKind { linear, logr, powr };

struct PolarMap {
  int n;
  RadialKind radial = RadialKind::linear;
  double power = 1.0;  // for RadialKind::powr, r = u^{1/power}
  Point center;
  double sym_mult = 1.0;

  // fills y and returns the full Jacobian weight (volume element x symmetry)
  double map(const double* u, Point& y) const {
    double r, dr;
    switch (radial) {
      case RadialKind::logr:
        r = std::exp(u[0]);
        dr = r;
        break;
      case RadialKind::powr:
        r = std::pow(u[0], 1.0 / power);
        dr = (1.0 / power) * std::pow(u[0], 1.0 / power - 1.0);
        break;
      default:
        r = u[0];
        dr = 1.0;
    }
    double jac = std::pow(r, n - 1) * dr * sym_mult;
    double s = 1.0;
    for (int j = 0; j < n - 2; ++j) {
      double phi = u[1 + j];
      jac *= std::pow(std::sin(phi), n - 2 - j);
      y[2 + j] = r * s * std::cos(phi);
      s *= std::sin(phi);
    }
    double psi = u[n - 1];
    y[0] = r * s * std::cos(psi);
    y[1] = r * s * std::sin(psi);
    for (int i = 0; i < n; ++i) y[i] += center[i];
    return jac;
  }
};

struct PieceSpec {
  double r_lo, r_hi;
  RadialKind radial = RadialKind::linear;
  double power = 1.0;
  bool kelvin_image = false;  // integrate |z|^{-2n} f(z/|z|^2) instead of f
};

std::vector<IntegralResult> integrate_piece(const MultiFn& f, int m, int n,
                                            const PieceSpec& piece, const Point& center,
                                            const QuadratureSpec& spec) {
  PolarMap pm;
  pm.n = n;
  pm.radial = piece.radial;
  pm.power = piece.power;
  pm.center = center;

  auto to_param = [&](double r) {
    switch (piece.radial) {
      case RadialKind::logr:
        return std::log(r);
      case RadialKind::powr:
        return std::pow(r, piece.power);
      default:
        return r;
    }
  };
  std::array<double, kMaxDim> lo{}, hi{};
  lo[0] = to_param(piece.r_lo);
  hi[0] = to_param(piece.r_hi);

  double mult = 1.0;
  double polar_hi = M_PI, psi_hi = 2.0 * M_PI;
  if (spec.symmetry == Symmetry::full_even) {
    polar_hi = 0.5 * M_PI;
    psi_hi = 0.5 * M_PI;
    mult = std::pow(2.0, n);
  } else if (spec.symmetry == Symmetry::dihedral_k) {
    polar_hi = 0.5 * M_PI;
    psi_hi = M_PI / spec.sym_k;
    mult = 2.0 * spec.sym_k * std::pow(2.0, n - 2);
  }
  pm.sym_mult = mult;
  for (int j = 0; j < n - 2; ++j) {
    lo[1 + j] = 0.0;
    hi[1 + j] = polar_hi;
  }
  lo[n - 1] = 0.0;
  hi[n - 1] = psi_hi;

  ParamIntegrand pi;
  pi.d = n;
  pi.m = m;
  const bool image = piece.kelvin_image;
  pi.eval = [&f, pm, m, n, image](const double* u, double* out) {
    Point y(n);
    double jac = pm.map(u, y);
    if (image) {
      double r2 = norm2(y);
      if (r2 < 1e-120) {
        std::fill(out, out + m, 0.0);
        return;
      }
      Point w = (1.0 / r2) * y;
      f(w, out);
      double j2 = jac * std::pow(r2, -double(n));
      for (int q = 0; q < m; ++q) {
        out[q] *= j2;
        if (!std::isfinite(out[q])) out[q] = 0.0;
      }
    } else {
      f(y, out);
      for (int q = 0; q < m; ++q) {
        out[q] *= jac;
        if (!std::isfinite(out[q])) out[q] = 0.0;
      }
    }
  };

  std::vector<double> breaks;
  for (double b : spec.radial_breaks) breaks.push_back(to_param(b));

  AdaptOutcome res = adapt(pi, lo, hi, spec, breaks);
  std::vector<IntegralResult> out(m);
  for (int q = 0; q < m; ++q) {
    out[q].value = res.value[q];
    out[q].error = res.error[q];
    out[q].evals = res.evals;
    out[q].depth = res.depth;
  }
  if (!res.converged)
    throw QuadratureError("quadrature: tolerance not reached", res.value, res.error);
  return out;
}

std::vector<IntegralResult> combine(const std::vector<IntegralResult>& a,
                                    const std::vector<IntegralResult>& b) {
  std::vector<IntegralResult> out(a.size());
  for (size_t q = 0; q < a.size(); ++q) {
    out[q].value = a[q].value + b[q].value;
    out[q].error = a[q].error + b[q].error;
    out[q].evals = a[q].evals + b[q].evals;
    out[q].depth = std::max(a[q].depth, b[q].depth);
  }
  return out;
}

}  // namespace

std::vector<IntegralResult> integrate_rn_multi(const MultiFn& f, int m, int n,
                                               const QuadratureSpec& spec) {
  if (n < 3 || n > kMaxDim) throw std::invalid_argument("integrate_rn: bad dimension");
  const Point origin = zero_point(n);
  if (spec.exterior == Exterior::kelvin_map) {
    double r = spec.fold_radius;
    PieceSpec direct{0.0, r, RadialKind::linear, 1.0, false};
    PieceSpec image{0.0, 1.0 / r, RadialKind::linear, 1.0, true};
    auto a = integrate_piece(f, m, n, direct, origin, spec);
    auto b = integrate_piece(f, m, n, image, origin, spec);
    return combine(a, b);
  }
  PieceSpec direct{0.0, spec.cutoff_radius, RadialKind::linear, 1.0, false};
  auto res = integrate_piece(f, m, n, direct, origin, spec);
  // tail allowance, assuming decay at least |y|^{-(n+2)} beyond the cutoff
  auto dirs = probe_directions(n, 16, 4242);
  std::vector<double> out(m), acc(m, 0.0);
  for (const auto& d : dirs) {
    f(spec.cutoff_radius * d, out.data());
    for (int q = 0; q < m; ++q) acc[q] += std::fabs(out[q]);
  }
  double shell = sphere_area(n);
  for (int q = 0; q < m; ++q) {
    double mean = acc[q] / dirs.size();
    res[q].error += 0.5 * mean * shell * std::pow(spec.cutoff_radius, n);
  }
  return res;
}

IntegralResult integrate_rn(const std::function<double(const Point&)>& f, int n,
                            const QuadratureSpec& spec) {
  MultiFn mf = [&f](const Point& y, double* out) { out[0] = f(y); };
  return integrate_rn_multi(mf, 1, n, spec)[0];
}

std::vector<IntegralResult> integrate_annulus_multi(const MultiFn& f, int m, int n, double eps,
                                                    const QuadratureSpec& spec) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("integrate_annulus: eps in (0,1)");
  PieceSpec piece{eps, 1.0, RadialKind::logr, 1.0, false};
  return integrate_piece(f, m, n, piece, zero_point(n), spec);
}

IntegralResult integrate_annulus(const std::function<double(const Point&)>& f, int n, double eps,
                                 const QuadratureSpec& spec) {
  MultiFn mf = [&f](const Point& y, double* out) { out[0] = f(y); };
  return integrate_annulus_multi(mf, 1, n, eps, spec)[0];
}

IntegralResult integrate_ball(const std::function<double(const Point&)>& f, int n,
                              const Point& center, double r_lo, double r_hi,
                              const QuadratureSpec& spec) {
  MultiFn mf = [&f](const Point& y, double* out) { out[0] = f(y); };
  PieceSpec piece{r_lo, r_hi, RadialKind::linear, 1.0, false};
  QuadratureSpec s = spec;
  s.symmetry = Symmetry::none;  // shells about arbitrary centers have none
  return integrate_piece(mf, 1, n, piece, center, s)[0];
}

IntegralResult integrate_shell_log(const std::function<double(const Point&)>& f, int n,
                                   const Point& center, double r_lo, double r_hi,
                                   const QuadratureSpec& spec) {
  MultiFn mf = [&f](const Point& y, double* out) { out[0] = f(y); };
  PieceSpec piece{r_lo, r_hi, RadialKind::logr, 1.0, false};
  QuadratureSpec s = spec;
  s.symmetry = Symmetry::none;
  return integrate_piece(mf, 1, n, piece, center, s)[0];
}

IntegralResult integrate_ball_power(const std::function<double(const Point&)>& f, int n,
                                    const Point& center, double r_hi, double power,
                                    const QuadratureSpec& spec) {
  if (!(power > 0.0)) throw std::invalid_argument("integrate_ball_power: power > 0");
  MultiFn mf = [&f](const Point& y, double* out) { out[0] = f(y); };
  PieceSpec piece{0.0, r_hi, RadialKind::powr, power, false};
  QuadratureSpec s = spec;
  s.symmetry = Symmetry::none;
  return integrate_piece(mf, 1, n, piece, center, s)[0];
}

double weighted_norm(const ScalarField& f, WeightedNorm which, double eps, double sigma,
                     int n_radii, int n_dirs) {
  if (n_radii < 2 || n_dirs < 1) throw std::invalid_argument("weighted_norm: empty probe grid");
  const int n = f.n;
  auto dirs = probe_directions(n, n_dirs, 31337);

  auto sup_over = [&](double r_lo, double r_hi, int count, auto&& weight_fn) {
    double sup = 0.0;
    for (int i = 0; i < count; ++i) {
      double t = count == 1 ? 0.0 : double(i) / (count - 1);
      double r = r_lo * std::pow(r_hi / r_lo, t);
      for (const auto& d : dirs) {
        Point y = r * d;
        sup = std::max(sup, weight_fn(y, r));
      }
    }
    return sup;
  };

  double s_eps = std::sqrt(eps);
  // the two regions are open: keep samples strictly off |y| = 1
  const double in_hi = 1.0 - 1e-12, out_lo = 1.0 + 1e-12;
  switch (which) {
    case WeightedNorm::starstar: {
      double inner = sup_over(s_eps, in_hi, n_radii / 2, [&](const Point& y, double r) {
        return std::pow(r, n - 2) * std::fabs(f.value(y));
      });
      double outer = sup_over(out_lo, 1.0 / s_eps, n_radii / 2, [&](const Point& y, double r) {
        return (1.0 + std::pow(r, 4)) * std::fabs(f.value(y));
      });
      return inner + outer;
    }
    case WeightedNorm::star: {
      if (n == 3) {
        return sup_over(s_eps, 1.0 / s_eps, n_radii, [&](const Point& y, double r) {
          double g = norm(f.gradient(y));
          return (1.0 + r) * std::fabs(f.value(y)) + (1.0 + r * r) * g;
        });
      }
      double alpha = (n == 4) ? sigma : double(n - 4);
      double beta = (n == 4) ? 2.0 - sigma : 2.0;
      double inner = sup_over(s_eps, in_hi, n_radii / 2, [&](const Point& y, double r) {
        double g = norm(f.gradient(y));
        return std::pow(r, alpha) * std::fabs(f.value(y)) + std::pow(r, alpha + 1.0) * g;
      });
      double outer = sup_over(out_lo, 1.0 / s_eps, n_radii / 2, [&](const Point& y, double r) {
        double g = norm(f.gradient(y));
        return (1.0 + std::pow(r, beta)) * std::fabs(f.value(y)) +
               (1.0 + std::pow(r, beta + 1.0)) * g;
      });
      return inner + outer;
    }
    case WeightedNorm::fundamental: {
      double sup = std::fabs(f.value(zero_point(n)));
      return std::max(sup, sup_over(1e-3, 1e3, n_radii, [&](const Point& y, double r) {
                        return (1.0 + std::pow(r, n - 2)) * std::fabs(f.value(y));
                      }));
    }
  }
  return 0.0;
}

}  // namespace coron
