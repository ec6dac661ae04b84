#include "depi/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace depi {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145818;
constexpr double kInv8Ln2 = 1.0 / (8.0 * kLn2);

void require_unit_interval(double x, const char* who) {
  if (!(x >= 0.0) || !(x <= 1.0)) {
    throw std::domain_error(std::string(who) + ": argument outside [0, 1]");
  }
}

void require_nonnegative(double c, const char* who) {
  if (!(c >= 0.0) || !std::isfinite(c)) {
    throw std::domain_error(std::string(who) + ": argument must be finite and >= 0");
  }
}

double clamp_tiny_negative(double v) {
  return (v < 0.0 && v > -1e-12) ? 0.0 : v;
}

/// Golden-section line minimization; tolerant of kinks, returns the best
/// point ever evaluated (value never above either bracket endpoint).
template <typename F>
std::pair<double, double> golden_minimize(F&& f, double lo, double hi, double xtol) {
  constexpr double kInvPhi = 0.61803398874989484820;
  double best_x = lo;
  double best_f = f(lo);
  double fhi = f(hi);
  if (fhi < best_f) {
    best_f = fhi;
    best_x = hi;
  }
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > xtol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = f(d);
    }
    if (fc < best_f) {
      best_f = fc;
      best_x = c;
    }
    if (fd < best_f) {
      best_f = fd;
      best_x = d;
    }
  }
  return {best_x, best_f};
}

/// Indices of grid local minima (non-strict), best value first, capped.
std::vector<std::size_t> minimal_brackets(const std::vector<double>& f,
                                          std::size_t cap) {
  std::vector<std::size_t> idx;
  double grid_min = *std::min_element(f.begin(), f.end());
  for (std::size_t i = 0; i < f.size(); ++i) {
    bool left_ok = (i == 0) || f[i] <= f[i - 1];
    bool right_ok = (i + 1 == f.size()) || f[i] <= f[i + 1];
    if (left_ok && right_ok && f[i] <= grid_min + 1e-6) {
      // plateau interiors add nothing; keep the first index of equal runs
      if (i > 0 && f[i] == f[i - 1] && !idx.empty() && f[idx.back()] == f[i]) {
        continue;
      }
      idx.push_back(i);
    }
  }
  std::stable_sort(idx.begin(), idx.end(), [&f](std::size_t a, std::size_t b) {
    return f[a] < f[b];
  });
  if (idx.size() > cap) idx.resize(cap);
  return idx;
}

}  // namespace

double h2(double x) {
  require_unit_interval(x, "h2");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double nonspiky_term(double x) {
  require_unit_interval(x, "nonspiky_term");
  double r = 1.0 - x;
  double m = std::max(r, std::max(4.0 * x - 2.0, 0.0));
  return r * r * m * m * kInv8Ln2;
}

double l_xy(double x, double y) {
  require_unit_interval(x, "l_xy");
  require_unit_interval(y, "l_xy");
  const double big_a = std::max(4.0 * y - 2.0, 0.0);
  const double big_b = std::max(4.0 * x - 2.0, 0.0);
  const double s = 2.0 - x - y;
  const double wa = (1.0 - x) * (1.0 - x);
  const double wb = (1.0 - y) * (1.0 - y);
  double a;
  double b;
  if (big_a + big_b >= s) {
    a = big_a;
    b = big_b;
  } else {
    // active line a + b = s; zero-weight coordinates soak up the slack
    a = s * wb / (wa + wb);
    b = s * wa / (wa + wb);
    if (a < big_a) {
      a = big_a;
      b = s - big_a;
    } else if (b < big_b) {
      b = big_b;
      a = s - big_b;
    }
  }
  return (wa * a * a + wb * b * b) * kInv8Ln2;
}

double l_xy_grid_oracle(double x, double y, double step) {
  require_unit_interval(x, "l_xy_grid_oracle");
  require_unit_interval(y, "l_xy_grid_oracle");
  if (!(step > 0.0)) throw std::domain_error("l_xy_grid_oracle: step <= 0");
  const double big_a = std::max(4.0 * y - 2.0, 0.0);
  const double big_b = std::max(4.0 * x - 2.0, 0.0);
  const double s = 2.0 - x - y;
  const double wa = (1.0 - x) * (1.0 - x);
  const double wb = (1.0 - y) * (1.0 - y);
  const long long n = std::llround(4.0 / step);
  // nondecreasing in b, so only the smallest feasible grid b per a matters
  long long ia0 = static_cast<long long>(std::ceil(big_a / step - 1e-9));
  if (ia0 < 0) ia0 = 0;
  double best = std::numeric_limits<double>::infinity();
  for (long long ia = ia0; ia <= n; ++ia) {
    double a = static_cast<double>(ia) * step;
    double bmin = std::max(big_b, s - a);
    long long ib = static_cast<long long>(std::ceil(bmin / step - 1e-9));
    if (ib < 0) ib = 0;
    if (ib > n) continue;
    double b = static_cast<double>(ib) * step;
    double v = wa * a * a + wb * b * b;
    if (v < best) best = v;
  }
  return best * kInv8Ln2;
}

namespace {

/// Shared dense tables of h2 and nonspiky_term on the uniform grid i/n,
/// so curve sweeps do not recompute transcendentals per row.
struct IidGridTable {
  long long n;
  std::vector<double> h2v;
  std::vector<double> nsv;

  explicit IidGridTable(long long n_) : n(n_) {
    h2v.resize(static_cast<std::size_t>(n) + 1);
    nsv.resize(static_cast<std::size_t>(n) + 1);
    for (long long i = 0; i <= n; ++i) {
      double x = static_cast<double>(i) / static_cast<double>(n);
      h2v[static_cast<std::size_t>(i)] = h2(x);
      nsv[static_cast<std::size_t>(i)] = nonspiky_term(x);
    }
  }
};

const IidGridTable& iid_table_1e4() {
  static const IidGridTable table(10000);
  return table;
}

const IidGridTable& iid_table_1e6() {
  static const IidGridTable table(1000000);
  return table;
}

double iid_objective(double c, double x) {
  return std::max(c * x - h2(x), nonspiky_term(x));
}

double scan_iid_grid(double c, const IidGridTable& t, long long* arg_min) {
  double best = std::numeric_limits<double>::infinity();
  long long best_i = 0;
  const double n = static_cast<double>(t.n);
  for (long long i = 0; i <= t.n; ++i) {
    double x = static_cast<double>(i) / n;
    double f = std::max(c * x - t.h2v[static_cast<std::size_t>(i)],
                        t.nsv[static_cast<std::size_t>(i)]);
    if (f < best) {
      best = f;
      best_i = i;
    }
  }
  if (arg_min) *arg_min = best_i;
  return best;
}

}  // namespace

BoundValue g_iid(double c) {
  require_nonnegative(c, "g_iid");
  const IidGridTable& t = iid_table_1e4();
  const double n = static_cast<double>(t.n);
  std::vector<double> f(static_cast<std::size_t>(t.n) + 1);
  for (long long i = 0; i <= t.n; ++i) {
    double x = static_cast<double>(i) / n;
    f[static_cast<std::size_t>(i)] = std::max(c * x - t.h2v[static_cast<std::size_t>(i)],
                                              t.nsv[static_cast<std::size_t>(i)]);
  }
  auto obj = [c](double x) { return iid_objective(c, x); };
  double best_v = std::numeric_limits<double>::infinity();
  double best_x = 0.0;
  for (std::size_t i : minimal_brackets(f, 8)) {
    double lo = (i == 0) ? 0.0 : (static_cast<double>(i) - 1.0) / n;
    double hi = (i == f.size() - 1) ? 1.0 : (static_cast<double>(i) + 1.0) / n;
    auto [x, v] = golden_minimize(obj, lo, hi, 1e-10);
    if (v < best_v) {
      best_v = v;
      best_x = x;
    }
  }
  BoundValue out;
  out.value = clamp_tiny_negative(best_v);
  out.minimizer_x = best_x;
  return out;
}

double g_iid_grid_oracle(double c, double step) {
  require_nonnegative(c, "g_iid_grid_oracle");
  if (!(step > 0.0)) throw std::domain_error("g_iid_grid_oracle: step <= 0");
  long long n = std::llround(1.0 / step);
  if (n == 1000000) {
    return clamp_tiny_negative(scan_iid_grid(c, iid_table_1e6(), nullptr));
  }
  if (n == 10000) {
    return clamp_tiny_negative(scan_iid_grid(c, iid_table_1e4(), nullptr));
  }
  double best = std::numeric_limits<double>::infinity();
  for (long long i = 0; i <= n; ++i) {
    double x = static_cast<double>(i) / static_cast<double>(n);
    best = std::min(best, iid_objective(c, x));
  }
  return clamp_tiny_negative(best);
}

namespace {

/// Closed-form l on precomputed per-axis data; mirrors l_xy exactly.
inline double l_from_parts(double wa, double big_b, double wb, double big_a,
                           double s) {
  double a;
  double b;
  if (big_a + big_b >= s) {
    a = big_a;
    b = big_b;
  } else {
    double wsum = wa + wb;
    a = s * wb / wsum;
    b = s * wa / wsum;
    if (a < big_a) {
      a = big_a;
      b = s - big_a;
    } else if (b < big_b) {
      b = big_b;
      a = s - big_b;
    }
  }
  return (wa * a * a + wb * b * b) * kInv8Ln2;
}

struct NiidAxis {
  std::vector<double> coord;   // grid coordinates
  std::vector<double> spiky;   // d*x - h2(x) (or c*y - h2(y))
  std::vector<double> weight;  // (1-x)^2
  std::vector<double> floor;   // (4x-2)^+
};

NiidAxis make_axis(double slope, double lo, double hi, long long n) {
  NiidAxis axis;
  axis.coord.resize(static_cast<std::size_t>(n) + 1);
  axis.spiky.resize(static_cast<std::size_t>(n) + 1);
  axis.weight.resize(static_cast<std::size_t>(n) + 1);
  axis.floor.resize(static_cast<std::size_t>(n) + 1);
  for (long long i = 0; i <= n; ++i) {
    double t = static_cast<double>(i) / static_cast<double>(n);
    double x = lo + t * (hi - lo);
    x = std::min(1.0, std::max(0.0, x));
    std::size_t k = static_cast<std::size_t>(i);
    axis.coord[k] = x;
    axis.spiky[k] = slope * x - h2(x);
    axis.weight[k] = (1.0 - x) * (1.0 - x);
    axis.floor[k] = std::max(4.0 * x - 2.0, 0.0);
  }
  return axis;
}

struct GridMin {
  double value;
  double x;
  double y;
};

double niid_objective(double c, double d, double x, double y) {
  double spiky = d * x - h2(x) + c * y - h2(y);
  return std::max(spiky, l_xy(x, y));
}

GridMin scan_niid_grid(double c, double d, double x_lo, double x_hi, double y_lo,
                       double y_hi, long long n) {
  NiidAxis ax = make_axis(d, x_lo, x_hi, n);
  NiidAxis ay = make_axis(c, y_lo, y_hi, n);
  GridMin best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  for (std::size_t i = 0; i < ax.coord.size(); ++i) {
    const double xi = ax.coord[i];
    const double sxi = ax.spiky[i];
    const double wai = ax.weight[i];
    const double bbi = ax.floor[i];
    for (std::size_t j = 0; j < ay.coord.size(); ++j) {
      double s = 2.0 - xi - ay.coord[j];
      double lv = l_from_parts(wai, bbi, ay.weight[j], ay.floor[j], s);
      double f = std::max(sxi + ay.spiky[j], lv);
      if (f < best.value) {
        best = {f, xi, ay.coord[j]};
      }
    }
  }
  return best;
}

}  // namespace

BoundValue g_niid(double c, double d) {
  require_nonnegative(c, "g_niid");
  require_nonnegative(d, "g_niid");
  // base grid, then two zoomed grids, then a coordinate golden polish
  GridMin best = scan_niid_grid(c, d, 0.0, 1.0, 0.0, 1.0, 1000);
  for (double window : {2e-3, 2e-5}) {
    GridMin z = scan_niid_grid(c, d, best.x - window, best.x + window,
                               best.y - window, best.y + window, 400);
    if (z.value < best.value) best = z;
  }
  for (int round = 0; round < 6; ++round) {
    double w = 1e-4;
    auto fx = [&](double x) { return niid_objective(c, d, x, best.y); };
    auto [x, vx] = golden_minimize(fx, std::max(0.0, best.x - w),
                                   std::min(1.0, best.x + w), 1e-10);
    if (vx < best.value) {
      best.value = vx;
      best.x = x;
    }
    auto fy = [&](double y) { return niid_objective(c, d, best.x, y); };
    auto [y, vy] = golden_minimize(fy, std::max(0.0, best.y - w),
                                   std::min(1.0, best.y + w), 1e-10);
    if (vy < best.value) {
      best.value = vy;
      best.y = y;
    }
  }
  BoundValue out;
  out.value = clamp_tiny_negative(0.5 * best.value);
  out.minimizer_x = best.x;
  out.minimizer_y = best.y;
  return out;
}

double g_niid_grid_oracle(double c, double d, double step) {
  require_nonnegative(c, "g_niid_grid_oracle");
  require_nonnegative(d, "g_niid_grid_oracle");
  if (!(step > 0.0)) throw std::domain_error("g_niid_grid_oracle: step <= 0");
  long long n = std::llround(1.0 / step);
  GridMin best = scan_niid_grid(c, d, 0.0, 1.0, 0.0, 1.0, n);
  return clamp_tiny_negative(0.5 * best.value);
}

namespace {

double cond_objective(double big_g, double delta) {
  return std::max(big_g - h2(delta), delta * delta * big_g);
}

}  // namespace

BoundValue g_cond(double c) {
  require_nonnegative(c, "g_cond");
  const double big_g = g_niid(c, c).value;
  const long long n = 50000;  // delta step 1e-5 on [0, 1/2]
  std::vector<double> f(static_cast<std::size_t>(n) + 1);
  for (long long i = 0; i <= n; ++i) {
    double delta = 0.5 * static_cast<double>(i) / static_cast<double>(n);
    f[static_cast<std::size_t>(i)] = cond_objective(big_g, delta);
  }
  auto obj = [big_g](double delta) { return cond_objective(big_g, delta); };
  double best_v = std::numeric_limits<double>::infinity();
  double best_d = 0.0;
  for (std::size_t i : minimal_brackets(f, 8)) {
    double lo = (i == 0) ? 0.0 : 0.5 * (static_cast<double>(i) - 1.0) / static_cast<double>(n);
    double hi = (i == f.size() - 1)
                    ? 0.5
                    : 0.5 * (static_cast<double>(i) + 1.0) / static_cast<double>(n);
    auto [delta, v] = golden_minimize(obj, lo, hi, 1e-10);
    if (v < best_v) {
      best_v = v;
      best_d = delta;
    }
  }
  BoundValue out;
  out.value = clamp_tiny_negative(best_v);
  out.minimizer_x = best_d;
  out.minimizer_delta = best_d;
  return out;
}

double g_cond_grid_oracle(double c, double step) {
  require_nonnegative(c, "g_cond_grid_oracle");
  if (!(step > 0.0)) throw std::domain_error("g_cond_grid_oracle: step <= 0");
  const double big_g = g_niid(c, c).value;
  long long n = std::llround(0.5 / step);
  double best = std::numeric_limits<double>::infinity();
  for (long long i = 0; i <= n; ++i) {
    double delta = 0.5 * static_cast<double>(i) / static_cast<double>(n);
    best = std::min(best, cond_objective(big_g, delta));
  }
  return clamp_tiny_negative(best);
}

std::vector<double> make_grid(double lo, double hi, double step) {
  if (!(step > 0.0)) throw std::domain_error("make_grid: step <= 0");
  std::vector<double> grid;
  for (long long i = 0;; ++i) {
    double v = lo + static_cast<double>(i) * step;
    if (v > hi + 0.5 * step) break;
    grid.push_back(v);
  }
  return grid;
}

BoundCurve g_iid_curve(const std::vector<double>& cs, bool with_oracle) {
  BoundCurve curve;
  curve.inputs = cs;
  curve.outputs.reserve(cs.size());
  for (double c : cs) {
    BoundValue v = g_iid(c);
    if (with_oracle) {
      v.oracle_gap = std::abs(v.value - g_iid_grid_oracle(c));
    }
    curve.outputs.push_back(v);
  }
  return curve;
}

BoundCurve g_cond_curve(const std::vector<double>& cs, bool with_oracle) {
  BoundCurve curve;
  curve.inputs = cs;
  curve.outputs.reserve(cs.size());
  for (double c : cs) {
    BoundValue v = g_cond(c);
    if (with_oracle) {
      v.oracle_gap = std::abs(v.value - g_cond_grid_oracle(c));
    }
    curve.outputs.push_back(v);
  }
  return curve;
}

BoundCurve2D g_niid_curve(const std::vector<std::pair<double, double>>& cds,
                          bool with_oracle) {
  BoundCurve2D curve;
  curve.inputs = cds;
  curve.outputs.reserve(cds.size());
  for (auto [c, d] : cds) {
    BoundValue v = g_niid(c, d);
    if (with_oracle) {
      v.oracle_gap = std::abs(v.value - g_niid_grid_oracle(c, d));
    }
    curve.outputs.push_back(v);
  }
  return curve;
}

std::string format_g12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

void write_curve_csv(std::ostream& os, const BoundCurve& curve) {
  os << "c,g,minimizer_x,oracle_gap\n";
  for (std::size_t i = 0; i < curve.inputs.size(); ++i) {
    const BoundValue& v = curve.outputs[i];
    os << format_g12(curve.inputs[i]) << ',' << format_g12(v.value) << ','
       << format_g12(v.minimizer_x) << ',' << format_g12(v.oracle_gap) << '\n';
  }
}

void write_curve2d_csv(std::ostream& os, const BoundCurve2D& curve) {
  os << "c,d,g,min_x,min_y,oracle_gap\n";
  for (std::size_t i = 0; i < curve.inputs.size(); ++i) {
    const BoundValue& v = curve.outputs[i];
    os << format_g12(curve.inputs[i].first) << ','
       << format_g12(curve.inputs[i].second) << ',' << format_g12(v.value) << ','
       << format_g12(v.minimizer_x) << ',' << format_g12(v.minimizer_y.value_or(0.0))
       << ',' << format_g12(v.oracle_gap) << '\n';
  }
}

void write_curve_json(std::ostream& os, const BoundCurve& curve) {
  os << "[";
  for (std::size_t i = 0; i < curve.inputs.size(); ++i) {
    const BoundValue& v = curve.outputs[i];
    if (i) os << ",";
    os << "\n  {\"c\": " << format_g12(curve.inputs[i])
       << ", \"g\": " << format_g12(v.value)
       << ", \"minimizer_x\": " << format_g12(v.minimizer_x)
       << ", \"oracle_gap\": " << format_g12(v.oracle_gap) << "}";
  }
  os << "\n]\n";
}

void write_curve2d_json(std::ostream& os, const BoundCurve2D& curve) {
  os << "[";
  for (std::size_t i = 0; i < curve.inputs.size(); ++i) {
    const BoundValue& v = curve.outputs[i];
    if (i) os << ",";
    os << "\n  {\"c\": " << format_g12(curve.inputs[i].first)
       << ", \"d\": " << format_g12(curve.inputs[i].second)
       << ", \"g\": " << format_g12(v.value)
       << ", \"min_x\": " << format_g12(v.minimizer_x)
       << ", \"min_y\": " << format_g12(v.minimizer_y.value_or(0.0))
       << ", \"oracle_gap\": " << format_g12(v.oracle_gap) << "}";
  }
  os << "\n]\n";
}

}  // namespace depi
