#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace depi {

/// Result of one bound evaluation: the minimum value plus where the
/// minimizer landed. oracle_gap is |refined - pure-grid oracle| when the
/// oracle was run, NaN otherwise.
struct BoundValue {
  double value = 0.0;
  double minimizer_x = 0.0;
  std::optional<double> minimizer_y;
  std::optional<double> minimizer_delta;
  double oracle_gap = std::numeric_limits<double>::quiet_NaN();
};

/// Binary entropy in bits, h2(0) = h2(1) = 0.
/// Throws std::domain_error outside [0, 1].
double h2(double x);

/// (1-x)^2 ((1-x) v (4x-2)^+)^2 / (8 ln 2): the flat-distribution branch of
/// the iid gap bound. Zero iff x = 1.
double nonspiky_term(double x);

/// min of ((1-x)^2 a^2 + (1-y)^2 b^2) / (8 ln 2) over
/// a >= (4y-2)^+, b >= (4x-2)^+, a + b >= 2-x-y, solved in closed form by
/// corner analysis. Symmetric; zero iff (x,y) = (1,1).
double l_xy(double x, double y);

/// Independent check of l_xy: scans the (a, b) grid on [0, 4]^2 at the
/// given step (the b axis is reduced exactly, the objective being
/// nondecreasing in each variable).
double l_xy_grid_oracle(double x, double y, double step = 1e-4);

/// Gap bound for a sum of two iid variables with entropy c:
/// min over x in [0,1] of max(c x - h2(x), nonspiky_term(x)).
/// Grid step 1e-4 plus golden-section refinement of the minimal brackets.
BoundValue g_iid(double c);

/// Pure dense-grid evaluation of the same minimum (no refinement).
double g_iid_grid_oracle(double c, double step = 1e-6);

/// Gap bound for independent variables with entropies (c, d):
/// (1/2) min over [0,1]^2 of max(d x - h2(x) + c y - h2(y), l_xy(x, y)).
/// Base grid step 1e-3 with two zoomed grid levels and a coordinate
/// golden-section polish. Symmetric in (c, d).
BoundValue g_niid(double c, double d);

double g_niid_grid_oracle(double c, double d, double step = 1e-4);

/// Conditional-entropy gap bound:
/// min over delta in [0, 1/2] of max(G - h2(delta), delta^2 G) with
/// G = g_niid(c, c). Grid step 1e-5 plus golden-section refinement.
BoundValue g_cond(double c);

/// Pure delta-grid evaluation; shares the refined G = g_niid(c, c).
double g_cond_grid_oracle(double c, double step = 1e-7);

/// Sampled 1-D bound curve (used for CSV emission and monotonicity tests).
struct BoundCurve {
  std::vector<double> inputs;
  std::vector<BoundValue> outputs;
};

/// Sampled 2-D bound surface.
struct BoundCurve2D {
  std::vector<std::pair<double, double>> inputs;
  std::vector<BoundValue> outputs;
};

BoundCurve g_iid_curve(const std::vector<double>& cs, bool with_oracle);
BoundCurve g_cond_curve(const std::vector<double>& cs, bool with_oracle);
BoundCurve2D g_niid_curve(const std::vector<std::pair<double, double>>& cds,
                          bool with_oracle);

/// Inclusive grid lo, lo+step, ..., up to hi (within half a step).
std::vector<double> make_grid(double lo, double hi, double step);

/// CSV emitters; all numbers printed with 12 significant digits.
/// 1-D header: c,g,minimizer_x,oracle_gap
/// 2-D header: c,d,g,min_x,min_y,oracle_gap
void write_curve_csv(std::ostream& os, const BoundCurve& curve);
void write_curve2d_csv(std::ostream& os, const BoundCurve2D& curve);
void write_curve_json(std::ostream& os, const BoundCurve& curve);
void write_curve2d_json(std::ostream& os, const BoundCurve2D& curve);

/// Formats a double with 12 significant digits (the numeric output
/// contract of the CLI surfaces).
std::string format_g12(double v);

}  // namespace depi
