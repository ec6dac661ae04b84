#include "depi/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>

#include "depi/bounds.hpp"

namespace depi {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145818;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

TrialReport finish(std::string name, std::string digest, double lhs, double rhs,
                   double margin, double slack, Clock::time_point start) {
  TrialReport r;
  r.check_name = std::move(name);
  r.input_digest = std::move(digest);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = margin;
  r.pass = margin >= -slack;
  r.elapsed_seconds = seconds_since(start);
  return r;
}

std::string digest_of(const std::string& payload) {
  return detail::fnv1a_hex(payload);
}

std::string num17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

bool supports_overlap(const Pmf& a, const Pmf& b) {
  std::int64_t lo = std::max(a.min_support(), b.min_support());
  std::int64_t hi = std::min(a.max_support(), b.max_support());
  for (std::int64_t k = lo; k <= hi; ++k) {
    if (a.at(k) > 0.0 && b.at(k) > 0.0) return true;
  }
  return false;
}

}  // namespace

TrialReport check_theorem1(const Pmf& p, double slack, std::size_t conv_cap) {
  auto start = Clock::now();
  double c = entropy(p);
  double lhs = entropy(convolve(p, p, conv_cap)) - c;
  double rhs = g_iid(c).value;
  return finish("theorem1", digest_of("theorem1|" + p.to_json_string()), lhs, rhs,
                lhs - rhs, slack, start);
}

TrialReport check_theorem2(const Pmf& p, const Pmf& q, double slack,
                           std::size_t conv_cap) {
  auto start = Clock::now();
  double c = entropy(p);
  double d = entropy(q);
  double lhs = entropy(convolve(p, q, conv_cap)) - 0.5 * (c + d);
  double rhs = g_niid(c, d).value;
  return finish("theorem2",
                digest_of("theorem2|" + p.to_json_string() + "|" + q.to_json_string()),
                lhs, rhs, lhs - rhs, slack, start);
}

TrialReport check_theorem3(const ConditionalPair& cp_a, const ConditionalPair& cp_b,
                           double slack, std::size_t conv_cap) {
  auto start = Clock::now();
  if (cp_a.label_count() > 2 || cp_b.label_count() > 2) {
    throw std::domain_error("check_theorem3: label support must be <= 2");
  }
  double ca = conditional_entropy(cp_a);
  double cb = conditional_entropy(cp_b);
  if (std::abs(ca - cb) > 1e-9) {
    throw std::domain_error("check_theorem3: conditional entropies differ beyond 1e-9");
  }
  std::vector<double> terms;
  for (std::size_t i = 0; i < cp_a.label_count(); ++i) {
    double wa = cp_a.label_weights()[i];
    if (wa == 0.0) continue;
    for (std::size_t j = 0; j < cp_b.label_count(); ++j) {
      double wb = cp_b.label_weights()[j];
      if (wb == 0.0) continue;
      terms.push_back(wa * wb *
                      entropy(convolve(cp_a.conditionals()[i], cp_b.conditionals()[j],
                                       conv_cap)));
    }
  }
  double lhs = detail::stable_sum(terms) - ca;
  double rhs = g_cond(ca).value;
  return finish("theorem3",
                digest_of("theorem3|" + cp_a.to_json_string() + "|" + cp_b.to_json_string()),
                lhs, rhs, lhs - rhs, slack, start);
}

TrialReport check_lemma_spiky_iid(const Pmf& p, double slack, std::size_t conv_cap) {
  auto start = Clock::now();
  double c = entropy(p);
  double x = linf(p);
  double lhs = entropy(convolve(p, p, conv_cap)) - c;
  double rhs = c * x - h2(x);
  return finish("lemma_spiky_iid", digest_of("lemma_spiky_iid|" + p.to_json_string()),
                lhs, rhs, lhs - rhs, slack, start);
}

TrialReport check_lemma_l1_gap_iid(const Pmf& p, double alpha, double slack,
                                   std::size_t conv_cap) {
  auto start = Clock::now();
  std::int64_t n = find_split_point(p, alpha);
  SplitResult split = split_at(p, n);
  double lhs = l1_dist(convolve(p, split.lower, conv_cap),
                       convolve(p, split.upper, conv_cap));
  double rhs = 2.0 * alpha;
  return finish("lemma_l1_gap_iid",
                digest_of("lemma_l1_gap_iid|" + p.to_json_string() + "|a=" + num17(alpha)),
                lhs, rhs, lhs - rhs, slack, start);
}

TrialReport check_lemma_l1_gap_linf(const Pmf& p, const Pmf& p1, const Pmf& p2,
                                    double slack, std::size_t conv_cap) {
  auto start = Clock::now();
  if (supports_overlap(p1, p2)) {
    throw std::domain_error("check_lemma_l1_gap_linf: p1 and p2 supports overlap");
  }
  double x = linf(p);
  double lhs = l1_dist(convolve(p, p1, conv_cap), convolve(p, p2, conv_cap));
  double rhs = 2.0 * std::max(2.0 * x - 1.0, 0.0);
  return finish("lemma_l1_gap_linf",
                digest_of("lemma_l1_gap_linf|" + p.to_json_string() + "|" +
                          p1.to_json_string() + "|" + p2.to_json_string()),
                lhs, rhs, lhs - rhs, slack, start);
}

TrialReport check_lemma_pinsker_iid(const Pmf& p, double alpha, double slack,
                                    std::size_t conv_cap) {
  auto start = Clock::now();
  std::int64_t n = find_split_point(p, alpha);
  SplitResult split = split_at(p, n);
  double c = entropy(p);
  double lhs = entropy(convolve(p, p, conv_cap)) - c;
  double gap = l1_dist(convolve(p, split.lower, conv_cap),
                       convolve(p, split.upper, conv_cap));
  double rhs = alpha * alpha / (2.0 * kLn2) * gap * gap;
  return finish("lemma_pinsker_iid",
                digest_of("lemma_pinsker_iid|" + p.to_json_string() + "|a=" + num17(alpha)),
                lhs, rhs, lhs - rhs, slack, start);
}

TrialReport check_lemma_nonspiky_iid(const Pmf& p, double slack,
                                     std::size_t conv_cap) {
  auto start = Clock::now();
  if (p.size() < 2) {
    throw std::domain_error("check_lemma_nonspiky_iid: support size must be >= 2");
  }
  double c = entropy(p);
  double lhs = entropy(convolve(p, p, conv_cap)) - c;
  double rhs = nonspiky_term(linf(p));
  return finish("lemma_nonspiky_iid",
                digest_of("lemma_nonspiky_iid|" + p.to_json_string()), lhs, rhs,
                lhs - rhs, slack, start);
}

TrialReport check_lemma_spiky_niid(const Pmf& p, const Pmf& q, double slack,
                                   std::size_t conv_cap) {
  auto start = Clock::now();
  double c = entropy(p);
  double d = entropy(q);
  double x = linf(p);
  double y = linf(q);
  double lhs = 2.0 * entropy(convolve(p, q, conv_cap)) - c - d;
  double rhs = d * x - h2(x) + c * y - h2(y);
  return finish("lemma_spiky_niid",
                digest_of("lemma_spiky_niid|" + p.to_json_string() + "|" + q.to_json_string()),
                lhs, rhs, lhs - rhs, slack, start);
}

TrialReport check_lemma_l1_gap_niid(const Pmf& p, const Pmf& q, double alpha,
                                    double beta, double slack,
                                    std::size_t conv_cap) {
  auto start = Clock::now();
  SplitResult sp = split_at(p, find_split_point(p, alpha));
  SplitResult sq = split_at(q, find_split_point(q, beta));
  double lhs = l1_dist(convolve(q, sp.lower, conv_cap), convolve(q, sp.upper, conv_cap)) +
               l1_dist(convolve(p, sq.lower, conv_cap), convolve(p, sq.upper, conv_cap));
  double rhs = 2.0 * (alpha + beta);
  return finish("lemma_l1_gap_niid",
                digest_of("lemma_l1_gap_niid|" + p.to_json_string() + "|" +
                          q.to_json_string() + "|a=" + num17(alpha) + "|b=" + num17(beta)),
                lhs, rhs, lhs - rhs, slack, start);
}

TrialReport check_lemma_pinsker_niid(const Pmf& p, const Pmf& q, double alpha,
                                     double beta, double slack,
                                     std::size_t conv_cap) {
  auto start = Clock::now();
  SplitResult sp = split_at(p, find_split_point(p, alpha));
  SplitResult sq = split_at(q, find_split_point(q, beta));
  double c = entropy(p);
  double d = entropy(q);
  double h_conv = entropy(convolve(p, q, conv_cap));
  double gap_p = l1_dist(convolve(q, sp.lower, conv_cap), convolve(q, sp.upper, conv_cap));
  double gap_q = l1_dist(convolve(p, sq.lower, conv_cap), convolve(p, sq.upper, conv_cap));
  double lhs1 = h_conv - d;
  double rhs1 = alpha * alpha / (2.0 * kLn2) * gap_p * gap_p;
  double lhs2 = h_conv - c;
  double rhs2 = beta * beta / (2.0 * kLn2) * gap_q * gap_q;
  // the report carries whichever of the two inequalities is tighter
  double m1 = lhs1 - rhs1;
  double m2 = lhs2 - rhs2;
  bool first = m1 <= m2;
  return finish("lemma_pinsker_niid",
                digest_of("lemma_pinsker_niid|" + p.to_json_string() + "|" +
                          q.to_json_string() + "|a=" + num17(alpha) + "|b=" + num17(beta)),
                first ? lhs1 : lhs2, first ? rhs1 : rhs2, std::min(m1, m2), slack,
                start);
}

TrialReport check_lemma_l_combined(const Pmf& p, const Pmf& q, double slack,
                                   std::size_t conv_cap) {
  auto start = Clock::now();
  double c = entropy(p);
  double d = entropy(q);
  double lhs = 2.0 * entropy(convolve(p, q, conv_cap)) - c - d;
  double rhs = l_xy(linf(p), linf(q));
  return finish("lemma_l_combined",
                digest_of("lemma_l_combined|" + p.to_json_string() + "|" + q.to_json_string()),
                lhs, rhs, lhs - rhs, slack, start);
}

TrialReport check_remark4_counterexample(int m, int n, double slack,
                                         std::size_t conv_cap) {
  auto start = Clock::now();
  if (m < 1 || n < 2) {
    throw std::domain_error("check_remark4_counterexample: need M >= 1, N >= 2");
  }
  Pmf p1 = Pmf::uniform(1, m);
  Pmf p2 = Pmf::uniform(1, static_cast<std::int64_t>(n) * m);
  double gap = entropy(convolve(p1, p2, conv_cap)) - std::max(entropy(p1), entropy(p2));
  double bound = std::log2((static_cast<double>(n) + 1.0) / static_cast<double>(n));
  // upper-bound check: margin is bound - gap
  return finish("remark4_counterexample",
                digest_of("remark4|M=" + std::to_string(m) + "|N=" + std::to_string(n)),
                gap, bound, bound - gap, slack, start);
}

namespace {

/// Pointwise mixture (1-t) a + t b over the union window.
Pmf mix(const Pmf& a, const Pmf& b, double t) {
  std::int64_t lo = std::min(a.min_support(), b.min_support());
  std::int64_t hi = std::max(a.max_support(), b.max_support());
  std::vector<double> w(static_cast<std::size_t>(hi - lo) + 1, 0.0);
  for (std::int64_t k = lo; k <= hi; ++k) {
    w[static_cast<std::size_t>(k - lo)] = (1.0 - t) * a.at(k) + t * b.at(k);
  }
  return Pmf::normalized(lo, std::move(w));
}

/// Steers sum_i w_i H(mix(p_i, r_i, t)) to target by bisection on t.
std::vector<Pmf> steer_entropy(const std::vector<double>& weights,
                               const std::vector<Pmf>& ps, const std::vector<Pmf>& rs,
                               double target) {
  auto value_at = [&](double t) {
    std::vector<double> terms;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (weights[i] > 0.0) terms.push_back(weights[i] * entropy(mix(ps[i], rs[i], t)));
    }
    return detail::stable_sum(terms);
  };
  double lo = 0.0;
  double hi = 1.0;
  double flo = value_at(lo) - target;
  double fhi = value_at(hi) - target;
  if (flo == 0.0) hi = lo;
  if (std::signbit(flo) == std::signbit(fhi) && flo != 0.0 && fhi != 0.0) {
    throw std::domain_error("steer_entropy: target not bracketed");
  }
  for (int iter = 0; iter < 100 && hi - lo > 0.0; ++iter) {
    double mid = 0.5 * (lo + hi);
    double fm = value_at(mid) - target;
    if (fm == 0.0) {
      lo = hi = mid;
      break;
    }
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double t = 0.5 * (lo + hi);
  std::vector<Pmf> out;
  out.reserve(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) out.push_back(mix(ps[i], rs[i], t));
  return out;
}

std::int64_t mode_site(const Pmf& p) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p.weights()[i] > p.weights()[best]) best = i;
  }
  return p.min_support() + static_cast<std::int64_t>(best);
}

GeneratorFamily pick_family(RandomSource& gen) {
  return static_cast<GeneratorFamily>(gen.uniform_int(0, 3));
}

Pmf draw_pmf(RandomSource& gen, const GeneratorParams& base) {
  GeneratorParams params = base;
  params.spike_mass = 0.5 + 0.49 * gen.uniform01();
  return random_pmf(gen, pick_family(gen), params);
}

}  // namespace

ConditionalPair random_conditional_pair(RandomSource& gen,
                                        const GeneratorParams& params) {
  bool binary = gen.uniform01() > 0.15;
  std::vector<double> labels;
  if (binary) {
    double w = 0.05 + 0.9 * gen.uniform01();
    labels = {w, 1.0 - w};
  } else {
    labels = {1.0};
  }
  std::vector<Pmf> conds;
  for (std::size_t i = 0; i < labels.size(); ++i) conds.push_back(draw_pmf(gen, params));
  return ConditionalPair(std::move(labels), std::move(conds));
}

ConditionalPair matched_conditional_pair(RandomSource& gen,
                                         const GeneratorParams& params,
                                         double target_c) {
  if (target_c < 1e-12) {
    double w = 0.05 + 0.9 * gen.uniform01();
    std::vector<Pmf> conds = {Pmf::point_mass(gen.uniform_int(-8, 8)),
                              Pmf::point_mass(gen.uniform_int(-8, 8))};
    return ConditionalPair({w, 1.0 - w}, std::move(conds));
  }
  ConditionalPair raw = random_conditional_pair(gen, params);
  double current = conditional_entropy(raw);
  std::vector<Pmf> anchors;
  if (current > target_c) {
    // shrink toward per-label point masses
    for (const Pmf& p : raw.conditionals()) anchors.push_back(Pmf::point_mass(mode_site(p)));
  } else {
    // widen toward a flat window big enough to overshoot the target
    int width = params.support_max;
    while (std::log2(static_cast<double>(width)) <= target_c + 0.5) width *= 2;
    for (const Pmf& p : raw.conditionals()) {
      anchors.push_back(Pmf::uniform(p.min_support(), p.min_support() + width - 1));
    }
  }
  std::vector<Pmf> steered =
      steer_entropy(raw.label_weights(), raw.conditionals(), anchors, target_c);
  return ConditionalPair(raw.label_weights(), std::move(steered));
}

namespace {

// ---- fixed adversarial corpus -------------------------------------------

std::vector<Pmf> corpus_pmfs(int support_max) {
  std::vector<Pmf> out;
  out.push_back(Pmf::point_mass(0));
  out.push_back(Pmf::point_mass(5));
  out.push_back(Pmf::uniform(0, 1));
  out.push_back(Pmf(-1, {0.5, 0.5}));
  out.push_back(Pmf(0, {0.9, 0.1}));
  out.push_back(Pmf(3, {0.99, 0.01}));
  out.push_back(Pmf(0, {0.25, 0.5, 0.25}));
  out.push_back(Pmf(0, {0.2, 0.3, 0.5}));
  out.push_back(Pmf(0, {0.5, 0.25, 0.125, 0.0625, 0.0625}));  // truncated geometric
  out.push_back(Pmf::uniform(0, 3));
  if (support_max >= 16) out.push_back(Pmf::uniform(-2, 13));
  if (support_max >= 64) out.push_back(Pmf::uniform(0, 63));
  {
    // dominant spike plus a flat tail over 32 points
    std::vector<double> w(32, 0.01 / 31.0);
    w[0] = 0.99;
    if (support_max >= 32) out.push_back(Pmf(0, std::move(w)));
  }
  if (support_max >= 44) {
    std::vector<double> w(42, 0.0);
    w[0] = w[1] = 0.25;
    w[40] = w[41] = 0.25;
    out.push_back(Pmf(-4, std::move(w)));  // far two-cluster
  }
  out.push_back(spread(Pmf::uniform(0, 1), 2));
  if (support_max >= 9) {
    out.push_back(spread(Pmf(0, {0.25, 0.5, 0.25}), 4));
  }
  return out;
}

bool splittable(const Pmf& p) { return p.size() >= 2; }

double default_alpha(const Pmf& p) {
  double a = 0.5 * (1.0 - linf(p));
  return a > 0.0 ? a : 0.0;
}

// ---- suite plumbing ------------------------------------------------------

struct CheckRunner {
  std::string name;
  // corpus trials, then `count` generated trials; each call appends reports
  std::function<std::vector<TrialReport>(const SuiteConfig&)> corpus;
  std::function<TrialReport(RandomSource&, const SuiteConfig&)> generated;
};

GeneratorParams params_for(const SuiteConfig& config) {
  GeneratorParams gp;
  gp.support_max = config.support_max;
  return gp;
}

std::vector<CheckRunner> make_runners() {
  std::vector<CheckRunner> runners;

  runners.push_back(
      {"theorem1",
       [](const SuiteConfig& cfg) {
         std::vector<TrialReport> out;
         for (const Pmf& p : corpus_pmfs(cfg.support_max)) {
           out.push_back(check_theorem1(p, cfg.slack, cfg.conv_cap));
         }
         return out;
       },
       [](RandomSource& gen, const SuiteConfig& cfg) {
         Pmf p = draw_pmf(gen, params_for(cfg));
         return check_theorem1(p, cfg.slack, cfg.conv_cap);
       }});

  runners.push_back(
      {"theorem2",
       [](const SuiteConfig& cfg) {
         std::vector<TrialReport> out;
         auto pool = corpus_pmfs(cfg.support_max);
         for (std::size_t i = 0; i < pool.size(); ++i) {
           for (std::size_t step : {std::size_t{0}, std::size_t{3}}) {
             const Pmf& q = pool[(i + step) % pool.size()];
             out.push_back(check_theorem2(pool[i], q, cfg.slack, cfg.conv_cap));
           }
         }
         return out;
       },
       [](RandomSource& gen, const SuiteConfig& cfg) {
         Pmf p = draw_pmf(gen, params_for(cfg));
         Pmf q = draw_pmf(gen, params_for(cfg));
         return check_theorem2(p, q, cfg.slack, cfg.conv_cap);
       }});

  runners.push_back(
      {"theorem3",
       [](const SuiteConfig& cfg) {
         std::vector<TrialReport> out;
         // deterministic labels: reduces to the iid statement
         ConditionalPair det({1.0}, {Pmf::uniform(0, 1)});
         out.push_back(check_theorem3(det, det, cfg.slack, cfg.conv_cap));
         // zero conditional entropy on both sides
         ConditionalPair zero({0.5, 0.5}, {Pmf::point_mass(0), Pmf::point_mass(3)});
         ConditionalPair zero2({1.0}, {Pmf::point_mass(1)});
         out.push_back(check_theorem3(zero, zero2, cfg.slack, cfg.conv_cap));
         // balanced binary labels with equal conditional entropy 1.5
         ConditionalPair a({0.5, 0.5}, {Pmf::uniform(0, 1), Pmf::uniform(0, 3)});
         ConditionalPair b({0.25, 0.75}, {Pmf::uniform(0, 7), Pmf::uniform(0, 1)});
         out.push_back(check_theorem3(a, b, cfg.slack, cfg.conv_cap));
         return out;
       },
       [](RandomSource& gen, const SuiteConfig& cfg) {
         GeneratorParams gp = params_for(cfg);
         ConditionalPair a = random_conditional_pair(gen, gp);
         ConditionalPair b = matched_conditional_pair(gen, gp, conditional_entropy(a));
         return check_theorem3(a, b, cfg.slack, cfg.conv_cap);
       }});

  runners.push_back(
      {"lemma_spiky_iid",
       [](const SuiteConfig& cfg) {
         std::vector<TrialReport> out;
         for (const Pmf& p : corpus_pmfs(cfg.support_max)) {
           out.push_back(check_lemma_spiky_iid(p, cfg.slack, cfg.conv_cap));
         }
         return out;
       },
       [](RandomSource& gen, const SuiteConfig& cfg) {
         Pmf p = draw_pmf(gen, params_for(cfg));
         return check_lemma_spiky_iid(p, cfg.slack, cfg.conv_cap);
       }});

  runners.push_back(
      {"lemma_l1_gap_iid",
       [](const SuiteConfig& cfg) {
         std::vector<TrialReport> out;
         // equality-tight case: two-point uniform split at its midpoint
         out.push_back(check_lemma_l1_gap_iid(Pmf::uniform(0, 1), 0.5, cfg.slack,
                                              cfg.conv_cap));
         if (cfg.support_max >= 44) {
           std::vector<double> w(42, 0.0);
           w[0] = w[1] = 0.25;
           w[40] = w[41] = 0.25;
           out.push_back(check_lemma_l1_gap_iid(Pmf(-4, std::move(w)), 0.5, cfg.slack,
                                                cfg.conv_cap));
         }
         for (const Pmf& p : corpus_pmfs(cfg.support_max)) {
           if (!splittable(p) || default_alpha(p) <= 0.0) continue;
           out.push_back(
               check_lemma_l1_gap_iid(p, default_alpha(p), cfg.slack, cfg.conv_cap));
         }
         return out;
       },
       [](RandomSource& gen, const SuiteConfig& cfg) {
         Pmf p = draw_pmf(gen, params_for(cfg));
         return check_lemma_l1_gap_iid(p, default_alpha(p), cfg.slack, cfg.conv_cap);
       }});

  runners.push_back(
      {"lemma_l1_gap_linf",
       [](const SuiteConfig& cfg) {
         std::vector<TrialReport> out;
         // equality-tight case: point-mass p with any disjoint pair
         out.push_back(check_lemma_l1_gap_linf(Pmf::point_mass(0), Pmf::point_mass(0),
                                               Pmf::point_mass(5), cfg.slack,
                                               cfg.conv_cap));
         out.push_back(check_lemma_l1_gap_linf(Pmf(0, {0.9, 0.1}), Pmf::point_mass(0),
                                               Pmf::point_mass(5), cfg.slack,
                                               cfg.conv_cap));
         out.push_back(check_lemma_l1_gap_linf(Pmf::uniform(0, 3), Pmf::uniform(0, 1),
                                               Pmf::uniform(5, 8), cfg.slack,
                                               cfg.conv_cap));
         return out;
       },
       [](RandomSource& gen, const SuiteConfig& cfg) {
         GeneratorParams gp = params_for(cfg);
         Pmf p = draw_pmf(gen, gp);
         switch (gen.uniform_int(0, 2)) {
           case 0: {  // split halves of another draw
             Pmf r = draw_pmf(gen, gp);
             if (r.size() < 2) {
               return check_lemma_l1_gap_linf(p, Pmf::point_mass(r.min_support()),
                                              Pmf::point_mass(r.min_support() + 1),
                                              cfg.slack, cfg.conv_cap);
             }
             SplitResult s = split_at(r, find_split_point(r, default_alpha(r) > 0.0
                                                                 ? default_alpha(r)
                                                                 : 0.25));
             return check_lemma_l1_gap_linf(p, s.lower, s.upper, cfg.slack, cfg.conv_cap);
           }
           case 1: {  // interlaced combs
             GeneratorParams half = gp;
             half.support_max = std::max(2, gp.support_max / 2);
             Pmf a = spread(random_pmf(gen, GeneratorFamily::kFlatRandom, half), 2);
             Pmf b = shift(spread(random_pmf(gen, GeneratorFamily::kFlatRandom, half), 2), 1);
             // equal offsets guarantee opposite parities, hence disjoint
             return check_lemma_l1_gap_linf(p, shift(a, -a.min_support()),
                                            shift(b, -b.min_support() + 1), cfg.slack,
                                            cfg.conv_cap);
           }
           default: {  // far-apart windows
             GeneratorParams half = gp;
             half.support_max = std::max(2, gp.support_max / 2);
             Pmf a = random_pmf(gen, GeneratorFamily::kFlatRandom, half);
             Pmf b = random_pmf(gen, GeneratorFamily::kFlatRandom, half);
             std::int64_t far = a.max_support() + 1 + gen.uniform_int(1, 32);
             return check_lemma_l1_gap_linf(p, a, shift(b, far - b.min_support()),
                                            cfg.slack, cfg.conv_cap);
           }
         }
       }});

  runners.push_back(
      {"lemma_pinsker_iid",
       [](const SuiteConfig& cfg) {
         std::vector<TrialReport> out;
         out.push_back(check_lemma_pinsker_iid(Pmf::uniform(0, 1), 0.5, cfg.slack,
                                               cfg.conv_cap));
         for (const Pmf& p : corpus_pmfs(cfg.support_max)) {
           if (!splittable(p) || default_alpha(p) <= 0.0) continue;
           out.push_back(
               check_lemma_pinsker_iid(p, default_alpha(p), cfg.slack, cfg.conv_cap));
         }
         return out;
       },
       [](RandomSource& gen, const SuiteConfig& cfg) {
         Pmf p = draw_pmf(gen, params_for(cfg));
         return check_lemma_pinsker_iid(p, default_alpha(p), cfg.slack, cfg.conv_cap);
       }});

  runners.push_back(
      {"lemma_nonspiky_iid",
       [](const SuiteConfig& cfg) {
         std::vector<TrialReport> out;
         for (const Pmf& p : corpus_pmfs(cfg.support_max)) {
           if (p.size() < 2) continue;
           out.push_back(check_lemma_nonspiky_iid(p, cfg.slack, cfg.conv_cap));
         }
         return out;
       },
       [](RandomSource& gen, const SuiteConfig& cfg) {
         Pmf p = draw_pmf(gen, params_for(cfg));
         return check_lemma_nonspiky_iid(p, cfg.slack, cfg.conv_cap);
       }});

  runners.push_back(
      {"lemma_spiky_niid",
       [](const SuiteConfig& cfg) {
         std::vector<TrialReport> out;
         auto pool = corpus_pmfs(cfg.support_max);
         for (std::size_t i = 0; i < pool.size(); ++i) {
           const Pmf& q = pool[(i + 5) % pool.size()];
           out.push_back(check_lemma_spiky_niid(pool[i], q, cfg.slack, cfg.conv_cap));
         }
         return out;
       },
       [](RandomSource& gen, const SuiteConfig& cfg) {
         Pmf p = draw_pmf(gen, params_for(cfg));
         Pmf q = draw_pmf(gen, params_for(cfg));
         return check_lemma_spiky_niid(p, q, cfg.slack, cfg.conv_cap);
       }});

  runners.push_back(
      {"lemma_l1_gap_niid",
       [](const SuiteConfig& cfg) {
         std::vector<TrialReport> out;
         // equality-tight: both sides two-point uniforms at alpha = beta = 1/2
         out.push_back(check_lemma_l1_gap_niid(Pmf::uniform(0, 1), Pmf::uniform(0, 1),
                                               0.5, 0.5, cfg.slack, cfg.conv_cap));
         auto pool = corpus_pmfs(cfg.support_max);
         for (std::size_t i = 0; i < pool.size(); ++i) {
           const Pmf& p = pool[i];
           const Pmf& q = pool[(i + 4) % pool.size()];
           if (!splittable(p) || !splittable(q)) continue;
           double a = default_alpha(p);
           double b = default_alpha(q);
           if (a <= 0.0 || b <= 0.0) continue;
           out.push_back(check_lemma_l1_gap_niid(p, q, a, b, cfg.slack, cfg.conv_cap));
         }
         return out;
       },
       [](RandomSource& gen, const SuiteConfig& cfg) {
         Pmf p = draw_pmf(gen, params_for(cfg));
         Pmf q = draw_pmf(gen, params_for(cfg));
         return check_lemma_l1_gap_niid(p, q, default_alpha(p), default_alpha(q),
                                        cfg.slack, cfg.conv_cap);
       }});

  runners.push_back(
      {"lemma_pinsker_niid",
       [](const SuiteConfig& cfg) {
         std::vector<TrialReport> out;
         out.push_back(check_lemma_pinsker_niid(Pmf::uniform(0, 1), Pmf::uniform(0, 3),
                                                0.25, 0.375, cfg.slack, cfg.conv_cap));
         auto pool = corpus_pmfs(cfg.support_max);
         for (std::size_t i = 0; i < pool.size(); ++i) {
           const Pmf& p = pool[i];
           const Pmf& q = pool[(i + 6) % pool.size()];
           if (!splittable(p) || !splittable(q)) continue;
           double a = default_alpha(p);
           double b = default_alpha(q);
           if (a <= 0.0 || b <= 0.0) continue;
           out.push_back(check_lemma_pinsker_niid(p, q, a, b, cfg.slack, cfg.conv_cap));
         }
         return out;
       },
       [](RandomSource& gen, const SuiteConfig& cfg) {
         Pmf p = draw_pmf(gen, params_for(cfg));
         Pmf q = draw_pmf(gen, params_for(cfg));
         return check_lemma_pinsker_niid(p, q, default_alpha(p), default_alpha(q),
                                         cfg.slack, cfg.conv_cap);
       }});

  runners.push_back(
      {"lemma_l_combined",
       [](const SuiteConfig& cfg) {
         std::vector<TrialReport> out;
         auto pool = corpus_pmfs(cfg.support_max);
         for (std::size_t i = 0; i < pool.size(); ++i) {
           const Pmf& q = pool[(i + 7) % pool.size()];
           out.push_back(check_lemma_l_combined(pool[i], q, cfg.slack, cfg.conv_cap));
         }
         return out;
       },
       [](RandomSource& gen, const SuiteConfig& cfg) {
         Pmf p = draw_pmf(gen, params_for(cfg));
         Pmf q = draw_pmf(gen, params_for(cfg));
         return check_lemma_l_combined(p, q, cfg.slack, cfg.conv_cap);
       }});

  runners.push_back(
      {"remark4_counterexample",
       [](const SuiteConfig& cfg) {
         std::vector<TrialReport> out;
         for (auto [m, n] : {std::pair{2, 2}, {2, 8}, {4, 8}, {8, 16}, {1, 4}, {3, 2}}) {
           out.push_back(check_remark4_counterexample(m, n, cfg.slack, cfg.conv_cap));
         }
         return out;
       },
       [](RandomSource& gen, const SuiteConfig& cfg) {
         int m = static_cast<int>(gen.uniform_int(1, 8));
         int n = static_cast<int>(gen.uniform_int(2, 16));
         return check_remark4_counterexample(m, n, cfg.slack, cfg.conv_cap);
       }});

  std::sort(runners.begin(), runners.end(),
            [](const CheckRunner& a, const CheckRunner& b) { return a.name < b.name; });
  return runners;
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
  SuiteReport report;
  report.config = config;
  std::vector<CheckRunner> runners = make_runners();
  for (std::size_t check_idx = 0; check_idx < runners.size(); ++check_idx) {
    const CheckRunner& runner = runners[check_idx];
    CheckSummary summary;
    summary.name = runner.name;
    summary.min_margin = std::numeric_limits<double>::infinity();
    auto absorb = [&](TrialReport&& r, std::uint64_t seed) {
      r.seed = seed;
      summary.trials += 1;
      summary.min_margin = std::min(summary.min_margin, r.margin);
      if (!r.pass) summary.failures.push_back(r);
      report.trials.push_back(std::move(r));
    };
    for (TrialReport& r : runner.corpus(config)) {
      absorb(std::move(r), config.seed);
    }
    for (int t = 0; t < config.trials_per_check; ++t) {
      std::uint64_t seed = RandomSource::derive(config.seed, check_idx,
                                                static_cast<std::uint64_t>(t));
      RandomSource gen(seed);
      try {
        absorb(runner.generated(gen, config), seed);
      } catch (const std::domain_error&) {
        summary.invalid += 1;  // recorded, never fatal
      }
    }
    if (summary.trials == 0) summary.min_margin = 0.0;
    report.per_check_min_margin[summary.name] = summary.min_margin;
    for (const TrialReport& f : summary.failures) report.failures.push_back(f);
    report.checks.push_back(std::move(summary));
  }
  return report;
}

void write_suite_report(std::ostream& os, const SuiteReport& report) {
  auto num = [](double v) { return format_g12(v); };
  os << "{\n";
  os << "  \"suiteVersion\": " << report.suite_version << ",\n";
  os << "  \"seed\": " << report.config.seed << ",\n";
  os << "  \"config\": {\"trialsPerCheck\": " << report.config.trials_per_check
     << ", \"supportMax\": " << report.config.support_max
     << ", \"slack\": " << num(report.config.slack)
     << ", \"convolutionCap\": " << report.config.conv_cap << "},\n";
  os << "  \"checks\": [\n";
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const CheckSummary& c = report.checks[i];
    os << "    {\"name\": \"" << c.name << "\", \"trials\": " << c.trials
       << ", \"minMargin\": " << num(c.min_margin) << ", \"failures\": [";
    for (std::size_t j = 0; j < c.failures.size(); ++j) {
      const TrialReport& f = c.failures[j];
      if (j) os << ",";
      os << "\n      {\"checkName\": \"" << f.check_name << "\", \"seed\": " << f.seed
         << ", \"inputDigest\": \"" << f.input_digest << "\", \"lhs\": " << num(f.lhs)
         << ", \"rhs\": " << num(f.rhs) << ", \"margin\": " << num(f.margin)
         << ", \"pass\": " << (f.pass ? "true" : "false") << "}";
    }
    if (!c.failures.empty()) os << "\n    ";
    os << "]}" << (i + 1 < report.checks.size() ? "," : "") << "\n";
  }
  os << "  ]\n";
  os << "}\n";
}

}  // namespace depi
