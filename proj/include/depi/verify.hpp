#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "depi/pmf.hpp"
#include "depi/random.hpp"

namespace depi {

/// Record of a single inequality trial. margin is the distance from
/// violation: lhs - rhs for lower-bound checks, rhs - lhs for the one
/// upper-bound check (remark4). pass holds iff margin >= -slack.
/// elapsed_seconds is informational and never serialized, so reports stay
/// byte-identical across reruns.
struct TrialReport {
  std::string check_name;
  std::uint64_t seed = 0;
  std::string input_digest;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool pass = false;
  double elapsed_seconds = 0.0;
};

struct SuiteConfig {
  std::uint64_t seed = 42;
  int trials_per_check = 1000;
  int support_max = 64;
  double slack = 1e-9;  // bits
  std::size_t conv_cap = kDefaultSupportCap;
};

struct CheckSummary {
  std::string name;
  int trials = 0;
  int invalid = 0;  // inputs rejected by a check precondition
  double min_margin = 0.0;
  std::vector<TrialReport> failures;
};

struct SuiteReport {
  int suite_version = 1;
  SuiteConfig config;
  std::vector<CheckSummary> checks;  // sorted by name
  std::vector<TrialReport> trials;   // check-name order, then trial index
  std::map<std::string, double> per_check_min_margin;
  std::vector<TrialReport> failures;
};

inline constexpr double kDefaultSlack = 1e-9;

// One oracle per proved statement. Each evaluates both sides of the
// inequality on explicit inputs and reports the margin. Invalid inputs
// (violated preconditions) raise std::domain_error.

/// H(p*p) - H(p) >= g_iid(H(p)).
TrialReport check_theorem1(const Pmf& p, double slack = kDefaultSlack,
                           std::size_t conv_cap = kDefaultSupportCap);

/// H(p*q) - (H(p)+H(q))/2 >= g_niid(H(p), H(q)).
TrialReport check_theorem2(const Pmf& p, const Pmf& q,
                           double slack = kDefaultSlack,
                           std::size_t conv_cap = kDefaultSupportCap);

/// sum_ij qa_i qb_j H(pa_i * pb_j) - c >= g_cond(c) for label supports of
/// size at most 2 with equal conditional entropies (within 1e-9).
TrialReport check_theorem3(const ConditionalPair& cp_a,
                           const ConditionalPair& cp_b,
                           double slack = kDefaultSlack,
                           std::size_t conv_cap = kDefaultSupportCap);

/// H(p*p) - c >= c x - h2(x) at x = linf(p).
TrialReport check_lemma_spiky_iid(const Pmf& p, double slack = kDefaultSlack,
                                  std::size_t conv_cap = kDefaultSupportCap);

/// ||p*p1 - p*p2||_1 >= 2 alpha for the alpha-split of p.
TrialReport check_lemma_l1_gap_iid(const Pmf& p, double alpha,
                                   double slack = kDefaultSlack,
                                   std::size_t conv_cap = kDefaultSupportCap);

/// ||p*p1 - p*p2||_1 >= 2 (2x-1)^+ for any disjoint-support p1, p2.
TrialReport check_lemma_l1_gap_linf(const Pmf& p, const Pmf& p1, const Pmf& p2,
                                    double slack = kDefaultSlack,
                                    std::size_t conv_cap = kDefaultSupportCap);

/// H(p*p) - c >= alpha^2/(2 ln 2) ||p*p1 - p*p2||_1^2.
TrialReport check_lemma_pinsker_iid(const Pmf& p, double alpha,
                                    double slack = kDefaultSlack,
                                    std::size_t conv_cap = kDefaultSupportCap);

/// H(p*p) - c >= nonspiky_term(linf(p)); requires support size >= 2.
TrialReport check_lemma_nonspiky_iid(const Pmf& p, double slack = kDefaultSlack,
                                     std::size_t conv_cap = kDefaultSupportCap);

/// 2 H(p*q) - c - d >= d x - h2(x) + c y - h2(y).
TrialReport check_lemma_spiky_niid(const Pmf& p, const Pmf& q,
                                   double slack = kDefaultSlack,
                                   std::size_t conv_cap = kDefaultSupportCap);

/// ||q*p1 - q*p2||_1 + ||p*q1 - p*q2||_1 >= 2 (alpha + beta).
TrialReport check_lemma_l1_gap_niid(const Pmf& p, const Pmf& q, double alpha,
                                    double beta, double slack = kDefaultSlack,
                                    std::size_t conv_cap = kDefaultSupportCap);

/// Both displayed inequalities bridging the split L1 gaps to the entropy
/// gap; the report carries the smaller of the two margins.
TrialReport check_lemma_pinsker_niid(const Pmf& p, const Pmf& q, double alpha,
                                     double beta, double slack = kDefaultSlack,
                                     std::size_t conv_cap = kDefaultSupportCap);

/// 2 H(p*q) - c - d >= l_xy(linf(p), linf(q)).
TrialReport check_lemma_l_combined(const Pmf& p, const Pmf& q,
                                   double slack = kDefaultSlack,
                                   std::size_t conv_cap = kDefaultSupportCap);

/// Upper-bound check on uniform{1..M} vs uniform{1..NM}:
/// H(p1*p2) - max(H(p1), H(p2)) <= log2((N+1)/N). Shows no doubly-increasing
/// lower bound on H(p1*p2) - max(H) can exist.
TrialReport check_remark4_counterexample(int m, int n,
                                         double slack = kDefaultSlack,
                                         std::size_t conv_cap = kDefaultSupportCap);

/// Runs every check over its fixed adversarial corpus plus
/// trials_per_check generated inputs. Deterministic given config.
SuiteReport run_suite(const SuiteConfig& config = {});

/// JSON report: {suiteVersion, seed, config, checks:[{name, trials,
/// minMargin, failures:[...]}]}. Numbers carry 12 significant digits;
/// output is byte-stable for a fixed config.
void write_suite_report(std::ostream& os, const SuiteReport& report);

/// Conditional pair with binary (or unary) labels whose conditional
/// entropy is steered to target_c by mixing conditionals toward a point
/// mass or a flat window (bisection on the mixing weight).
ConditionalPair random_conditional_pair(RandomSource& gen,
                                        const GeneratorParams& params);
ConditionalPair matched_conditional_pair(RandomSource& gen,
                                         const GeneratorParams& params,
                                         double target_c);

}  // namespace depi
