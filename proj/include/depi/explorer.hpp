#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "depi/pmf.hpp"
#include "depi/random.hpp"
#include "depi/verify.hpp"

namespace depi {

/// One sampled point of the achievable entropy set:
/// (H(p*q), H(p), H(q)) plus how it was produced.
struct EntropyPoint {
  double h_sum = 0.0;
  double h_p = 0.0;
  double h_q = 0.0;
  std::string generator;
  std::uint64_t seed = 0;
};

/// Outcome of one midpoint search: how close an achievable point got to
/// the midpoint of two sampled points (Euclidean distance in R^3).
/// Evidence only; no pass/fail semantics.
struct DeficiencyRecord {
  EntropyPoint point_a;
  EntropyPoint point_b;
  std::array<double, 3> midpoint{};
  EntropyPoint best_achieved;
  double distance = 0.0;
};

/// Draws n (p, q) pairs from the generator families and records their
/// entropy triples. Deterministic per seed state.
std::vector<EntropyPoint> sample_entropy_set(RandomSource& gen, int n,
                                             const GeneratorParams& params = {});

/// Produces (p, q~) with H(p) ~ h_p, H(q~) ~ h_q (within 1e-6) and
/// H(p * q~) = H(p) + H(q~) within 1e-9: p lives on {0..M-1} and q~ is the
/// M-fold dilation of a matching q, so the convolution is collision-free.
std::pair<Pmf, Pmf> boundary_construction(double h_p, double h_q);

/// Mixture family steered to an exact entropy target on a window of the
/// given size (point mass for target 0). Throws std::domain_error when
/// target > log2(support).
Pmf pmf_with_entropy(double target, int support);

/// For sampled pairs of points, searches (within budget evaluations of
/// perturbed generator parameters per pair) for achievable points close to
/// the pair midpoints. Returns one record per probed pair.
std::vector<DeficiencyRecord> probe_convexity(const std::vector<EntropyPoint>& points,
                                              int budget, RandomSource& gen);

/// Conditional gap check against g_niid(c, d) for arbitrary finite label
/// supports. Only valid under an open convexity hypothesis, so failures
/// belong in a separate report channel, not the verification suite.
TrialReport check_theorem4_conditional(const ConditionalPair& cp_a,
                                       const ConditionalPair& cp_b,
                                       double slack = kDefaultSlack,
                                       std::size_t conv_cap = kDefaultSupportCap);

/// CSV dumps. Headers:
///   h_sum,h_p,h_q,generator,seed
///   ax,ay,az,bx,by,bz,mx,my,mz,best_distance
void write_entropy_csv(std::ostream& os, const std::vector<EntropyPoint>& points);
void write_deficiency_csv(std::ostream& os, const std::vector<DeficiencyRecord>& records);

}  // namespace depi
