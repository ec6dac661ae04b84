#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace depi {

/// Absolute tolerance on |sum(weights) - 1| accepted by Pmf construction.
inline constexpr double kMassTolerance = 1e-12;

/// Weights below this after arithmetic are flushed to zero before trimming.
inline constexpr double kWeightFloor = 1e-15;

/// Default cap on the support size produced by convolve/spread.
inline constexpr std::size_t kDefaultSupportCap = std::size_t{1} << 20;

/// Finitely supported probability distribution on the integers, stored as
/// the index of the first support point plus consecutive weights.
///
/// Canonical form: weights are nonnegative, sum to 1 within kMassTolerance,
/// and the first and last weights are strictly positive. Interior zeros are
/// allowed. Instances are immutable values.
class Pmf {
 public:
  /// Point mass at 0.
  Pmf() : offset_(0), weights_{1.0} {}

  /// Validates and canonicalizes: flushes weights below kWeightFloor,
  /// trims zero ends. Throws std::invalid_argument on negative weights,
  /// empty support, or mass sum off by more than kMassTolerance.
  Pmf(std::int64_t offset, std::vector<double> weights);

  static Pmf point_mass(std::int64_t site) { return Pmf(site, {1.0}); }

  /// Uniform distribution on {first, ..., last} (inclusive).
  static Pmf uniform(std::int64_t first, std::int64_t last);

  /// Scales the given weights to unit mass, then canonicalizes.
  static Pmf normalized(std::int64_t offset, std::vector<double> weights);

  std::int64_t offset() const { return offset_; }
  std::size_t size() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }

  std::int64_t min_support() const { return offset_; }
  std::int64_t max_support() const {
    return offset_ + static_cast<std::int64_t>(weights_.size()) - 1;
  }

  /// Mass at integer k (zero outside the stored window).
  double at(std::int64_t k) const {
    if (k < offset_ || k > max_support()) return 0.0;
    return weights_[static_cast<std::size_t>(k - offset_)];
  }

  /// Cumulative mass of (-inf, k].
  double cdf(std::int64_t k) const;

  bool operator==(const Pmf& other) const {
    return offset_ == other.offset_ && weights_ == other.weights_;
  }

  /// Compact JSON form {"offset": int, "weights": [...]} used by the CLI
  /// and report files.
  std::string to_json_string() const;

 private:
  std::int64_t offset_;
  std::vector<double> weights_;
};

/// Shannon entropy in bits, with 0 log2 0 = 0.
double entropy(const Pmf& p);

/// Distribution of X + X' for independent X ~ p, X' ~ q.
/// Throws std::length_error if the result support would exceed support_cap.
Pmf convolve(const Pmf& p, const Pmf& q,
             std::size_t support_cap = kDefaultSupportCap);

/// Largest single mass, in [1/size, 1].
double linf(const Pmf& p);

/// L1 distance sum_k |p_k - q_k| over the union of supports, in [0, 2].
double l1_dist(const Pmf& p, const Pmf& q);

/// Renormalized restrictions of a distribution to (-inf, n] and [n+1, inf).
struct SplitResult {
  Pmf lower;
  Pmf upper;
  double lower_mass;  // mass of (-inf, n] in the original distribution
};

/// Splits p at n. Throws std::domain_error if either side would be empty.
SplitResult split_at(const Pmf& p, std::int64_t n);

/// Smallest n with alpha <= cdf(n) <= 1 - alpha, scanning the CDF.
/// Requires 0 < alpha <= 1/2; such n exists whenever
/// alpha <= (1 - linf(p)) / 2. Throws std::runtime_error when no n exists
/// (e.g. a point mass), std::domain_error for alpha outside (0, 1/2].
std::int64_t find_split_point(const Pmf& p, double alpha);

/// Translates the support by k. Entropy-invariant.
Pmf shift(const Pmf& p, std::int64_t k);

/// Dilates the support by an integer factor: mass q(j) moves to j*factor.
/// Preserves entropy exactly (same multiset of weights). Throws
/// std::invalid_argument for factor < 1, std::length_error on cap overflow.
Pmf spread(const Pmf& q, std::int64_t factor,
           std::size_t support_cap = kDefaultSupportCap);

/// Joint law of (X, Y) with finitely supported Y: a label distribution plus
/// one conditional Pmf per label.
class ConditionalPair {
 public:
  /// Throws std::invalid_argument on count mismatch, negative label
  /// weights, or label mass off unit by more than kMassTolerance.
  ConditionalPair(std::vector<double> label_weights,
                  std::vector<Pmf> conditionals);

  std::size_t label_count() const { return label_weights_.size(); }
  const std::vector<double>& label_weights() const { return label_weights_; }
  const std::vector<Pmf>& conditionals() const { return conditionals_; }

  std::string to_json_string() const;

 private:
  std::vector<double> label_weights_;
  std::vector<Pmf> conditionals_;
};

/// H(X|Y) = sum_i q_i H(p_i) in bits; zero-weight labels contribute 0.
double conditional_entropy(const ConditionalPair& cp);

namespace detail {

/// Neumaier compensated sum; keeps long accumulations near exact.
double stable_sum(const std::vector<double>& xs);

/// FNV-1a 64-bit over a string, hex-encoded. Used for input digests.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace detail

}  // namespace depi
