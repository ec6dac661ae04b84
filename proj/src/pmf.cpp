#include "depi/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace depi {

namespace detail {

double stable_sum(const std::vector<double>& xs) {
  double sum = 0.0;
  double comp = 0.0;
  for (double x : xs) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

namespace {

std::string format_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

}  // namespace

}  // namespace detail

Pmf::Pmf(std::int64_t offset, std::vector<double> weights)
    : offset_(offset), weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw std::invalid_argument("Pmf: empty weight vector");
  }
  for (double& w : weights_) {
    if (std::isnan(w) || w < 0.0) {
      throw std::invalid_argument("Pmf: negative or NaN weight");
    }
    if (w < kWeightFloor) w = 0.0;
  }
  std::size_t lo = 0;
  std::size_t hi = weights_.size();
  while (lo < hi && weights_[lo] == 0.0) ++lo;
  while (hi > lo && weights_[hi - 1] == 0.0) --hi;
  if (lo == hi) {
    throw std::invalid_argument("Pmf: all weights are zero");
  }
  if (lo > 0 || hi < weights_.size()) {
    weights_ = std::vector<double>(weights_.begin() + static_cast<std::ptrdiff_t>(lo),
                                   weights_.begin() + static_cast<std::ptrdiff_t>(hi));
    offset_ += static_cast<std::int64_t>(lo);
  }
  double total = detail::stable_sum(weights_);
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw std::invalid_argument("Pmf: mass sum " + detail::format_g17(total) +
                                " deviates from 1 beyond tolerance");
  }
}

Pmf Pmf::uniform(std::int64_t first, std::int64_t last) {
  if (last < first) {
    throw std::invalid_argument("Pmf::uniform: last < first");
  }
  std::size_t n = static_cast<std::size_t>(last - first) + 1;
  return Pmf(first, std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Pmf Pmf::normalized(std::int64_t offset, std::vector<double> weights) {
  for (double w : weights) {
    if (std::isnan(w) || w < 0.0) {
      throw std::invalid_argument("Pmf::normalized: negative or NaN weight");
    }
  }
  double total = detail::stable_sum(weights);
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw std::invalid_argument("Pmf::normalized: nonpositive total mass");
  }
  for (double& w : weights) w /= total;
  return Pmf(offset, std::move(weights));
}

double Pmf::cdf(std::int64_t k) const {
  if (k < offset_) return 0.0;
  if (k >= max_support()) return 1.0;
  double acc = 0.0;
  double comp = 0.0;
  std::size_t end = static_cast<std::size_t>(k - offset_) + 1;
  for (std::size_t i = 0; i < end; ++i) {
    double x = weights_[i];
    double t = acc + x;
    if (acc >= x) {
      comp += (acc - t) + x;
    } else {
      comp += (x - t) + acc;
    }
    acc = t;
  }
  return acc + comp;
}

std::string Pmf::to_json_string() const {
  std::string out = "{\"offset\": " + std::to_string(offset_) + ", \"weights\": [";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ", ";
    out += detail::format_g17(weights_[i]);
  }
  out += "]}";
  return out;
}

double entropy(const Pmf& p) {
  std::vector<double> terms;
  terms.reserve(p.size());
  for (double w : p.weights()) {
    if (w > 0.0) terms.push_back(-w * std::log2(w));
  }
  double h = detail::stable_sum(terms);
  return h < 0.0 ? 0.0 : h;
}

Pmf convolve(const Pmf& p, const Pmf& q, std::size_t support_cap) {
  std::size_t out_size = p.size() + q.size() - 1;
  if (out_size > support_cap) {
    throw std::length_error("convolve: result support " + std::to_string(out_size) +
                            " exceeds cap " + std::to_string(support_cap));
  }
  std::vector<double> out(out_size, 0.0);
  const std::vector<double>& a = p.weights();
  const std::vector<double>& b = q.weights();
  for (std::size_t i = 0; i < a.size(); ++i) {
    double ai = a[i];
    if (ai == 0.0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += ai * b[j];
    }
  }
  return Pmf(p.offset() + q.offset(), std::move(out));
}

double linf(const Pmf& p) {
  return *std::max_element(p.weights().begin(), p.weights().end());
}

double l1_dist(const Pmf& p, const Pmf& q) {
  std::int64_t lo = std::min(p.min_support(), q.min_support());
  std::int64_t hi = std::max(p.max_support(), q.max_support());
  // Far-apart supports reduce to two mass sums; avoids walking the gap.
  if (p.max_support() < q.min_support() || q.max_support() < p.min_support()) {
    std::vector<double> all;
    all.reserve(p.size() + q.size());
    all.insert(all.end(), p.weights().begin(), p.weights().end());
    all.insert(all.end(), q.weights().begin(), q.weights().end());
    return detail::stable_sum(all);
  }
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(hi - lo) + 1);
  for (std::int64_t k = lo; k <= hi; ++k) {
    terms.push_back(std::abs(p.at(k) - q.at(k)));
  }
  return detail::stable_sum(terms);
}

SplitResult split_at(const Pmf& p, std::int64_t n) {
  if (n < p.min_support() || n >= p.max_support()) {
    throw std::domain_error("split_at: split point " + std::to_string(n) +
                            " leaves an empty side");
  }
  std::size_t cut = static_cast<std::size_t>(n - p.offset()) + 1;
  std::vector<double> lo(p.weights().begin(),
                         p.weights().begin() + static_cast<std::ptrdiff_t>(cut));
  std::vector<double> hi(p.weights().begin() + static_cast<std::ptrdiff_t>(cut),
                         p.weights().end());
  double lower_mass = detail::stable_sum(lo);
  if (!(lower_mass > 0.0) || !(lower_mass < 1.0)) {
    throw std::domain_error("split_at: one side carries no mass");
  }
  return SplitResult{Pmf::normalized(p.offset(), std::move(lo)),
                     Pmf::normalized(n + 1, std::move(hi)), lower_mass};
}

std::int64_t find_split_point(const Pmf& p, double alpha) {
  if (!(alpha > 0.0) || alpha > 0.5 + 1e-12) {
    throw std::domain_error("find_split_point: alpha must be in (0, 1/2]");
  }
  double acc = 0.0;
  double comp = 0.0;
  // Smallest n with cdf(n) >= alpha; the upper check then decides validity.
  for (std::int64_t n = p.min_support(); n < p.max_support(); ++n) {
    double x = p.at(n);
    double t = acc + x;
    if (acc >= x) {
      comp += (acc - t) + x;
    } else {
      comp += (x - t) + acc;
    }
    acc = t;
    double c = acc + comp;
    if (c >= alpha) {
      if (c <= 1.0 - alpha + 1e-12) return n;
      throw std::runtime_error("find_split_point: no n with alpha <= cdf <= 1-alpha");
    }
  }
  throw std::runtime_error("find_split_point: no n with alpha <= cdf <= 1-alpha");
}

Pmf shift(const Pmf& p, std::int64_t k) {
  return Pmf(p.offset() + k, p.weights());
}

Pmf spread(const Pmf& q, std::int64_t factor, std::size_t support_cap) {
  if (factor < 1) {
    throw std::invalid_argument("spread: factor must be >= 1");
  }
  if (factor == 1 || q.size() == 1) {
    return Pmf(q.offset() * factor, q.weights());
  }
  std::size_t out_size = (q.size() - 1) * static_cast<std::size_t>(factor) + 1;
  if (out_size > support_cap) {
    throw std::length_error("spread: result support exceeds cap");
  }
  std::vector<double> out(out_size, 0.0);
  for (std::size_t j = 0; j < q.size(); ++j) {
    out[j * static_cast<std::size_t>(factor)] = q.weights()[j];
  }
  return Pmf(q.offset() * factor, std::move(out));
}

ConditionalPair::ConditionalPair(std::vector<double> label_weights,
                                 std::vector<Pmf> conditionals)
    : label_weights_(std::move(label_weights)), conditionals_(std::move(conditionals)) {
  if (label_weights_.empty() || label_weights_.size() != conditionals_.size()) {
    throw std::invalid_argument("ConditionalPair: label/conditional count mismatch");
  }
  for (double w : label_weights_) {
    if (std::isnan(w) || w < 0.0) {
      throw std::invalid_argument("ConditionalPair: negative label weight");
    }
  }
  double total = detail::stable_sum(label_weights_);
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw std::invalid_argument("ConditionalPair: label mass deviates from 1");
  }
}

std::string ConditionalPair::to_json_string() const {
  std::string out = "{\"labelWeights\": [";
  for (std::size_t i = 0; i < label_weights_.size(); ++i) {
    if (i) out += ", ";
    out += detail::format_g17(label_weights_[i]);
  }
  out += "], \"conditionals\": [";
  for (std::size_t i = 0; i < conditionals_.size(); ++i) {
    if (i) out += ", ";
    out += conditionals_[i].to_json_string();
  }
  out += "]}";
  return out;
}

double conditional_entropy(const ConditionalPair& cp) {
  std::vector<double> terms;
  terms.reserve(cp.label_count());
  for (std::size_t i = 0; i < cp.label_count(); ++i) {
    double w = cp.label_weights()[i];
    if (w > 0.0) terms.push_back(w * entropy(cp.conditionals()[i]));
  }
  return detail::stable_sum(terms);
}

}  // namespace depi
