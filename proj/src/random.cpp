#include "depi/random.hpp"

#include <cmath>

namespace depi {

std::int64_t RandomSource::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: hi < lo");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<std::int64_t>(next_u64());
  return lo + static_cast<std::int64_t>(next_u64() % span);
}

double RandomSource::exponential() {
  return -std::log(1.0 - uniform01());
}

std::uint64_t RandomSource::derive(std::uint64_t master, std::uint64_t stream,
                                   std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (stream + 1) +
                    0xbf58476d1ce4e5b9ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

const char* family_name(GeneratorFamily family) {
  switch (family) {
    case GeneratorFamily::kFlatRandom: return "flat-random";
    case GeneratorFamily::kSpikyMixture: return "spiky-mixture";
    case GeneratorFamily::kTwoCluster: return "two-cluster";
    case GeneratorFamily::kSpreadComposite: return "spread-composite";
  }
  return "unknown";
}

namespace {

std::vector<double> exponential_weights(RandomSource& gen, int n) {
  std::vector<double> w(static_cast<std::size_t>(n));
  for (double& x : w) x = gen.exponential() + 1e-12;
  return w;
}

Pmf flat_random(RandomSource& gen, const GeneratorParams& p) {
  int lo = std::min(std::max(1, p.support_min), p.support_max);
  int n = static_cast<int>(gen.uniform_int(lo, p.support_max));
  std::int64_t off = gen.uniform_int(-p.max_offset, p.max_offset);
  return Pmf::normalized(off, exponential_weights(gen, n));
}

Pmf spiky_mixture(RandomSource& gen, const GeneratorParams& p) {
  int n = static_cast<int>(gen.uniform_int(std::max(2, p.support_min), p.support_max));
  std::int64_t off = gen.uniform_int(-p.max_offset, p.max_offset);
  double spike = p.spike_mass;
  if (!(spike > 0.0) || spike >= 1.0) {
    throw std::invalid_argument("random_pmf: spike_mass must be in (0, 1)");
  }
  std::vector<double> w = exponential_weights(gen, n);
  double total = detail::stable_sum(w);
  for (double& x : w) x *= (1.0 - spike) / total;
  std::size_t site = static_cast<std::size_t>(gen.uniform_int(0, n - 1));
  w[site] += spike;
  return Pmf(off, std::move(w));
}

Pmf two_cluster(RandomSource& gen, const GeneratorParams& p) {
  if (p.support_max < 4) return flat_random(gen, p);
  // The whole window (clusters plus gap) stays within the support cap.
  int n1 = static_cast<int>(gen.uniform_int(1, p.support_max / 4));
  int n2 = static_cast<int>(gen.uniform_int(1, p.support_max / 4));
  std::int64_t gap = gen.uniform_int(1, p.support_max - n1 - n2);
  std::int64_t off = gen.uniform_int(-p.max_offset, p.max_offset);
  double mass1 = 0.05 + 0.9 * gen.uniform01();
  std::vector<double> w1 = exponential_weights(gen, n1);
  std::vector<double> w2 = exponential_weights(gen, n2);
  double t1 = detail::stable_sum(w1);
  double t2 = detail::stable_sum(w2);
  std::vector<double> w(static_cast<std::size_t>(n1 + gap + n2), 0.0);
  for (int i = 0; i < n1; ++i) w[static_cast<std::size_t>(i)] = mass1 * w1[static_cast<std::size_t>(i)] / t1;
  for (int i = 0; i < n2; ++i) {
    w[static_cast<std::size_t>(n1) + static_cast<std::size_t>(gap) + static_cast<std::size_t>(i)] =
        (1.0 - mass1) * w2[static_cast<std::size_t>(i)] / t2;
  }
  return Pmf(off, std::move(w));
}

Pmf spread_composite(RandomSource& gen, const GeneratorParams& p) {
  std::int64_t factor = gen.uniform_int(2, std::max(2, p.spread_max));
  GeneratorParams inner = p;
  inner.support_max = std::max(2, static_cast<int>((p.support_max - 1) / factor + 1));
  inner.support_min = std::min(inner.support_min, inner.support_max);
  Pmf base = flat_random(gen, inner);
  return spread(base, factor);
}

}  // namespace

Pmf random_pmf(RandomSource& gen, GeneratorFamily family,
               const GeneratorParams& params) {
  if (params.support_max < 1) {
    throw std::invalid_argument("random_pmf: support_max must be >= 1");
  }
  switch (family) {
    case GeneratorFamily::kFlatRandom: return flat_random(gen, params);
    case GeneratorFamily::kSpikyMixture: return spiky_mixture(gen, params);
    case GeneratorFamily::kTwoCluster: return two_cluster(gen, params);
    case GeneratorFamily::kSpreadComposite: return spread_composite(gen, params);
  }
  throw std::invalid_argument("random_pmf: unknown family");
}

}  // namespace depi
