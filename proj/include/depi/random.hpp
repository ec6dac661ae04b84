#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "depi/pmf.hpp"

namespace depi {

/// Deterministic random stream. Wraps std::mt19937_64 but derives all
/// variates from raw 64-bit draws so sequences are identical across
/// platforms and standard-library implementations.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Standard exponential variate, -ln(1 - U).
  double exponential();

  /// Stateless seed derivation for per-trial streams: mixes a master seed
  /// with a stream id and an index (splitmix64 finalizer).
  static std::uint64_t derive(std::uint64_t master, std::uint64_t stream,
                              std::uint64_t index);

 private:
  std::mt19937_64 engine_;
};

enum class GeneratorFamily {
  kFlatRandom,       // normalized exponentials on a random-size window
  kSpikyMixture,     // point mass at a random site plus flat remainder
  kTwoCluster,       // two windows separated by a random gap
  kSpreadComposite,  // spread of a smaller random pmf
};

const char* family_name(GeneratorFamily family);

struct GeneratorParams {
  int support_max = 64;    // cap on generated support size
  int support_min = 2;     // lower bound on window sizes (>= 1)
  double spike_mass = 0.9; // dominant mass for kSpikyMixture
  int max_offset = 32;     // supports are placed in [-max_offset, max_offset]
  int spread_max = 8;      // largest dilation factor for kSpreadComposite
};

/// Draws a valid canonical Pmf. Deterministic given the source state,
/// family and params. Throws std::invalid_argument for unusable params.
Pmf random_pmf(RandomSource& gen, GeneratorFamily family,
               const GeneratorParams& params = {});

}  // namespace depi
