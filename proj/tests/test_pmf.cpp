#include <cmath>
#include <cstdint>
#include <map>

#include "doctest.h"
#include "json.hpp"

#include "depi/pmf.hpp"
#include "depi/random.hpp"

using namespace depi;

namespace {

// Brute-force convolution oracle: enumerate all outcome pairs.
std::map<std::int64_t, double> brute_convolve(const Pmf& p, const Pmf& q) {
  std::map<std::int64_t, double> out;
  for (std::int64_t i = p.min_support(); i <= p.max_support(); ++i) {
    for (std::int64_t j = q.min_support(); j <= q.max_support(); ++j) {
      out[i + j] += p.at(i) * q.at(j);
    }
  }
  return out;
}

Pmf sample(RandomSource& gen) {
  auto family = static_cast<GeneratorFamily>(gen.uniform_int(0, 3));
  GeneratorParams params;
  params.support_max = 24;
  params.spike_mass = 0.5 + 0.45 * gen.uniform01();
  return random_pmf(gen, family, params);
}

}  // namespace

TEST_CASE("pmf construction canonicalizes and validates") {
  Pmf p(3, {0.0, 0.5, 0.5, 0.0});
  CHECK(p.offset() == 4);
  CHECK(p.size() == 2);

  Pmf flushed(0, {1e-16, 0.25, 0.5, 0.25, 1e-16});
  CHECK(flushed.offset() == 1);
  CHECK(flushed.size() == 3);

  CHECK_THROWS_AS(Pmf(0, {0.5, -0.1, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(Pmf(0, {0.5, 0.4}), std::invalid_argument);  // mass 0.9
  CHECK_THROWS_AS(Pmf(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Pmf(0, {0.0, 0.0}), std::invalid_argument);

  // interior zeros are canonical
  Pmf gap(0, {0.5, 0.0, 0.5});
  CHECK(gap.size() == 3);
  CHECK(gap.at(1) == 0.0);
  CHECK(gap.at(-7) == 0.0);
}

TEST_CASE("entropy") {
  CHECK(entropy(Pmf::uniform(0, 3)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(entropy(Pmf::point_mass(17)) == 0.0);
  CHECK(entropy(Pmf(0, {0.25, 0.5, 0.25})) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("convolve") {
  Pmf u2 = Pmf::uniform(0, 1);

  SUBCASE("point mass is the identity") {
    Pmf p(2, {0.2, 0.3, 0.5});
    Pmf c = convolve(Pmf::point_mass(0), p);
    CHECK(c == p);
  }

  SUBCASE("two-point self-convolution") {
    Pmf c = convolve(u2, u2);
    CHECK(c.offset() == 0);
    REQUIRE(c.size() == 3);
    CHECK(c.weights()[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(c.weights()[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(c.weights()[2] == doctest::Approx(0.25).epsilon(1e-15));
  }

  SUBCASE("matches the outcome-pair oracle") {
    Pmf p = Pmf::uniform(1, 2);
    Pmf q = Pmf::uniform(1, 4);
    Pmf c = convolve(p, q);
    CHECK(c.offset() == 2);
    REQUIRE(c.size() == 5);
    auto oracle = brute_convolve(p, q);
    for (auto [k, mass] : oracle) {
      CHECK(c.at(k) == doctest::Approx(mass).epsilon(1e-13));
    }
    CHECK(c.weights()[0] == doctest::Approx(0.125));
    CHECK(c.weights()[1] == doctest::Approx(0.25));
  }

  SUBCASE("support cap") {
    CHECK_THROWS_AS(convolve(Pmf::uniform(0, 40), Pmf::uniform(0, 40), 64),
                    std::length_error);
  }
}

TEST_CASE("linf and l1_dist") {
  CHECK(linf(Pmf::uniform(0, 3)) == 0.25);
  CHECK(linf(Pmf::point_mass(0)) == 1.0);
  CHECK(linf(Pmf(0, {0.2, 0.3, 0.5})) == 0.5);

  Pmf p(0, {0.2, 0.3, 0.5});
  CHECK(l1_dist(p, p) == 0.0);
  CHECK(l1_dist(Pmf::uniform(0, 1), Pmf::uniform(10, 11)) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK(l1_dist(Pmf::point_mass(0), Pmf(0, {0.5, 0.5})) ==
        doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("split_at") {
  SUBCASE("three-point example") {
    Pmf p(0, {0.2, 0.3, 0.5});
    SplitResult s = split_at(p, 0);
    CHECK(s.lower == Pmf::point_mass(0));
    CHECK(s.lower_mass == doctest::Approx(0.2).epsilon(1e-15));
    REQUIRE(s.upper.size() == 2);
    CHECK(s.upper.offset() == 1);
    CHECK(s.upper.weights()[0] == doctest::Approx(0.375).epsilon(1e-14));
    CHECK(s.upper.weights()[1] == doctest::Approx(0.625).epsilon(1e-14));
  }

  SUBCASE("uniform halves") {
    SplitResult s = split_at(Pmf::uniform(0, 3), 1);
    CHECK(s.lower_mass == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.lower == Pmf::uniform(0, 1));
    CHECK(s.upper == Pmf::uniform(2, 3));
  }

  SUBCASE("reconstruction identity on a truncated geometric") {
    Pmf p(2, {0.5, 0.25, 0.125, 0.0625, 0.0625});
    for (std::int64_t n = p.min_support(); n < p.max_support(); ++n) {
      SplitResult s = split_at(p, n);
      for (std::int64_t k = p.min_support(); k <= p.max_support(); ++k) {
        double rebuilt = s.lower_mass * s.lower.at(k) + (1.0 - s.lower_mass) * s.upper.at(k);
        CHECK(std::abs(rebuilt - p.at(k)) <= 1e-12);
      }
    }
  }

  SUBCASE("empty sides rejected") {
    Pmf p(0, {0.2, 0.3, 0.5});
    CHECK_THROWS_AS(split_at(p, -1), std::domain_error);
    CHECK_THROWS_AS(split_at(p, 2), std::domain_error);
  }
}

TEST_CASE("find_split_point") {
  CHECK(find_split_point(Pmf::uniform(0, 1), 0.25) == 0);
  CHECK(find_split_point(Pmf(0, {0.9, 0.1}), 0.05) == 0);
  CHECK(find_split_point(Pmf(0, {0.2, 0.3, 0.5}), 0.25) == 1);

  CHECK_THROWS_AS(find_split_point(Pmf::point_mass(0), 0.25), std::runtime_error);
  CHECK_THROWS_AS(find_split_point(Pmf::uniform(0, 1), 0.0), std::domain_error);
  CHECK_THROWS_AS(find_split_point(Pmf::uniform(0, 1), 0.75), std::domain_error);

  // the smallest valid n is returned
  CHECK(find_split_point(Pmf::uniform(0, 7), 0.125) == 0);
}

TEST_CASE("shift") {
  Pmf p(0, {0.2, 0.3, 0.5});
  CHECK(shift(p, 0) == p);
  CHECK(entropy(shift(p, 7)) == entropy(p));
  Pmf q = Pmf::uniform(0, 2);
  Pmf lhs = convolve(shift(p, 4), shift(q, -2));
  Pmf rhs = shift(convolve(p, q), 2);
  CHECK(lhs == rhs);
}

TEST_CASE("spread") {
  Pmf q(0, {0.25, 0.5, 0.25});
  CHECK(spread(q, 1) == q);

  Pmf s = spread(Pmf::uniform(0, 1), 2);
  CHECK(s.size() == 3);
  CHECK(s.at(0) == 0.5);
  CHECK(s.at(1) == 0.0);
  CHECK(s.at(2) == 0.5);

  // entropy preserved bit-exactly: same weights in the same order
  Pmf wide = spread(q, 5);
  CHECK(entropy(wide) == entropy(q));

  // additivity when the partner lives on {0..factor-1}
  Pmf p = Pmf::uniform(0, 1);
  Pmf qt = spread(Pmf::uniform(0, 1), 2);
  CHECK(entropy(convolve(p, qt)) == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(spread(q, 0), std::invalid_argument);
  CHECK_THROWS_AS(spread(Pmf::uniform(0, 4000), 1000, 1 << 20), std::length_error);
}

TEST_CASE("conditional pairs") {
  ConditionalPair single({1.0}, {Pmf::uniform(0, 3)});
  CHECK(conditional_entropy(single) == doctest::Approx(2.0).epsilon(1e-12));

  ConditionalPair two({0.5, 0.5}, {Pmf::uniform(0, 1), Pmf::uniform(0, 3)});
  CHECK(conditional_entropy(two) == doctest::Approx(1.5).epsilon(1e-12));

  ConditionalPair zero_label({0.0, 1.0}, {Pmf::uniform(0, 63), Pmf::uniform(0, 1)});
  CHECK(conditional_entropy(zero_label) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(ConditionalPair({0.5, 0.4}, {Pmf(), Pmf()}), std::invalid_argument);
  CHECK_THROWS_AS(ConditionalPair({1.0}, {Pmf(), Pmf()}), std::invalid_argument);
}

TEST_CASE("pmf json serialization") {
  Pmf p(-2, {0.25, 0.5, 0.25});
  auto parsed = nlohmann::json::parse(p.to_json_string());
  CHECK(parsed["offset"] == -2);
  CHECK(parsed["weights"].size() == 3);
  CHECK(parsed["weights"][1] == 0.5);
}

TEST_CASE("random generators") {
  SUBCASE("deterministic replay") {
    RandomSource a(1234);
    RandomSource b(1234);
    for (int i = 0; i < 16; ++i) {
      auto family = static_cast<GeneratorFamily>(i % 4);
      CHECK(random_pmf(a, family) == random_pmf(b, family));
    }
  }

  SUBCASE("spiky mixture dominates at the spike") {
    RandomSource gen(7);
    GeneratorParams params;
    params.spike_mass = 0.95;
    for (int i = 0; i < 32; ++i) {
      CHECK(linf(random_pmf(gen, GeneratorFamily::kSpikyMixture, params)) >= 0.95);
    }
  }

  SUBCASE("flat family entropy bounded by window size") {
    RandomSource gen(11);
    GeneratorParams params;
    params.support_min = 16;
    params.support_max = 16;
    for (int i = 0; i < 32; ++i) {
      double h = entropy(random_pmf(gen, GeneratorFamily::kFlatRandom, params));
      CHECK(h > 0.0);
      CHECK(h <= 4.0);
    }
  }

  SUBCASE("support cap respected across families") {
    RandomSource gen(5);
    GeneratorParams params;
    params.support_max = 64;
    for (int i = 0; i < 200; ++i) {
      Pmf p = random_pmf(gen, static_cast<GeneratorFamily>(i % 4), params);
      CHECK(p.size() <= 64);
    }
  }

  SUBCASE("invalid params") {
    RandomSource gen(3);
    GeneratorParams params;
    params.support_max = 0;
    CHECK_THROWS_AS(random_pmf(gen, GeneratorFamily::kFlatRandom, params),
                    std::invalid_argument);
  }
}

TEST_CASE("sampled distribution properties") {
  RandomSource gen(20240809);

  SUBCASE("convolution entropy bounds") {
    for (int i = 0; i < 150; ++i) {
      Pmf p = sample(gen);
      Pmf q = sample(gen);
      double hp = entropy(p);
      double hq = entropy(q);
      double hc = entropy(convolve(p, q));
      CHECK(hc >= std::max(hp, hq) - 1e-9);
      CHECK(hc <= hp + hq + 1e-9);
    }
  }

  SUBCASE("convolve commutes and associates") {
    for (int i = 0; i < 60; ++i) {
      Pmf p = sample(gen);
      Pmf q = sample(gen);
      Pmf r = sample(gen);
      Pmf pq = convolve(p, q);
      Pmf qp = convolve(q, p);
      REQUIRE(pq.offset() == qp.offset());
      REQUIRE(pq.size() == qp.size());
      for (std::size_t k = 0; k < pq.size(); ++k) {
        CHECK(std::abs(pq.weights()[k] - qp.weights()[k]) <= 1e-12);
      }
      Pmf left = convolve(pq, r);
      Pmf right = convolve(p, convolve(q, r));
      REQUIRE(left.offset() == right.offset());
      REQUIRE(left.size() == right.size());
      for (std::size_t k = 0; k < left.size(); ++k) {
        CHECK(std::abs(left.weights()[k] - right.weights()[k]) <= 1e-12);
      }
    }
  }

  SUBCASE("split reconstruction") {
    for (int i = 0; i < 100; ++i) {
      Pmf p = sample(gen);
      if (p.size() < 2) continue;
      double alpha = 0.5 * (1.0 - linf(p));
      if (alpha <= 0.0) continue;
      std::int64_t n = find_split_point(p, alpha);
      SplitResult s = split_at(p, n);
      CHECK(s.lower.max_support() < s.upper.min_support());
      for (std::int64_t k = p.min_support(); k <= p.max_support(); ++k) {
        double rebuilt =
            s.lower_mass * s.lower.at(k) + (1.0 - s.lower_mass) * s.upper.at(k);
        CHECK(std::abs(rebuilt - p.at(k)) <= 1e-12);
      }
    }
  }

  SUBCASE("spread entropy and additivity") {
    for (int i = 0; i < 80; ++i) {
      Pmf q = sample(gen);
      std::int64_t factor = gen.uniform_int(1, 6);
      Pmf wide = spread(q, factor);
      CHECK(entropy(wide) == entropy(q));
      // partner supported on {0..factor-1}
      std::vector<double> w(static_cast<std::size_t>(factor));
      for (double& x : w) x = gen.exponential() + 1e-9;
      Pmf p = Pmf::normalized(0, std::move(w));
      double sum = entropy(convolve(p, wide));
      CHECK(std::abs(sum - entropy(p) - entropy(q)) <= 1e-9);
    }
  }

  SUBCASE("l1 triangle inequality") {
    for (int i = 0; i < 100; ++i) {
      Pmf p = sample(gen);
      Pmf q = sample(gen);
      Pmf r = sample(gen);
      CHECK(l1_dist(p, r) <= l1_dist(p, q) + l1_dist(q, r) + 1e-12);
    }
  }
}
