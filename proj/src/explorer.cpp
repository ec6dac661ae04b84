#include "depi/explorer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include "depi/bounds.hpp"

namespace depi {

namespace {

EntropyPoint point_from(const Pmf& p, const Pmf& q, std::string generator,
                        std::uint64_t seed, std::size_t conv_cap) {
  EntropyPoint pt;
  pt.h_p = entropy(p);
  pt.h_q = entropy(q);
  pt.h_sum = entropy(convolve(p, q, conv_cap));
  pt.generator = std::move(generator);
  pt.seed = seed;
  return pt;
}

double sq(double x) { return x * x; }

double distance_to(const EntropyPoint& pt, const std::array<double, 3>& target) {
  return std::sqrt(sq(pt.h_sum - target[0]) + sq(pt.h_p - target[1]) +
                   sq(pt.h_q - target[2]));
}

}  // namespace

std::vector<EntropyPoint> sample_entropy_set(RandomSource& gen, int n,
                                             const GeneratorParams& params) {
  if (n < 1) throw std::invalid_argument("sample_entropy_set: n must be >= 1");
  std::vector<EntropyPoint> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto fam_p = static_cast<GeneratorFamily>(gen.uniform_int(0, 3));
    auto fam_q = static_cast<GeneratorFamily>(gen.uniform_int(0, 3));
    GeneratorParams gp = params;
    gp.spike_mass = 0.5 + 0.49 * gen.uniform01();
    Pmf p = random_pmf(gen, fam_p, gp);
    Pmf q = random_pmf(gen, fam_q, gp);
    std::string tag = std::string(family_name(fam_p)) + "+" + family_name(fam_q);
    out.push_back(point_from(p, q, std::move(tag), gen.next_u64(), kDefaultSupportCap));
  }
  return out;
}

Pmf pmf_with_entropy(double target, int support) {
  if (support < 1) throw std::domain_error("pmf_with_entropy: empty support");
  if (target < 0.0 || !std::isfinite(target)) {
    throw std::domain_error("pmf_with_entropy: target must be finite and >= 0");
  }
  double cap = std::log2(static_cast<double>(support));
  if (target > cap + 1e-12) {
    throw std::domain_error("pmf_with_entropy: target exceeds log2(support)");
  }
  if (target < 1e-13 || support == 1) return Pmf::point_mass(0);
  // mix of the flat window and a point mass at its left end; entropy runs
  // continuously from log2(support) down to 0 as t goes 0 -> 1
  auto mixture = [support](double t) {
    std::vector<double> w(static_cast<std::size_t>(support),
                          (1.0 - t) / static_cast<double>(support));
    w[0] += t;
    return Pmf(0, std::move(w));
  };
  double lo = 0.0;
  double hi = 1.0 - 1e-16;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (entropy(mixture(mid)) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mixture(0.5 * (lo + hi));
}

std::pair<Pmf, Pmf> boundary_construction(double h_p, double h_q) {
  if (h_p < 0.0 || h_q < 0.0 || !std::isfinite(h_p) || !std::isfinite(h_q)) {
    throw std::domain_error("boundary_construction: targets must be finite and >= 0");
  }
  auto window = [](double h) {
    int support = 1;
    while (std::log2(static_cast<double>(support)) < h - 1e-12) support *= 2;
    return support;
  };
  Pmf p = pmf_with_entropy(h_p, window(h_p));
  Pmf q = pmf_with_entropy(h_q, window(h_q));
  std::int64_t factor = static_cast<std::int64_t>(p.size());
  return {p, spread(q, factor)};
}

std::vector<DeficiencyRecord> probe_convexity(const std::vector<EntropyPoint>& points,
                                              int budget, RandomSource& gen) {
  if (points.size() < 2) {
    throw std::invalid_argument("probe_convexity: need at least two points");
  }
  std::size_t pair_count = std::min<std::size_t>(16, points.size() / 2);
  std::vector<DeficiencyRecord> records;
  records.reserve(pair_count);
  for (std::size_t k = 0; k < pair_count; ++k) {
    const EntropyPoint& a =
        points[static_cast<std::size_t>(gen.uniform_int(0, static_cast<std::int64_t>(points.size()) - 1))];
    const EntropyPoint& b =
        points[static_cast<std::size_t>(gen.uniform_int(0, static_cast<std::int64_t>(points.size()) - 1))];
    DeficiencyRecord rec;
    rec.point_a = a;
    rec.point_b = b;
    rec.midpoint = {0.5 * (a.h_sum + b.h_sum), 0.5 * (a.h_p + b.h_p),
                    0.5 * (a.h_q + b.h_q)};
    int evals = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    EntropyPoint best;
    auto consider = [&](const Pmf& p, const Pmf& q, const char* tag) {
      EntropyPoint pt = point_from(p, q, tag, gen.next_u64(), kDefaultSupportCap);
      double dist = distance_to(pt, rec.midpoint);
      if (dist < best_dist) {
        best_dist = dist;
        best = pt;
      }
      ++evals;
    };
    // the endpoints themselves are achievable candidates
    for (const EntropyPoint* e : {&a, &b}) {
      double dist = distance_to(*e, rec.midpoint);
      if (dist < best_dist) {
        best_dist = dist;
        best = *e;
      }
    }
    // structured seeds: entropy-matched pair at every dilation factor
    Pmf base_p = pmf_with_entropy(rec.midpoint[1],
                                  std::max(1, 1 << static_cast<int>(std::ceil(rec.midpoint[1])) ));
    Pmf base_q = pmf_with_entropy(rec.midpoint[2],
                                  std::max(1, 1 << static_cast<int>(std::ceil(rec.midpoint[2])) ));
    for (std::int64_t factor = 1;
         factor <= static_cast<std::int64_t>(base_p.size()) && evals < budget; ++factor) {
      consider(base_p, spread(base_q, factor), "midpoint-dilation");
    }
    // random-restart local perturbations of the generator parameters
    while (evals < budget) {
      double sigma = 0.02 + 0.3 * gen.uniform01();
      auto jitter = [&](const Pmf& r) {
        std::vector<double> w = r.weights();
        for (double& x : w) {
          if (x > 0.0) x *= std::exp(sigma * (gen.uniform01() - 0.5));
        }
        return Pmf::normalized(r.offset(), std::move(w));
      };
      std::int64_t factor = gen.uniform_int(1, static_cast<std::int64_t>(base_p.size()));
      consider(jitter(base_p), spread(jitter(base_q), factor), "perturbed");
    }
    rec.best_achieved = best;
    rec.distance = best_dist;
    records.push_back(std::move(rec));
  }
  return records;
}

TrialReport check_theorem4_conditional(const ConditionalPair& cp_a,
                                       const ConditionalPair& cp_b, double slack,
                                       std::size_t conv_cap) {
  auto start = std::chrono::steady_clock::now();
  double c = conditional_entropy(cp_a);
  double d = conditional_entropy(cp_b);
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
  double lhs = detail::stable_sum(terms) - 0.5 * (c + d);
  double rhs = g_niid(c, d).value;
  TrialReport r;
  r.check_name = "theorem4_conditional";
  r.input_digest = detail::fnv1a_hex("theorem4|" + cp_a.to_json_string() + "|" +
                                     cp_b.to_json_string());
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  r.pass = r.margin >= -slack;
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void write_entropy_csv(std::ostream& os, const std::vector<EntropyPoint>& points) {
  os << "h_sum,h_p,h_q,generator,seed\n";
  for (const EntropyPoint& pt : points) {
    os << format_g12(pt.h_sum) << ',' << format_g12(pt.h_p) << ','
       << format_g12(pt.h_q) << ',' << pt.generator << ',' << pt.seed << '\n';
  }
}

void write_deficiency_csv(std::ostream& os,
                          const std::vector<DeficiencyRecord>& records) {
  os << "ax,ay,az,bx,by,bz,mx,my,mz,best_distance\n";
  for (const DeficiencyRecord& r : records) {
    os << format_g12(r.point_a.h_sum) << ',' << format_g12(r.point_a.h_p) << ','
       << format_g12(r.point_a.h_q) << ',' << format_g12(r.point_b.h_sum) << ','
       << format_g12(r.point_b.h_p) << ',' << format_g12(r.point_b.h_q) << ','
       << format_g12(r.midpoint[0]) << ',' << format_g12(r.midpoint[1]) << ','
       << format_g12(r.midpoint[2]) << ',' << format_g12(r.distance) << '\n';
  }
}

}  // namespace depi
