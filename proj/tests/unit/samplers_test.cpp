#include <gtest/gtest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <map>
#include <set>

#include "oracles.hpp"
#include "stoes/laws.hpp"
#include "stoes/mapping.hpp"
#include "stoes/rng.hpp"
#include "stoes/samplers.hpp"

namespace stoes {
namespace {

/// Upper-tail p-value of Pearson's statistic for observed counts against
/// expected probabilities (cells with tiny expectation are pooled).
template <typename Key>
double chi_square_p(const std::map<Key, std::uint64_t>& observed, const std::map<Key, double>& expected,
                    std::uint64_t draws) {
  double stat = 0;
  double pooled_obs = 0, pooled_exp = 0;
  int cells = 0;
  for (const auto& [key, p] : expected) {
    const auto it = observed.find(key);
    const double o = it == observed.end() ? 0.0 : static_cast<double>(it->second);
    const double e = p * static_cast<double>(draws);
    if (e < 5) {
      pooled_obs += o;
      pooled_exp += e;
      continue;
    }
    stat += (o - e) * (o - e) / e;
    ++cells;
  }
  if (pooled_exp > 0) {
    stat += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / std::max(pooled_exp, 1.0);
    ++cells;
  }
  for (const auto& [key, count] : observed) {
    if (!expected.count(key)) ADD_FAILURE() << "draw outside the support";
  }
  const boost::math::chi_squared dist(std::max(cells - 1, 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

constexpr double kMinP = 1e-6;

TEST(Rng, DeterministicAndStreamsDiffer) {
  RngStream a(42), b(42), c = RngStream::for_stream(42, 1);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, c.next());
  }
  EXPECT_EQ(c.seed(), 43U);
}

TEST(Rng, BoundedAndUniform) {
  RngStream rng(1);
  std::map<std::uint64_t, std::uint64_t> counts;
  std::map<std::uint64_t, double> expected;
  for (std::uint64_t v = 0; v < 7; ++v) expected[v] = 1.0 / 7;
  const std::uint64_t draws = 700'000;
  for (std::uint64_t i = 0; i < draws; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7U);
    ++counts[v];
  }
  EXPECT_GT(chi_square_p(counts, expected, draws), kMinP);
  double sum = 0;
  for (int i = 0; i < 100'000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100'000, 0.5, 4 * std::sqrt(1.0 / 12 / 100'000));
  EXPECT_EQ(rng.below(1), 0U);
}

std::uint64_t encode(std::span<const std::uint32_t> image, std::size_t base) {
  std::uint64_t code = 0;
  for (auto v : image) code = code * base + v;
  return code;
}

TEST(MappingSampler, UniformOverFixedPointFreeMappings) {
  const std::size_t n = 4;
  std::map<std::uint64_t, double> expected;
  oracle::for_each_toes_mapping(n, [&](const std::vector<std::uint32_t>& f) { expected[encode(f, n)] = 1.0 / 81; });
  ASSERT_EQ(expected.size(), 81U);
  RngStream rng(3);
  std::map<std::uint64_t, std::uint64_t> counts;
  const std::uint64_t draws = 400'000;
  for (std::uint64_t i = 0; i < draws; ++i) ++counts[encode(sample_mapping(n, rng).image(), n)];
  EXPECT_GT(chi_square_p(counts, expected, draws), kMinP);
}

TEST(MappingSampler, StandardUniform) {
  const std::size_t n = 3;
  std::map<std::uint64_t, double> expected;
  for (std::uint64_t c = 0; c < 27; ++c) expected[c] = 1.0 / 27;
  RngStream rng(4);
  std::map<std::uint64_t, std::uint64_t> counts;
  const std::uint64_t draws = 270'000;
  for (std::uint64_t i = 0; i < draws; ++i) ++counts[encode(sample_standard_mapping(n, rng), n)];
  EXPECT_GT(chi_square_p(counts, expected, draws), kMinP);
}

void check_esf(Spectrum (*sampler)(std::size_t, double, RngStream&), double theta, const BigRat& theta_q,
               std::uint64_t seed) {
  const std::size_t n = 7;
  std::map<Spectrum, double> expected;
  for_each_spectrum(n, 1, [&](const Spectrum& s) { expected[s] = Float(esf_pmf(n, s, theta_q)).to_double(); });
  RngStream rng(seed);
  std::map<Spectrum, std::uint64_t> counts;
  const std::uint64_t draws = 300'000;
  for (std::uint64_t i = 0; i < draws; ++i) {
    const Spectrum s = sampler(n, theta, rng);
    ASSERT_TRUE(s.complete());
    ++counts[s];
  }
  EXPECT_GT(chi_square_p(counts, expected, draws), kMinP);
}

TEST(EsfSampler, FellerMatchesEsf) {
  check_esf(sample_esf_feller, 0.5, BigRat(1, 2), 5);
  check_esf(sample_esf_feller, 1.0, BigRat(1), 6);
}

TEST(EsfSampler, CrpMatchesEsf) {
  check_esf(sample_esf_crp, 0.5, BigRat(1, 2), 7);
  check_esf(sample_esf_crp, 2.0, BigRat(2), 8);
}

void check_component_sampler(EsfMethod method, std::uint64_t seed) {
  const std::size_t n = 8;
  std::map<Spectrum, double> expected;
  for_each_spectrum(n, 2, [&](const Spectrum& s) { expected[s] = Float(component_pmf(n, s, Model::toes)).to_double(); });
  const ToesComponentSampler sampler(n, method);
  RngStream rng(seed);
  std::map<Spectrum, std::uint64_t> counts;
  const std::uint64_t draws = 200'000;
  for (std::uint64_t i = 0; i < draws; ++i) {
    const ComponentDraw d = sampler(rng);
    ASSERT_GE(d.attempts, 1U);
    ++counts[d.spectrum];
  }
  EXPECT_GT(chi_square_p(counts, expected, draws), kMinP);
}

TEST(ComponentSampler, MatchesExactLaw) {
  check_component_sampler(EsfMethod::feller, 9);
  check_component_sampler(EsfMethod::crp, 10);
}

TEST(ComponentSampler, FactorsAreProbabilities) {
  const ToesComponentSampler sampler(50);
  for (std::size_t j = 2; j <= 50; ++j) {
    EXPECT_GT(sampler.acceptance_factor(j), 0.0);
    EXPECT_LE(sampler.acceptance_factor(j), 1.0);
  }
}

TEST(ComponentSampler, MeanAttemptsIsInverseRate) {
  const std::size_t n = 10;
  RngStream rng(11);
  const std::uint64_t draws = 100'000;
  double sum = 0, sum_sq = 0;
  for (std::uint64_t i = 0; i < draws; ++i) {
    const double a = static_cast<double>(sample_toes_components(n, rng).attempts);
    sum += a;
    sum_sq += a * a;
  }
  const double mean = sum / draws;
  const double se = std::sqrt((sum_sq / draws - mean * mean) / draws);
  EXPECT_NEAR(mean, 1.0 / rejection_acceptance_rate(n).to_double(), 4 * se);
}

TEST(CoreSizeSampler, CumulativeMatchesExactLaw) {
  for (std::size_t n : {2, 10, 57}) {
    const CoreSizeSampler s(n);
    ASSERT_EQ(s.cumulative().size(), n - 1);
    BigRat running = 0;
    for (std::size_t r = 2; r <= n; ++r) {
      running += core_size_pmf(n, r, Model::toes);
      EXPECT_NEAR(s.cumulative()[r - 2], Float(running).to_double(), 1e-15);
    }
    EXPECT_EQ(s.cumulative().back(), 1.0);
  }
}

TEST(CoreSizeSampler, LargeNUsesRecurrence) {
  const std::size_t n = 1500;
  const CoreSizeSampler s(n);
  EXPECT_EQ(s.cumulative().back(), 1.0);
  BigRat running = 0;
  for (std::size_t r = 2; r <= 120; ++r) {
    running += core_size_pmf(n, r, Model::toes);
    EXPECT_NEAR(s.cumulative()[r - 2], Float(running).to_double(), 1e-12) << r;
  }
  for (std::size_t i = 1; i < s.cumulative().size(); ++i) ASSERT_GE(s.cumulative()[i], s.cumulative()[i - 1]);
}

TEST(CoreSizeSampler, DrawsFollowLaw) {
  const std::size_t n = 12;
  std::map<std::size_t, double> expected;
  for (std::size_t r = 2; r <= n; ++r) expected[r] = Float(core_size_pmf(n, r, Model::toes)).to_double();
  RngStream rng(12);
  std::map<std::size_t, std::uint64_t> counts;
  const std::uint64_t draws = 300'000;
  for (std::uint64_t i = 0; i < draws; ++i) ++counts[sample_core_size_toes(n, rng)];
  EXPECT_GT(chi_square_p(counts, expected, draws), kMinP);
}

double cycle_type_probability(std::size_t r, const Spectrum& s) {
  // Cauchy: r! / prod j^{a_j} a_j!, over the D_r derangements.
  BigInt den = 1;
  for (std::size_t j = 1; j <= r; ++j) den *= int_pow(BigInt(static_cast<unsigned long>(j)), s.count(j)) * factorial(s.count(j));
  return Float(make_rat(factorial(r), den * derangement_number(r))).to_double();
}

TEST(DerangementSampler, CycleTypeFollowsCauchy) {
  const std::size_t r = 7;
  std::map<Spectrum, double> expected;
  for_each_spectrum(r, 2, [&](const Spectrum& s) { expected[s] = cycle_type_probability(r, s); });
  RngStream rng(13);
  std::map<Spectrum, std::uint64_t> counts;
  const std::uint64_t draws = 200'000;
  for (std::uint64_t i = 0; i < draws; ++i) ++counts[sample_derangement_cycles(r, rng)];
  EXPECT_GT(chi_square_p(counts, expected, draws), kMinP);
}

TEST(CoreJointSampler, JointLawOfCoreAndCycles) {
  const std::size_t n = 7;
  std::map<std::pair<std::size_t, Spectrum>, double> expected;
  for (std::size_t r = 2; r <= n; ++r) {
    const double pr = Float(core_size_pmf(n, r, Model::toes)).to_double();
    for_each_spectrum(r, 2, [&](const Spectrum& s) {
      Spectrum full(n);
      for (std::size_t j = 2; j <= r; ++j) full.add(j, s.count(j));
      expected[{r, full}] = pr * cycle_type_probability(r, s);
    });
  }
  const ToesCoreSampler sampler(n);
  RngStream rng(14);
  std::map<std::pair<std::size_t, Spectrum>, std::uint64_t> counts;
  const std::uint64_t draws = 300'000;
  for (std::uint64_t i = 0; i < draws; ++i) {
    const auto d = sampler(rng);
    ASSERT_EQ(d.cycles.weight(), d.core_size);
    ++counts[{d.core_size, d.cycles}];
  }
  EXPECT_GT(chi_square_p(counts, expected, draws), kMinP);
}

TEST(CoreJointSampler, SizeTwoIsOnePair) {
  RngStream rng(15);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(sample_toes_core(2, rng), Spectrum(2, {{2, 1}}));
}

}  // namespace
}  // namespace stoes
