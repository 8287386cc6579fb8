#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <stdexcept>

#include "oracles.hpp"
#include "stoes/exact.hpp"
#include "stoes/laws.hpp"

namespace stoes {
namespace {

BigRat frac(long p, long q) {
  BigRat r(p, q);
  r.canonicalize();
  return r;
}

/// Exact laws of the uniform mapping [n] -> [n] by enumerating all n^n functions.
struct StandardEnumeration {
  std::size_t n;
  BigInt total = 0;
  std::map<Spectrum, BigInt> components;
  std::vector<BigInt> component_sum, cycle_sum, core;
  BigInt num_components = 0;

  explicit StandardEnumeration(std::size_t n_) : n(n_), component_sum(n_ + 1), cycle_sum(n_ + 1), core(n_ + 1) {
    std::vector<std::uint32_t> f(n, 0);
    for (;;) {
      const oracle::Structure s = oracle::analyse(f);
      ++total;
      Spectrum spec(n);
      for (const auto& [size, count] : s.components) {
        spec.add(size, count);
        component_sum[size] += count;
        num_components += count;
      }
      for (const auto& [len, count] : s.cycles) cycle_sum[len] += count;
      ++core[s.core];
      ++components[spec];
      std::size_t pos = 0;
      while (pos < n && ++f[pos] == n) f[pos++] = 0;
      if (pos == n) break;
    }
  }
  BigRat p(const BigInt& count) const { return make_rat(count, total); }
};

TEST(Poisson, LambdaAndOmega) {
  for (std::uint64_t j = 2; j <= 40; ++j) {
    const double omega = toes_omega(j);
    EXPECT_NEAR(lambda_toes(j).to_double(), omega / static_cast<double>(j), 1e-15 * omega);
    EXPECT_EQ(lambda_toes(j).epow(), -static_cast<std::int64_t>(j));
    // omega_j = e^{-j} sum_{i <= j-2} j^i / i!
    const Float direct = exp(Float(-static_cast<long>(j))) * Float(poisson_partial_sum(j, static_cast<std::int64_t>(j) - 2));
    EXPECT_NEAR(omega, direct.to_double(), 1e-15);
    EXPECT_LT(omega, 0.5);
  }
  EXPECT_THROW(lambda_toes(1), std::invalid_argument);
  EXPECT_EQ(lambda_std(3).coeff(), poisson_partial_sum(3, 2) / 3);
}

TEST(Poisson, OmegaIterativeAgreesWithIncompleteGamma) {
  for (std::uint64_t j : {2, 3, 10, 100, 699, 700, 701, 1500, 5000}) {
    const double a = toes_omega(j);
    const double b = toes_omega_iterative(j).to_double();
    EXPECT_NEAR(a, b, 1e-12 * b) << j;
  }
}

TEST(Components, ConnectedCountMatchesCountByCycleLength) {
  for (std::uint64_t i = 2; i <= 30; ++i) EXPECT_EQ(connected_toes_count(i), oracle::connected_count(i)) << i;
  EXPECT_EQ(connected_toes_count(2), 1);
  EXPECT_EQ(connected_toes_count(3), 8);
}

TEST(Components, SingleComponentProbability) {
  for (std::uint64_t n = 2; n <= 15; ++n) {
    const ScaledExp p = single_component_prob(n, Model::toes);
    EXPECT_EQ(p.epow(), 0);
    EXPECT_EQ(p.as_rational(), make_rat(oracle::connected_count(n), oracle::toes_total(n)));
  }
  // Connected functions on 3 points: 17 of 27.
  EXPECT_EQ(single_component_prob(3, Model::standard).as_rational(), frac(17, 27));
}

TEST(Components, ToesPmfMatchesConnectedCountOracle) {
  for (std::uint64_t n = 2; n <= 9; ++n) {
    BigRat total = 0;
    for_each_spectrum(n, 2, [&](const Spectrum& s) {
      const BigRat p = component_pmf(n, s, Model::toes);
      EXPECT_EQ(p, oracle::component_pmf(n, s)) << n << " " << s.to_string();
      total += p;
    });
    EXPECT_EQ(total, 1);
  }
  EXPECT_EQ(component_pmf(4, Spectrum(4, {{2, 2}}), Model::toes), frac(1, 27));
  EXPECT_EQ(component_pmf(5, Spectrum(5, {{2, 1}}), Model::toes), 0);
  EXPECT_THROW(component_pmf(4, Spectrum(4, {{1, 2}, {2, 1}}), Model::toes), std::invalid_argument);
}

TEST(Components, ToesPmfDoesNotDependOnFreeParameter) {
  for (std::uint64_t n : {4, 7, 10}) {
    for_each_spectrum(n, 2, [&](const Spectrum& s) {
      const BigRat base = component_pmf_toes_at(n, s, -1);
      for (std::int64_t x : {-3, 0, 2}) EXPECT_EQ(component_pmf_toes_at(n, s, x), base);
    });
  }
}

TEST(Components, StandardPmfMatchesEnumeration) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const StandardEnumeration e(n);
    for (const auto& [spec, count] : e.components) EXPECT_EQ(component_pmf(n, spec, Model::standard), e.p(count));
    for (std::size_t j = 1; j <= n; ++j) EXPECT_EQ(mean_component_count(n, j, Model::standard), e.p(e.component_sum[j]));
    EXPECT_EQ(expected_num_components_std(n), e.p(e.num_components));
  }
}

TEST(Components, MeansMatchOracle) {
  for (std::uint64_t n = 2; n <= 10; ++n) {
    for (std::uint64_t j = 2; j <= n; ++j) EXPECT_EQ(mean_component_count(n, j, Model::toes), oracle::component_mean(n, j));
  }
}

TEST(Components, SizesAddUpToN) {
  for (std::uint64_t n : {2, 5, 10, 40}) {
    BigRat toes = 0, standard = 0;
    for (std::uint64_t j = 1; j <= n; ++j) {
      standard += mean_component_count(n, j, Model::standard) * j;
      if (j >= 2) toes += mean_component_count(n, j, Model::toes) * j;
    }
    EXPECT_EQ(toes, n);
    EXPECT_EQ(standard, n);
  }
}

TEST(Components, FactorialAndMixedMomentsMatchPmf) {
  for (std::uint64_t n = 4; n <= 9; ++n) {
    std::map<std::pair<std::uint64_t, std::uint64_t>, BigRat> mixed;
    std::map<std::uint64_t, BigRat> second;
    for_each_spectrum(n, 2, [&](const Spectrum& s) {
      const BigRat p = component_pmf(n, s, Model::toes);
      for (std::uint64_t i = 2; i <= n; ++i) {
        second[i] += p * (s.count(i) * (s.count(i) >= 1 ? s.count(i) - 1 : 0));
        for (std::uint64_t j = i + 1; j <= n; ++j) mixed[{i, j}] += p * (s.count(i) * s.count(j));
      }
    });
    for (std::uint64_t i = 2; i <= n; ++i) {
      EXPECT_EQ(factorial_moment_toes(n, {{i, 2}}), second[i]) << n << " " << i;
      for (std::uint64_t j = i + 1; j <= n; ++j) EXPECT_EQ(mixed_moment_toes(n, i, j), (mixed[{i, j}]));
    }
  }
  EXPECT_THROW(mixed_moment_toes(8, 3, 3), std::invalid_argument);
  EXPECT_EQ(mixed_moment_toes(8, 4, 5), 0);
}

TEST(Components, ExpectedCountTwoWays) {
  for (std::uint64_t n = 2; n <= 50; ++n) {
    EXPECT_EQ(expected_num_components_toes_by_components(n), expected_num_components_toes_by_cycles(n)) << n;
  }
  EXPECT_EQ(to_fixed(expected_num_components_toes(10), 3), "1.251");
  EXPECT_EQ(to_fixed(expected_num_components_std(10), 3), "1.913");
}

TEST(Components, ReferenceToesColumn) {
  const char* expected[] = {"0.0744", "0.0771", "0.0734", "0.0699", "0.0673", "0.0654", "0.0608", "0.0000", "0.7629"};
  for (std::uint64_t j = 2; j <= 10; ++j) EXPECT_EQ(to_fixed(mean_component_count(10, j, Model::toes), 4), expected[j - 2]);
  EXPECT_EQ(mean_component_count(10, 9, Model::toes), 0);
  EXPECT_EQ(to_fixed(mean_component_count(10, 1, Model::standard), 4), "0.3874");
}

TEST(Core, ToesPmfMatchesForestCount) {
  for (std::uint64_t n = 2; n <= 30; ++n) {
    BigRat total = 0;
    for (std::uint64_t r = 2; r <= n; ++r) {
      EXPECT_EQ(core_size_pmf(n, r, Model::toes), oracle::core_size_pmf(n, r)) << n << " " << r;
      total += core_size_pmf(n, r, Model::toes);
    }
    EXPECT_EQ(total, 1);
  }
  const char* expected[] = {"0.2581", "0.2065", "0.2168", "0.1590", "0.0958", "0.0447", "0.0153", "0.0034", "0.0004"};
  for (std::uint64_t r = 2; r <= 10; ++r) EXPECT_EQ(to_fixed(core_size_pmf(10, r, Model::toes), 4), expected[r - 2]);
}

TEST(Core, StandardMatchesEnumerationAndTail) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const StandardEnumeration e(n);
    for (std::size_t r = 1; r <= n; ++r) EXPECT_EQ(core_size_pmf(n, r, Model::standard), e.p(e.core[r]));
    for (std::size_t j = 1; j <= n; ++j) EXPECT_EQ(mean_cycle_count(n, j, Model::standard), e.p(e.cycle_sum[j]));
  }
  for (std::uint64_t n = 1; n <= 20; ++n) {
    for (std::uint64_t j = 1; j <= n; ++j) {
      BigRat tail = 0;
      for (std::uint64_t r = j; r <= n; ++r) tail += core_size_pmf(n, r, Model::standard);
      EXPECT_EQ(core_size_tail_std(n, j), tail);
    }
  }
  EXPECT_EQ(to_fixed(core_size_pmf(10, 4, Model::standard), 4), "0.2016");
  EXPECT_EQ(mean_cycle_count(10, 1, Model::standard), 1);
}

TEST(Core, ToesCycleMeansMatchOracle) {
  for (std::uint64_t n = 2; n <= 20; ++n) {
    for (std::uint64_t j = 2; j <= n; ++j) EXPECT_EQ(mean_cycle_count(n, j, Model::toes), oracle::cycle_mean(n, j));
  }
  EXPECT_EQ(mean_cycle_count(10, 2, Model::toes), frac(5, 9));
  EXPECT_THROW(mean_cycle_count(10, 1, Model::toes), std::invalid_argument);
}

TEST(Core, DerangementLawsMatchPermutationEnumeration) {
  for (std::size_t n = 2; n <= 8; ++n) {
    std::vector<BigInt> cycles(n + 1, 0);
    std::vector<BigInt> twos(n / 2 + 1, 0);
    BigInt d = 0;
    BigInt all = 0;
    for (const auto& p : oracle::all_permutations(n)) {
      const auto c = oracle::permutation_cycles(p);
      ++all;
      if (c.count(1)) continue;
      ++d;
      for (const auto& [len, count] : c) cycles[len] += count;
      ++twos[c.count(2) ? c.at(2) : 0];
    }
    for (std::size_t j = 2; j <= n; ++j) EXPECT_EQ(mean_cycle_count(n, j, Model::derangement), make_rat(cycles[j], d));
    for (std::size_t k = 0; 2 * k <= n; ++k) EXPECT_EQ(derangement_two_cycle_pmf(n, k), make_rat(twos[k], all));
  }
  EXPECT_EQ(derangement_two_cycle_pmf(6, 1), frac(1, 8));
}

TEST(Core, CoreSumIdentity) {
  for (std::uint64_t n = 2; n <= 50; ++n) {
    for (std::uint64_t m = 1; m <= n; ++m) {
      const auto [lhs, rhs] = core_sum_identity(n, m);
      ASSERT_EQ(lhs, rhs) << n << " " << m;
    }
  }
  EXPECT_THROW(core_sum_identity(5, 0), std::invalid_argument);
}

TEST(Scream, PmfMatchesCoreCountOracle) {
  for (std::uint64_t n = 2; n <= 40; ++n) {
    BigRat total = 0;
    for (std::uint64_t k = 0; 2 * k <= n; ++k) {
      ASSERT_EQ(scream_pmf(n, k), oracle::scream_pmf(n, k)) << n << " " << k;
      total += scream_pmf(n, k);
    }
    EXPECT_EQ(total, 1);
  }
  EXPECT_EQ(scream_pmf(2, 1), 1);
  EXPECT_THROW(scream_pmf(10, 6), std::invalid_argument);
}

TEST(Scream, ReferenceValues) {
  const char* expected[] = {"0.5346", "0.3809", "0.0789", "0.0055", "0.0001", "0.0000"};
  for (std::uint64_t k = 0; k <= 5; ++k) EXPECT_EQ(to_fixed(scream_pmf(10, k), 4), expected[k]);
}

TEST(Scream, SomeoneScreams) {
  for (std::uint64_t n = 2; n <= 60; ++n) EXPECT_EQ(prob_someone_screams(n), 1 - oracle::scream_pmf(n, 0));
  EXPECT_EQ(prob_someone_screams(5), frac(145, 256));
  const std::pair<std::uint64_t, const char*> reference[] = {
      {5, "0.5664"},  {10, "0.4654"}, {15, "0.4386"}, {20, "0.4264"},  {30, "0.4148"},   {40, "0.4093"},
      {50, "0.4060"}, {60, "0.4039"}, {70, "0.4023"}, {80, "0.4012"},  {90, "0.4003"},   {100, "0.3996"},
      {1000, "0.3941"}, {10000, "0.3935"}};
  for (const auto& [n, value] : reference) EXPECT_EQ(to_fixed(prob_someone_screams(n), 4), value) << n;
}

TEST(Scream, ApproachesLimitFromAbove) {
  const double limit = 1 - std::exp(-0.5);
  double previous = 1.0;
  for (std::uint64_t n : {10, 100, 1000, 10000}) {
    const double q = Float(prob_someone_screams(n)).to_double();
    EXPECT_GT(q, limit);
    EXPECT_LT(q, previous);
    previous = q;
  }
  EXPECT_NEAR(previous, limit, 1e-4);
}

TEST(Esf, PmfSumsToOneAndMatchesPermutations) {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    BigRat total = 0;
    for_each_spectrum(n, 1, [&](const Spectrum& s) { total += esf_pmf(n, s, frac(1, 2)); });
    EXPECT_EQ(total, 1);
  }
  // theta = 1 is the cycle type of a uniform permutation.
  for (std::size_t n = 1; n <= 6; ++n) {
    std::map<Spectrum, BigInt> counts;
    BigInt all = 0;
    for (const auto& p : oracle::all_permutations(n)) {
      Spectrum s(n);
      for (const auto& [len, c] : oracle::permutation_cycles(p)) s.add(len, c);
      ++counts[s];
      ++all;
    }
    for (const auto& [s, c] : counts) EXPECT_EQ(esf_pmf(n, s, 1), make_rat(c, all));
  }
}

TEST(Rejection, AcceptanceRateClosedForm) {
  // Summing the ESF(1/2) law against the acceptance weights telescopes to
  // (n-1)^n e^{-n} / (1/2)^{(n)}.
  for (std::uint64_t n = 2; n <= 14; ++n) {
    BigRat rising = 1;
    for (std::uint64_t k = 0; k < n; ++k) rising *= frac(1, 2) + k;
    const ScaledExp expected(BigRat(oracle::toes_total(n)) / rising, -static_cast<std::int64_t>(n));
    EXPECT_EQ(rejection_acceptance_rate(n), expected) << n;
  }
  EXPECT_NEAR(rejection_acceptance_rate(10).to_double(), 0.247582, 5e-7);
}

TEST(Spitzer, PartialSumConverges) {
  const double limit = (1 + std::log(2.0)) / 2;
  const double s1000 = spitzer_partial_sum(1000).to_double();
  const double s1e6 = spitzer_partial_sum(1'000'000).to_double();
  EXPECT_LT(std::abs(s1e6 - limit), 2e-3);
  EXPECT_LT(std::abs(s1e6 - limit), std::abs(s1000 - limit));
  double direct = 0;
  for (std::uint64_t j = 2; j <= 40; ++j) direct += (0.5 - toes_omega(j)) / static_cast<double>(j);
  EXPECT_NEAR(spitzer_partial_sum(40).to_double(), direct, 1e-14);
}

TEST(Spitzer, AcceptanceLimit) {
  const Float limit = (Float(1) + log(Float(2))) / Float(2);
  const double rate = acceptance_rate_limit(limit).to_double();
  EXPECT_NEAR(rate, std::exp(-1.0) / std::sqrt(2.0), 1e-15);
}

TEST(Tables, PmfTablesSumToOne) {
  for (std::uint64_t n : {2, 3, 10}) {
    for (Model m : {Model::standard, Model::toes}) {
      EXPECT_EQ(make_law_table(TableKind::component_pmf, n, m).total(), 1);
      EXPECT_EQ(make_law_table(TableKind::core_size_pmf, n, m).total(), 1);
    }
    EXPECT_EQ(make_law_table(TableKind::scream_pmf, n, Model::toes).total(), 1);
  }
  const LawTable cross = make_law_table(TableKind::cross_moment, 10, Model::toes);
  ASSERT_FALSE(cross.entries.empty());
  EXPECT_EQ(cross.entries.front().index, 2U);
  EXPECT_EQ(cross.entries.front().second, 3U);
  EXPECT_THROW(make_law_table(TableKind::scream_pmf, 10, Model::standard), std::invalid_argument);
  EXPECT_THROW(make_law_table(TableKind::component_pmf, 10, Model::derangement), std::invalid_argument);
  EXPECT_EQ(parse_table_kind("cycle-mean"), TableKind::cycle_mean);
  EXPECT_THROW(parse_table_kind("cycles"), std::invalid_argument);
  EXPECT_EQ(parse_model("derangement"), Model::derangement);
  EXPECT_THROW(parse_model("toe"), std::invalid_argument);
}

TEST(Tables, TrivialSizeTwo) {
  const LawTable core = make_law_table(TableKind::core_size_pmf, 2, Model::toes);
  ASSERT_EQ(core.entries.size(), 1U);
  EXPECT_EQ(core.entries[0].index, 2U);
  EXPECT_EQ(core.entries[0].value, 1);
}

}  // namespace
}  // namespace stoes
