#include "stoes/laws.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>

namespace stoes {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string args(std::uint64_t n, std::uint64_t j) {
  return "(n=" + std::to_string(n) + ", j=" + std::to_string(j) + ")";
}

BigRat ratio(std::int64_t num, std::int64_t den) { return make_rat(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))); }

/// (num/den)^e with a signed numerator.
BigRat ratio_pow(std::int64_t num, std::int64_t den, std::uint64_t e) { return rat_pow(ratio(num, den), e); }

BigRat falling_ratio(std::uint64_t n, std::uint64_t r, std::uint64_t base) {
  // n_[r] / base^r
  return make_rat(falling_factorial(n, r), int_pow(BigInt(static_cast<unsigned long>(base)), r));
}

void check_equal(const BigRat& a, const BigRat& b, const std::string& what) {
  if (a != b) throw ConsistencyError(what + ": " + a.get_str() + " != " + b.get_str());
}

BigRat e_free(const ScaledExp& value, const std::string& what) {
  if (!value.is_rational()) throw ConsistencyError(what + ": e-power did not cancel (" + value.to_string() + ")");
  return value.as_rational();
}

}  // namespace

std::string_view to_string(Model model) {
  switch (model) {
    case Model::standard: return "standard";
    case Model::toes: return "toes";
    case Model::derangement: return "derangement";
  }
  return "?";
}

Model parse_model(std::string_view name) {
  if (name == "standard") return Model::standard;
  if (name == "toes") return Model::toes;
  if (name == "derangement") return Model::derangement;
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

ScaledExp lambda_std(std::uint64_t j) {
  require(j >= 1, "lambda_std needs j >= 1");
  return {poisson_partial_sum(j, static_cast<std::int64_t>(j) - 1) / BigRat(static_cast<unsigned long>(j)),
          -static_cast<std::int64_t>(j)};
}

ScaledExp lambda_toes(std::uint64_t j) {
  require(j >= 2, "lambda_toes needs j >= 2: toes mappings have no size-1 components");
  return {poisson_partial_sum(j, static_cast<std::int64_t>(j) - 2) / BigRat(static_cast<unsigned long>(j)),
          -static_cast<std::int64_t>(j)};
}

BigInt connected_toes_count(std::uint64_t i) {
  require(i >= 2, "connected_toes_count needs i >= 2");
  const BigRat value = BigRat(factorial(i - 1)) * poisson_partial_sum(i, static_cast<std::int64_t>(i) - 2);
  if (value.get_den() != 1) throw ConsistencyError("m~_" + std::to_string(i) + " is not an integer");
  return value.get_num();
}

double toes_omega(std::uint64_t j) {
  require(j >= 2, "toes_omega needs j >= 2");
  if (j <= 700) {
    double term = std::exp(-static_cast<double>(j));
    double sum = 0.0;
    for (std::uint64_t l = 0; l + 2 <= j; ++l) {
      sum += term;
      term *= static_cast<double>(j) / static_cast<double>(l + 1);
    }
    return sum;
  }
  return boost::math::gamma_q(static_cast<double>(j - 1), static_cast<double>(j));
}

ScaledExp single_component_prob(std::uint64_t n, Model model) {
  switch (model) {
    case Model::standard: {
      require(n >= 1, "single_component_prob(standard) needs n >= 1");
      ScaledExp lead(make_rat(factorial(n), int_pow(BigInt(static_cast<unsigned long>(n)), n)), static_cast<std::int64_t>(n));
      ScaledExp out = lead * lambda_std(n);
      e_free(out, "s_n");
      return out;
    }
    case Model::toes: {
      require(n >= 2, "single_component_prob(toes) needs n >= 2");
      ScaledExp lead(make_rat(factorial(n), int_pow(BigInt(static_cast<unsigned long>(n - 1)), n)),
                     static_cast<std::int64_t>(n));
      ScaledExp out = lead * lambda_toes(n);
      e_free(out, "s~_n");
      return out;
    }
    case Model::derangement: break;
  }
  throw std::invalid_argument("single_component_prob: derangement model has no component structure");
}

BigRat component_pmf_toes_at(std::uint64_t n, const Spectrum& spectrum, std::int64_t x_epow) {
  require(n >= 2, "component_pmf(toes) needs n >= 2");
  require(spectrum.count(1) == 0, "component_pmf(toes): spectrum has size-1 components");
  if (spectrum.weight() != n) return 0;
  const auto sn = static_cast<std::int64_t>(n);
  ScaledExp acc(make_rat(factorial(n), int_pow(BigInt(static_cast<unsigned long>(n - 1)), n)), -x_epow * sn);
  for (std::size_t j = 2; j <= spectrum.n(); ++j) {
    const std::uint32_t a = spectrum.count(j);
    if (a == 0) continue;
    const ScaledExp weight(make_rat(connected_toes_count(j), factorial(j)), x_epow * static_cast<std::int64_t>(j));
    acc *= weight.pow(a);
    acc /= ScaledExp::rational(BigRat(factorial(a)));
  }
  return e_free(acc, "component_pmf(toes)");
}

BigRat component_pmf(std::uint64_t n, const Spectrum& spectrum, Model model) {
  switch (model) {
    case Model::toes: return component_pmf_toes_at(n, spectrum, -1);
    case Model::standard: {
      require(n >= 1, "component_pmf(standard) needs n >= 1");
      if (spectrum.weight() != n) return 0;
      ScaledExp acc(make_rat(factorial(n), int_pow(BigInt(static_cast<unsigned long>(n)), n)), static_cast<std::int64_t>(n));
      for (std::size_t j = 1; j <= spectrum.n(); ++j) {
        const std::uint32_t a = spectrum.count(j);
        if (a == 0) continue;
        acc *= lambda_std(j).pow(a);
        acc /= ScaledExp::rational(BigRat(factorial(a)));
      }
      return e_free(acc, "component_pmf(standard)");
    }
    case Model::derangement: break;
  }
  throw std::invalid_argument("component_pmf: derangement model has no component structure");
}

BigRat mean_component_count(std::uint64_t n, std::uint64_t j, Model model) {
  const auto sn = static_cast<std::int64_t>(n);
  const auto sj = static_cast<std::int64_t>(j);
  switch (model) {
    case Model::standard: {
      require(j >= 1 && j <= n, "mean_component_count(standard) needs 1 <= j <= n " + args(n, j));
      // n!/n^n (n-j)^{n-j}/(n-j)! e^j lambda_j
      ScaledExp first(make_rat(factorial(n) * int_pow(BigInt(static_cast<unsigned long>(n - j)), n - j),
                               int_pow(BigInt(static_cast<unsigned long>(n)), n) * factorial(n - j)),
                      sj);
      first *= lambda_std(j);
      const BigRat by_lambda = e_free(first, "E C_j(n)");
      // s_j C(n,j) (j/n)^j (1 - j/n)^{n-j}
      const BigRat by_single = single_component_prob(j, Model::standard).as_rational() * BigRat(binomial(sn, sj)) *
                               ratio_pow(sj, sn, j) * ratio_pow(sn - sj, sn, n - j);
      check_equal(by_lambda, by_single, "E C_j(n) forms disagree " + args(n, j));
      return by_lambda;
    }
    case Model::toes: {
      require(j >= 2 && j <= n, "mean_component_count(toes) needs 2 <= j <= n " + args(n, j));
      // lambda~_j e^j n_[j] (n-j-1)^{n-j} / (n-1)^n
      ScaledExp first(make_rat(falling_factorial(n, j) * int_pow(BigInt(static_cast<long>(sn - sj - 1)), n - j),
                               int_pow(BigInt(static_cast<unsigned long>(n - 1)), n)),
                      sj);
      first *= lambda_toes(j);
      const BigRat by_lambda = e_free(first, "E C~_j(n)");
      // s~_j C(n,j) ((j-1)/(n-1))^j (1 - j/(n-1))^{n-j}
      const BigRat by_single = single_component_prob(j, Model::toes).as_rational() * BigRat(binomial(sn, sj)) *
                               ratio_pow(sj - 1, sn - 1, j) * ratio_pow(sn - 1 - sj, sn - 1, n - j);
      check_equal(by_lambda, by_single, "E C~_j(n) forms disagree " + args(n, j));
      return by_lambda;
    }
    case Model::derangement: break;
  }
  throw std::invalid_argument("mean_component_count: derangement model has no component structure");
}

BigRat factorial_moment_toes(std::uint64_t n, const std::map<std::uint64_t, std::uint64_t>& orders) {
  require(n >= 2, "factorial_moment_toes needs n >= 2");
  std::uint64_t m = 0;
  ScaledExp acc = ScaledExp::rational(BigRat(1));
  for (const auto& [j, r] : orders) {
    require(j >= 2, "factorial_moment_toes: component sizes start at 2");
    m += j * r;
    if (r > 0) acc *= lambda_toes(j).pow(r);
  }
  if (m > n) return 0;
  const auto sn = static_cast<std::int64_t>(n);
  const auto sm = static_cast<std::int64_t>(m);
  acc *= ScaledExp(make_rat(falling_factorial(n, m) * int_pow(BigInt(static_cast<long>(sn - sm - 1)), n - m),
                            int_pow(BigInt(static_cast<unsigned long>(n - 1)), n)),
                   sm);
  return e_free(acc, "factorial_moment_toes");
}

BigRat mixed_moment_toes(std::uint64_t n, std::uint64_t i, std::uint64_t j) {
  require(i >= 2 && j >= 2, "mixed_moment_toes: component sizes start at 2");
  require(i != j, "mixed_moment_toes needs distinct sizes; use factorial_moment_toes for E C(C-1)");
  if (i + j > n) return 0;
  const auto sn = static_cast<std::int64_t>(n);
  const auto si = static_cast<std::int64_t>(i);
  const auto sj = static_cast<std::int64_t>(j);
  const BigRat value = single_component_prob(i, Model::toes).as_rational() *
                       single_component_prob(j, Model::toes).as_rational() * BigRat(multinomial(sn, si, sj)) *
                       ratio_pow(si - 1, sn - 1, i) * ratio_pow(sj - 1, sn - 1, j) *
                       ratio_pow(sn - 1 - si - sj, sn - 1, n - i - j);
  check_equal(value, factorial_moment_toes(n, {{i, 1}, {j, 1}}), "E C~_i C~_j forms disagree");
  return value;
}

BigRat expected_num_components_toes_by_components(std::uint64_t n) {
  require(n >= 2, "expected_num_components_toes needs n >= 2");
  BigRat sum = 0;
  for (std::uint64_t j = 2; j <= n; ++j) sum += mean_component_count(n, j, Model::toes);
  return sum;
}

BigRat expected_num_components_toes_by_cycles(std::uint64_t n) {
  require(n >= 2, "expected_num_components_toes needs n >= 2");
  BigRat sum = 0;
  for (std::uint64_t j = 2; j <= n; ++j) sum += mean_cycle_count(n, j, Model::toes);
  return sum;
}

BigRat expected_num_components_toes(std::uint64_t n) {
  const BigRat by_components = expected_num_components_toes_by_components(n);
  check_equal(by_components, expected_num_components_toes_by_cycles(n),
              "E K~_n component and cycle routes disagree (n=" + std::to_string(n) + ")");
  return by_components;
}

BigRat expected_num_components_std(std::uint64_t n) {
  require(n >= 1, "expected_num_components_std needs n >= 1");
  BigRat sum = 0;
  for (std::uint64_t j = 1; j <= n; ++j) sum += mean_component_count(n, j, Model::standard);
  return sum;
}

BigRat core_size_pmf(std::uint64_t n, std::uint64_t r, Model model) {
  switch (model) {
    case Model::standard:
      require(r >= 1 && r <= n, "core_size_pmf(standard) needs 1 <= r <= n");
      return ratio(static_cast<std::int64_t>(r), static_cast<std::int64_t>(n)) * falling_ratio(n, r, n);
    case Model::toes:
      require(n >= 2 && r >= 2 && r <= n, "core_size_pmf(toes) needs 2 <= r <= n");
      return ratio_pow(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n - 1), n) *
             ratio(static_cast<std::int64_t>(r), static_cast<std::int64_t>(n)) * falling_ratio(n, r, n) *
             make_rat(derangement_number(r), factorial(r));
    case Model::derangement: break;
  }
  throw std::invalid_argument("core_size_pmf: a derangement is all core");
}

BigRat core_size_tail_std(std::uint64_t n, std::uint64_t j) {
  require(j >= 1 && j <= n, "core_size_tail_std needs 1 <= j <= n");
  const BigRat tail = falling_ratio(n - 1, j - 1, n);
  BigRat summed = 0;
  for (std::uint64_t k = j; k <= n; ++k) summed += core_size_pmf(n, k, Model::standard);
  check_equal(tail, summed, "P(N_n >= j) product and summed pmf disagree " + args(n, j));
  return tail;
}

BigRat mean_cycle_count(std::uint64_t n, std::uint64_t j, Model model) {
  const BigRat inv_j = ratio(1, static_cast<std::int64_t>(j == 0 ? 1 : j));
  switch (model) {
    case Model::standard:
      require(j >= 1 && j <= n, "mean_cycle_count(standard) needs 1 <= j <= n " + args(n, j));
      return inv_j * falling_ratio(n, j, n);
    case Model::toes:
      require(n >= 2 && j >= 2 && j <= n, "mean_cycle_count(toes) needs 2 <= j <= n " + args(n, j));
      return inv_j * falling_ratio(n, j, n - 1);
    case Model::derangement: {
      require(n >= 2 && j >= 2 && j <= n, "mean_cycle_count(derangement) needs 2 <= j <= n " + args(n, j));
      // D_{n-j} = 0 when n - j = 1: no derangement leaves a single point over.
      return inv_j * make_rat(factorial(n), derangement_number(n)) *
             make_rat(derangement_number(n - j), factorial(n - j));
    }
  }
  throw std::invalid_argument("mean_cycle_count: unknown model");
}

BigRat derangement_two_cycle_pmf(std::uint64_t n, std::uint64_t k) {
  require(2 * k <= n, "derangement_two_cycle_pmf needs k <= n/2");
  const auto d = derangement_numbers(n);
  BigRat sum = 0;
  for (std::uint64_t l = 0; 2 * (l + k) <= n; ++l) {
    const std::uint64_t rest = n - 2 * l - 2 * k;
    BigRat term = make_rat(d[rest], factorial(rest)) / BigRat(int_pow(BigInt(2), l) * factorial(l));
    if (l % 2 == 1) term = -term;
    sum += term;
  }
  return sum / BigRat(int_pow(BigInt(2), k) * factorial(k));
}

std::pair<BigRat, BigRat> core_sum_identity(std::uint64_t n, std::uint64_t m) {
  require(n >= 2 && m >= 1 && m <= n, "core_sum_identity needs n >= 2 and 1 <= m <= n");
  const auto d = derangement_numbers(n);
  BigRat sum = 0;
  for (std::uint64_t r = m; r <= n; ++r) {
    sum += ratio(static_cast<std::int64_t>(r), static_cast<std::int64_t>(n)) * falling_ratio(n, r, n) *
           make_rat(d[r - m], factorial(r - m));
  }
  BigRat lhs = ratio_pow(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n - 1), n) * sum;
  BigRat rhs = falling_ratio(n, m, n - 1);
  return {std::move(lhs), std::move(rhs)};
}

BigRat scream_pmf(std::uint64_t n, std::uint64_t k) {
  require(n >= 2, "scream_pmf needs n >= 2");
  require(2 * k <= n, "scream_pmf needs k <= n/2");
  // sum_l (-1)^l T_l with T_l / T_{l-1} = (n-2k-2l+2)(n-2k-2l+1) / (2l (n-1)^2),
  // evaluated by Horner over integers and reduced once at the end.
  const std::uint64_t top = n / 2 - k;
  const BigInt nm1_sq = BigInt(static_cast<unsigned long>(n - 1)) * static_cast<unsigned long>(n - 1);
  BigInt p = 1;
  BigInt q = 1;
  for (std::uint64_t l = top; l >= 1; --l) {
    const std::uint64_t base = n - 2 * k - 2 * l;
    const BigInt a = BigInt(static_cast<unsigned long>(base + 2)) * static_cast<unsigned long>(base + 1);
    const BigInt b = nm1_sq * static_cast<unsigned long>(2 * l);
    // h <- 1 - (a/b) h
    p = b * q - a * p;
    q *= b;
  }
  const BigRat alternating = make_rat(p, q);
  const BigRat lead = falling_ratio(n, 2 * k, n - 1) / BigRat(int_pow(BigInt(2), k) * factorial(k));
  return lead * alternating;
}

BigRat prob_someone_screams(std::uint64_t n) {
  require(n >= 2, "prob_someone_screams needs n >= 2");
  // Common denominator Q = 2^L L! (n-1)^{2L}; term l has numerator
  // N_l = n_[2l] 2^{L-l} (L!/l!) (n-1)^{2(L-l)}, and N_l = N_{l-1} (n-2l+2)(n-2l+1) / (2l (n-1)^2) exactly.
  const std::uint64_t top = n / 2;
  const BigInt nm1_sq = BigInt(static_cast<unsigned long>(n - 1)) * static_cast<unsigned long>(n - 1);
  const BigInt denom = int_pow(BigInt(2), top) * factorial(top) * int_pow(nm1_sq, top);
  BigInt term = denom;
  BigInt sum = 0;
  for (std::uint64_t l = 1; l <= top; ++l) {
    term *= static_cast<unsigned long>(n - 2 * l + 2);
    term *= static_cast<unsigned long>(n - 2 * l + 1);
    mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), BigInt(nm1_sq * static_cast<unsigned long>(2 * l)).get_mpz_t());
    if (l % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  const BigRat q = make_rat(sum, denom);
  check_equal(q, BigRat(1) - scream_pmf(n, 0), "q_n direct sum and 1 - P(no screaming pair) disagree (n=" +
                                                    std::to_string(n) + ")");
  return q;
}

BigRat esf_pmf(std::uint64_t n, const Spectrum& spectrum, const BigRat& theta) {
  require(theta > 0, "esf_pmf needs theta > 0");
  if (spectrum.weight() != n) return 0;
  BigRat rising = 1;
  for (std::uint64_t i = 0; i < n; ++i) rising *= theta + BigRat(static_cast<unsigned long>(i));
  BigRat p = BigRat(factorial(n)) / rising;
  for (std::size_t j = 1; j <= spectrum.n(); ++j) {
    const std::uint32_t a = spectrum.count(j);
    if (a == 0) continue;
    p *= rat_pow(theta / BigRat(static_cast<unsigned long>(j)), a) / BigRat(factorial(a));
  }
  return p;
}

ScaledExp rejection_acceptance_rate(std::uint64_t n) {
  require(n >= 2, "rejection_acceptance_rate needs n >= 2");
  const BigRat theta(1, 2);
  ScaledExp total;
  for_each_spectrum(n, 2, [&](const Spectrum& s) {
    ScaledExp term = ScaledExp::rational(esf_pmf(n, s, theta));
    for (std::size_t j = 2; j <= n; ++j) {
      const std::uint32_t a = s.count(j);
      if (a == 0) continue;
      // 2 omega_j = 2 j lambda~_j
      ScaledExp two_omega = lambda_toes(j) * ScaledExp::rational(BigRat(static_cast<unsigned long>(2 * j)));
      term *= two_omega.pow(a);
    }
    total += term;
  });
  return total;
}

Float toes_omega_iterative(std::uint64_t j, mpfr_prec_t bits) {
  require(j >= 2, "toes_omega_iterative needs j >= 2");
  const mpfr_prec_t work = bits + 32;
  Float term = exp(Float(-static_cast<long>(j), work));
  Float sum = Float::zero(work);
  const Float jf(static_cast<long>(j), work);
  for (std::uint64_t l = 0; l + 2 <= j; ++l) {
    sum += term;
    term = term * jf / Float(static_cast<long>(l + 1), work);
  }
  Float out = Float::zero(bits);
  mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
  return out;
}

Float spitzer_partial_sum(std::uint64_t J, mpfr_prec_t bits) {
  require(J >= 2, "spitzer_partial_sum needs J >= 2");
  constexpr std::uint64_t kIterativeLimit = 1000;
  const Float half = Float(1, bits) / Float(2, bits);
  Float sum = Float::zero(bits);
  for (std::uint64_t j = 2; j <= J && j <= kIterativeLimit; ++j) {
    sum += (half - toes_omega_iterative(j, bits)) / Float(static_cast<long>(j), bits);
  }
  // Beyond the iterative range the terms are O(j^{-3/2}) and are summed from
  // the regularized incomplete gamma in double, smallest first.
  Float tail = Float::zero(bits);
  for (std::uint64_t j = J; j > kIterativeLimit; --j) {
    const double omega = boost::math::gamma_q(static_cast<double>(j - 1), static_cast<double>(j));
    tail += Float((0.5 - omega) / static_cast<double>(j), bits);
  }
  return sum + tail;
}

Float acceptance_rate_limit(const Float& spitzer_limit) {
  const mpfr_prec_t bits = spitzer_limit.precision();
  return exp(-(Float(1, bits) / Float(2, bits)) - spitzer_limit);
}

std::string_view to_string(TableKind kind) {
  switch (kind) {
    case TableKind::component_pmf: return "component-pmf";
    case TableKind::core_size_pmf: return "core-size-pmf";
    case TableKind::cycle_mean: return "cycle-mean";
    case TableKind::component_mean: return "component-mean";
    case TableKind::scream_pmf: return "scream-pmf";
    case TableKind::cross_moment: return "cross-moment";
  }
  return "?";
}

TableKind parse_table_kind(std::string_view name) {
  for (TableKind k : {TableKind::component_pmf, TableKind::core_size_pmf, TableKind::cycle_mean,
                      TableKind::component_mean, TableKind::scream_pmf, TableKind::cross_moment}) {
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown law table '" + std::string(name) +
                              "' (expected component-pmf|core-size-pmf|cycle-mean|component-mean|scream-pmf|cross-moment)");
}

bool LawTable::is_pmf() const {
  return kind == TableKind::component_pmf || kind == TableKind::core_size_pmf || kind == TableKind::scream_pmf;
}

BigRat LawTable::total() const {
  BigRat sum = 0;
  for (const auto& e : entries) sum += e.value;
  return sum;
}

const LawEntry* LawTable::find(std::size_t index) const {
  for (const auto& e : entries) {
    if (e.index == index) return &e;
  }
  return nullptr;
}

LawTable make_law_table(TableKind kind, std::size_t n, Model model) {
  LawTable table;
  table.kind = kind;
  table.model = model;
  table.n = n;
  auto push = [&](std::size_t index, BigRat value) {
    LawEntry e;
    e.index = index;
    e.value = std::move(value);
    table.entries.push_back(std::move(e));
  };
  const std::size_t first = model == Model::standard ? 1 : 2;
  switch (kind) {
    case TableKind::component_pmf:
      require(model != Model::derangement, "component-pmf table needs the standard or toes model");
      for_each_spectrum(n, first, [&](const Spectrum& s) {
        LawEntry e;
        e.spectrum = s;
        e.value = component_pmf(n, s, model);
        table.entries.push_back(std::move(e));
      });
      break;
    case TableKind::core_size_pmf:
      for (std::size_t r = first; r <= n; ++r) push(r, core_size_pmf(n, r, model));
      break;
    case TableKind::cycle_mean:
      for (std::size_t j = first; j <= n; ++j) push(j, mean_cycle_count(n, j, model));
      break;
    case TableKind::component_mean:
      for (std::size_t j = first; j <= n; ++j) push(j, mean_component_count(n, j, model));
      break;
    case TableKind::scream_pmf:
      require(model == Model::toes, "scream-pmf table is defined for the toes model");
      for (std::size_t k = 0; 2 * k <= n; ++k) push(k, scream_pmf(n, k));
      break;
    case TableKind::cross_moment:
      require(model == Model::toes, "cross-moment table is defined for the toes model");
      for (std::size_t i = 2; i <= n; ++i) {
        for (std::size_t j = i + 1; i + j <= n; ++j) {
          LawEntry e;
          e.index = i;
          e.second = j;
          e.value = mixed_moment_toes(n, i, j);
          table.entries.push_back(std::move(e));
        }
      }
      break;
  }
  if (table.is_pmf() && table.total() != 1) {
    throw ConsistencyError(std::string(to_string(kind)) + " table for n=" + std::to_string(n) + " sums to " +
                           table.total().get_str());
  }
  return table;
}

}  // namespace stoes
