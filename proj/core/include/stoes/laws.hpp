#pragma once

// Closed-form laws of the standard random mapping, the uniform derangement and
// the "screaming toes" mapping (f(i) != i for every i). Every function here is
// exact: probabilities and moments are BigRat, and quantities that genuinely
// carry a power of e are returned as ScaledExp.
//
// Model conventions:
//   standard     - uniform f: [n] -> [n]
//   toes         - f(i) uniform on [n] \ {i}, independently; no singleton cycles
//   derangement  - uniform fixed-point-free permutation (cycle counts only)
// Component/cycle sizes j = 1 do not exist under toes; queries for them are
// rejected with std::invalid_argument rather than answered with 0.

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stoes/exact.hpp"
#include "stoes/float.hpp"
#include "stoes/scaled_exp.hpp"
#include "stoes/spectrum.hpp"

namespace stoes {

enum class Model { standard, toes, derangement };

std::string_view to_string(Model model);
Model parse_model(std::string_view name);

/// Two independent evaluations of the same quantity disagreed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// --- Poisson parameters ------------------------------------------------------

/// lambda_j = (1/j) P(Po(j) < j), as (rational) * e^{-j}. j >= 1.
ScaledExp lambda_std(std::uint64_t j);

/// lambda~_j = (1/j) P(Po(j) < j-1), as (rational) * e^{-j}. j >= 2.
ScaledExp lambda_toes(std::uint64_t j);

/// Number of connected toes-mappings on i labelled points with no fixed
/// point: m~_i = (i-1)! sum_{l=0}^{i-2} i^l / l!. i >= 2.
BigInt connected_toes_count(std::uint64_t i);

/// omega_j = P(Po(j) < j-1) in double precision. Iterative accumulation from
/// e^{-j} for j <= 700, regularized incomplete gamma beyond.
double toes_omega(std::uint64_t j);

// --- Components --------------------------------------------------------------

/// Probability the mapping is connected. Standard needs n >= 1, toes n >= 2.
/// The e-powers cancel, so the result always has epow == 0.
ScaledExp single_component_prob(std::uint64_t n, Model model);

/// P(C_j(n) = a_j for all j). Zero off the support (sum j a_j != n).
BigRat component_pmf(std::uint64_t n, const Spectrum& spectrum, Model model);

/// Toes component law evaluated with free parameter x = e^{x_epow}. The law
/// does not depend on x; this entry point exists so that can be checked.
BigRat component_pmf_toes_at(std::uint64_t n, const Spectrum& spectrum, std::int64_t x_epow);

/// E C_j(n), the mean number of components of size j. Both algebraic forms are
/// evaluated and must agree (ConsistencyError otherwise).
BigRat mean_component_count(std::uint64_t n, std::uint64_t j, Model model);

/// E prod_j C~_j^{[r_j]} for the toes model; r maps component size (>= 2) to order.
BigRat factorial_moment_toes(std::uint64_t n, const std::map<std::uint64_t, std::uint64_t>& orders);

/// E C~_i C~_j for i != j via the two-size closed form; 0 when i + j > n.
BigRat mixed_moment_toes(std::uint64_t n, std::uint64_t i, std::uint64_t j);

/// E K~_n, the mean number of components of the toes mapping, via the
/// component route and via the cycle route; ConsistencyError on disagreement.
BigRat expected_num_components_toes(std::uint64_t n);

/// Component-route value alone (sum over j of E C~_j(n)).
BigRat expected_num_components_toes_by_components(std::uint64_t n);
/// Cycle-route value alone (sum over j of E C~*_j(n)).
BigRat expected_num_components_toes_by_cycles(std::uint64_t n);

/// E K_n for the standard mapping (sum over j of E C_j(n)).
BigRat expected_num_components_std(std::uint64_t n);

// --- Core --------------------------------------------------------------------

/// P(N_n = r): standard 1 <= r <= n, toes 2 <= r <= n.
BigRat core_size_pmf(std::uint64_t n, std::uint64_t r, Model model);

/// P(N_n >= j) = (n-1)_[j-1] / n^{j-1} for the standard mapping, checked
/// against the summed pmf.
BigRat core_size_tail_std(std::uint64_t n, std::uint64_t j);

/// E C*_j(n), the mean number of j-cycles in the core (standard, toes) or in
/// a uniform derangement of n (derangement). j >= 1 standard, j >= 2 otherwise.
BigRat mean_cycle_count(std::uint64_t n, std::uint64_t j, Model model);

/// P(C_1(n) = 0, C_2(n) = k) for a uniform random permutation of n.
BigRat derangement_two_cycle_pmf(std::uint64_t n, std::uint64_t k);

/// Both sides of the core-sum identity
///   (n/(n-1))^n sum_{r=m}^n (r/n)(n_[r]/n^r) D_{r-m}/(r-m)!  =  n_[m]/(n-1)^m
/// evaluated independently. n >= 2, 1 <= m <= n.
std::pair<BigRat, BigRat> core_sum_identity(std::uint64_t n, std::uint64_t m);

/// P(C~*_2(n) = k): probability of exactly k screaming pairs. n >= 2, k <= n/2.
BigRat scream_pmf(std::uint64_t n, std::uint64_t k);

/// q_n, the probability at least one pair screams, summed directly and
/// checked against 1 - scream_pmf(n, 0).
BigRat prob_someone_screams(std::uint64_t n);

// --- Ewens sampling formula and the rejection sampler -------------------------

/// ESF(theta) probability of cycle-count spectrum `spectrum` on n points:
/// n!/theta^{(n)} prod_j (theta/j)^{a_j} / a_j!.
BigRat esf_pmf(std::uint64_t n, const Spectrum& spectrum, const BigRat& theta);

/// Exact acceptance probability of the theta = 1/2 rejection sampler at size n,
/// E[1(C_1 = 0) prod_j (2 omega_j)^{C_j}] under ESF(1/2). Every term carries
/// e^{-n}, so the result is (rational) * e^{-n}. Enumerates partitions of n.
ScaledExp rejection_acceptance_rate(std::uint64_t n);

// --- Acceptance-rate constant ---------------------------------------------------

/// sum_{j=2}^{J} (1/j)(1/2 - P(Po(j) < j-1)). Converges to (1 + log 2)/2 with
/// truncation error O(J^{-1/2}).
Float spitzer_partial_sum(std::uint64_t J, mpfr_prec_t bits = Float::kDefaultBits);

/// One term's probability P(Po(j) < j-1) by iterative accumulation in MPFR
/// (t_{l+1} = t_l j/(l+1) from t_0 = e^{-j}). O(j); used for small j.
Float toes_omega_iterative(std::uint64_t j, mpfr_prec_t bits = Float::kDefaultBits);

/// Limiting rejection-sampler acceptance rate e^{-1/2} exp(-limit).
Float acceptance_rate_limit(const Float& spitzer_limit);

// --- Materialized tables -------------------------------------------------------

enum class TableKind { component_pmf, core_size_pmf, cycle_mean, component_mean, scream_pmf, cross_moment };

std::string_view to_string(TableKind kind);
TableKind parse_table_kind(std::string_view name);

struct LawEntry {
  std::size_t index = 0;   // j, r or k; first size for cross moments
  std::size_t second = 0;  // second size for cross moments
  Spectrum spectrum;       // component pmf entries only
  BigRat value;
};

struct LawTable {
  TableKind kind = TableKind::component_mean;
  Model model = Model::toes;
  std::size_t n = 0;
  std::vector<LawEntry> entries;

  bool is_pmf() const;
  BigRat total() const;
  /// First entry with the given index (component-pmf tables have no index).
  const LawEntry* find(std::size_t index) const;
};

/// Builds the exact table of `kind` for size n. pmf tables are checked to sum
/// to exactly 1 (ConsistencyError otherwise).
LawTable make_law_table(TableKind kind, std::size_t n, Model model);

}  // namespace stoes
