#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "stoes/exact.hpp"
#include "stoes/laws.hpp"
#include "stoes/spectrum.hpp"

namespace stoes {

/// Exact frequencies over all (n-1)^n toes mappings on n points, each
/// decomposed and tallied. Counts are integers; probabilities are count/total.
struct BruteForceLaw {
  static constexpr std::size_t kMaxN = 7;

  std::size_t n = 0;
  std::uint64_t total = 0;                               // (n-1)^n
  std::map<Spectrum, std::uint64_t> component_spectra;  // count per component spectrum
  std::vector<std::uint64_t> core_size;                 // index r
  std::vector<std::uint64_t> screams;                   // index k = number of 2-cycles
  std::vector<std::uint64_t> component_count_sum;       // index j: sum over mappings of C_j
  std::vector<std::uint64_t> cycle_count_sum;           // index j: sum over mappings of C*_j
  std::uint64_t num_components_sum = 0;
  std::uint64_t no_repeat_components = 0;
  std::uint64_t no_repeat_cycles = 0;
  std::uint64_t no_repeat_either = 0;

  BigRat probability(std::uint64_t count) const { return make_rat(BigInt(static_cast<unsigned long>(count)), BigInt(static_cast<unsigned long>(total))); }
  BigRat mean_components() const { return probability(num_components_sum); }

  /// The enumerated law as a LawTable of the given kind (toes model).
  /// Supported: component_pmf, core_size_pmf, scream_pmf, component_mean, cycle_mean.
  LawTable table(TableKind kind) const;
};

/// Enumerates every toes mapping on n points. 2 <= n <= 7, else std::invalid_argument.
BruteForceLaw brute_force_law(std::size_t n);

}  // namespace stoes
