#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace stoes {

/// Multiset of part sizes 1..n stored as counts a_j. Used both for component
/// sizes and for cycle lengths. A spectrum is complete when sum_j j*a_j == n.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::size_t n) : n_(n), counts_(n + 1, 0) {}
  Spectrum(std::size_t n, std::initializer_list<std::pair<std::size_t, std::uint32_t>> counts);

  std::size_t n() const { return n_; }

  /// a_j; zero for j outside 1..n.
  std::uint32_t count(std::size_t j) const { return j < counts_.size() ? counts_[j] : 0; }
  void add(std::size_t j, std::uint32_t times = 1);
  void set(std::size_t j, std::uint32_t a);

  std::size_t weight() const;  // sum_j j*a_j
  std::size_t parts() const;   // sum_j a_j
  bool complete() const { return weight() == n_; }
  bool has_repeat() const;     // some a_j >= 2
  std::size_t largest() const; // largest j with a_j > 0, or 0

  /// Raw counts indexed by size; element 0 is unused.
  const std::vector<std::uint32_t>& counts() const { return counts_; }

  /// "{2:1,3:2}" with only nonzero counts listed.
  std::string to_string() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
  friend auto operator<=>(const Spectrum&, const Spectrum&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> counts_;
};

/// Calls `visit` once for every complete spectrum of n whose parts are all
/// >= min_part (integer partitions of n), in lexicographic order of the
/// descending part sequence.
void for_each_spectrum(std::size_t n, std::size_t min_part, const std::function<void(const Spectrum&)>& visit);

}  // namespace stoes
