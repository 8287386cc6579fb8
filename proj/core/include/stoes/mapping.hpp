#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stoes/spectrum.hpp"

namespace stoes {

/// A function f on {0, ..., n-1} with f(i) != i for every i. Points are
/// 0-based here; the CLI prints them 1-based.
class Mapping {
 public:
  Mapping() = default;
  /// Throws std::invalid_argument if an image is out of range or a fixed point.
  explicit Mapping(std::vector<std::uint32_t> image);

  /// Builds from 1-based images, e.g. as written in the literature.
  static Mapping from_one_based(std::span<const std::uint32_t> image);

  std::size_t size() const { return image_.size(); }
  std::uint32_t operator[](std::size_t i) const { return image_[i]; }
  std::span<const std::uint32_t> image() const { return image_; }

  friend bool operator==(const Mapping&, const Mapping&) = default;

 private:
  std::vector<std::uint32_t> image_;
};

/// Component and core structure of a mapping graph.
struct Decomposition {
  Spectrum component_sizes;
  Spectrum cycle_lengths;
  std::size_t core_size = 0;
  std::vector<bool> cyclic;              // per point: lies on a cycle
  std::vector<std::uint32_t> component;  // per point: component id, 0-based

  std::size_t num_components() const { return component_sizes.parts(); }
};

/// Finds cycles by following f with three-state marking and labels every
/// point with the component of the cycle its path runs into. O(n) time,
/// iterative, so large n cannot exhaust the call stack. Works for any
/// function on {0..n-1}; toes mappings additionally have no 1-cycles.
Decomposition decompose(std::span<const std::uint32_t> image);
inline Decomposition decompose(const Mapping& m) { return decompose(m.image()); }

}  // namespace stoes
