#include "stoes/mapping.hpp"

#include <stdexcept>
#include <string>

namespace stoes {

Mapping::Mapping(std::vector<std::uint32_t> image) : image_(std::move(image)) {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] >= image_.size()) {
      throw std::invalid_argument("image of " + std::to_string(i) + " is out of range");
    }
    if (image_[i] == i) throw std::invalid_argument("point " + std::to_string(i) + " maps to itself");
  }
}

Mapping Mapping::from_one_based(std::span<const std::uint32_t> image) {
  std::vector<std::uint32_t> zero_based(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] == 0) throw std::invalid_argument("1-based image contains 0");
    zero_based[i] = image[i] - 1;
  }
  return Mapping(std::move(zero_based));
}

Decomposition decompose(std::span<const std::uint32_t> image) {
  enum : std::uint8_t { kUnvisited, kOnPath, kResolved };
  constexpr std::uint32_t kNone = UINT32_MAX;

  const std::size_t n = image.size();
  Decomposition out;
  out.component_sizes = Spectrum(n);
  out.cycle_lengths = Spectrum(n);
  out.cyclic.assign(n, false);
  out.component.assign(n, kNone);

  std::vector<std::uint8_t> state(n, kUnvisited);
  std::vector<std::uint32_t> path;
  std::vector<std::uint32_t> sizes;
  for (std::size_t start = 0; start < n; ++start) {
    if (state[start] != kUnvisited) continue;
    path.clear();
    auto x = static_cast<std::uint32_t>(start);
    while (state[x] == kUnvisited) {
      state[x] = kOnPath;
      path.push_back(x);
      x = image[x];
    }
    std::uint32_t id;
    if (state[x] == kOnPath) {
      // New cycle closing at x.
      id = static_cast<std::uint32_t>(sizes.size());
      sizes.push_back(0);
      std::size_t length = 0;
      std::uint32_t y = x;
      do {
        out.cyclic[y] = true;
        ++length;
        y = image[y];
      } while (y != x);
      out.cycle_lengths.add(length);
      out.core_size += length;
    } else {
      id = out.component[x];
    }
    for (std::uint32_t p : path) {
      state[p] = kResolved;
      out.component[p] = id;
    }
    sizes[id] += static_cast<std::uint32_t>(path.size());
  }
  for (std::uint32_t s : sizes) out.component_sizes.add(s);
  return out;
}

}  // namespace stoes
