#include "stoes/spectrum.hpp"

#include <stdexcept>

namespace stoes {

Spectrum::Spectrum(std::size_t n, std::initializer_list<std::pair<std::size_t, std::uint32_t>> counts) : Spectrum(n) {
  for (const auto& [j, a] : counts) set(j, a);
}

void Spectrum::add(std::size_t j, std::uint32_t times) {
  if (j == 0 || j > n_) throw std::out_of_range("part size " + std::to_string(j) + " outside 1.." + std::to_string(n_));
  counts_[j] += times;
}

void Spectrum::set(std::size_t j, std::uint32_t a) {
  if (j == 0 || j > n_) throw std::out_of_range("part size " + std::to_string(j) + " outside 1.." + std::to_string(n_));
  counts_[j] = a;
}

std::size_t Spectrum::weight() const {
  std::size_t w = 0;
  for (std::size_t j = 1; j < counts_.size(); ++j) w += j * counts_[j];
  return w;
}

std::size_t Spectrum::parts() const {
  std::size_t p = 0;
  for (std::size_t j = 1; j < counts_.size(); ++j) p += counts_[j];
  return p;
}

bool Spectrum::has_repeat() const {
  for (std::size_t j = 1; j < counts_.size(); ++j) {
    if (counts_[j] >= 2) return true;
  }
  return false;
}

std::size_t Spectrum::largest() const {
  for (std::size_t j = counts_.size(); j-- > 1;) {
    if (counts_[j] > 0) return j;
  }
  return 0;
}

std::string Spectrum::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t j = 1; j < counts_.size(); ++j) {
    if (counts_[j] == 0) continue;
    if (!first) out += ',';
    out += std::to_string(j) + ':' + std::to_string(counts_[j]);
    first = false;
  }
  return out + "}";
}

namespace {

void partitions(std::size_t remaining, std::size_t max_part, std::size_t min_part, Spectrum& current,
                const std::function<void(const Spectrum&)>& visit) {
  if (remaining == 0) {
    visit(current);
    return;
  }
  for (std::size_t part = std::min(remaining, max_part); part >= min_part && part >= 1; --part) {
    current.add(part);
    partitions(remaining - part, part, min_part, current, visit);
    current.set(part, current.count(part) - 1);
  }
}

}  // namespace

void for_each_spectrum(std::size_t n, std::size_t min_part, const std::function<void(const Spectrum&)>& visit) {
  Spectrum current(n);
  if (min_part == 0) min_part = 1;
  partitions(n, n, min_part, current, visit);
}

}  // namespace stoes
