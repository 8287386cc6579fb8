#pragma once

#include <cstdint>
#include <limits>

namespace stoes {

/// Seedable xoshiro256** stream. The state is expanded from the 64-bit seed
/// with splitmix64, so any seed (including 0) is usable. Bounded integers use
/// Lemire's unbiased multiply-shift and doubles take the top 53 bits, which
/// keeps every draw bit-identical across platforms and standard libraries.
///
/// Replicate batches derive their streams from a master seed: batch k uses
/// RngStream::for_stream(master, k), i.e. seed master ^ k.
class RngStream {
 public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed);

  static RngStream for_stream(std::uint64_t master, std::uint64_t k) { return RngStream(master ^ k); }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next();
  std::uint64_t operator()() { return next(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  /// Uniform on {0, ..., bound-1}; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::uint64_t seed_;
  std::uint64_t s_[4];
};

}  // namespace stoes
