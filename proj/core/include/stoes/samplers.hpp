#pragma once

// Three independent routes to random screaming-toes structure:
//   direct      sample_mapping + decompose (components and cycles jointly)
//   rejection   ESF(1/2) spectra accepted with prob 1(a_1 = 0) prod_j (omega_j/theta)^{a_j}
//   core-joint  core size from its exact law, then a uniform derangement of that size
// Everything draws from an explicit RngStream, so equal seeds reproduce bit-for-bit.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stoes/laws.hpp"
#include "stoes/mapping.hpp"
#include "stoes/rng.hpp"
#include "stoes/spectrum.hpp"

namespace stoes {

/// Uniform toes mapping: f(i) uniform on {0..n-1} \ {i}, independently. n >= 2.
Mapping sample_mapping(std::size_t n, RngStream& rng);

/// Uniform standard mapping (fixed points allowed). n >= 1.
std::vector<std::uint32_t> sample_standard_mapping(std::size_t n, RngStream& rng);

enum class EsfMethod { feller, crp };

/// Cycle-count spectrum of ESF(theta) on n via the Feller coupling.
Spectrum sample_esf_feller(std::size_t n, double theta, RngStream& rng);

/// Same law via the Chinese restaurant process; kept as an independent
/// implementation for cross-validation.
Spectrum sample_esf_crp(std::size_t n, double theta, RngStream& rng);

struct ComponentDraw {
  Spectrum spectrum;
  std::uint64_t attempts = 0;
};

/// Rejection sampler for the toes component spectrum with theta = 1/2.
/// Construction precomputes omega_j/theta for j = 2..n.
class ToesComponentSampler {
 public:
  static constexpr double kTheta = 0.5;

  explicit ToesComponentSampler(std::size_t n, EsfMethod method = EsfMethod::feller);

  std::size_t n() const { return n_; }
  /// omega_j / theta, each in (0, 1].
  double acceptance_factor(std::size_t j) const { return factor_[j]; }

  ComponentDraw operator()(RngStream& rng) const;

 private:
  std::size_t n_;
  EsfMethod method_;
  std::vector<double> factor_;
};

ComponentDraw sample_toes_components(std::size_t n, RngStream& rng);

/// Inverse-CDF sampler for the toes core size. The cumulative table is built
/// once from the exact law and stored as correctly rounded doubles.
class CoreSizeSampler {
 public:
  /// Sizes up to this bound use the exact BigRat table; beyond, a 128-bit
  /// MPFR recurrence of the same law.
  static constexpr std::size_t kExactLimit = 1000;

  explicit CoreSizeSampler(std::size_t n);

  std::size_t n() const { return n_; }
  /// cumulative()[i] = P(N~_n <= i + 2); the last entry is exactly 1.
  const std::vector<double>& cumulative() const { return cumulative_; }

  std::size_t operator()(RngStream& rng) const;

 private:
  std::size_t n_;
  std::vector<double> cumulative_;
};

std::size_t sample_core_size_toes(std::size_t n, RngStream& rng);

/// Cycle spectrum of a uniform derangement of r points (shuffle, reject any
/// permutation with a fixed point). r >= 2.
Spectrum sample_derangement_cycles(std::size_t r, RngStream& rng);

/// Toes core cycle spectrum. The returned Spectrum has size n; its weight is
/// the sampled core size.
class ToesCoreSampler {
 public:
  explicit ToesCoreSampler(std::size_t n) : core_size_(n) {}
  std::size_t n() const { return core_size_.n(); }

  struct Draw {
    std::size_t core_size = 0;
    Spectrum cycles;
  };
  Draw operator()(RngStream& rng) const;

 private:
  CoreSizeSampler core_size_;
};

Spectrum sample_toes_core(std::size_t n, RngStream& rng);

}  // namespace stoes
