#include "stoes/samplers.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

#include "stoes/float.hpp"

namespace stoes {

Mapping sample_mapping(std::size_t n, RngStream& rng) {
  if (n < 2) throw std::invalid_argument("sample_mapping needs n >= 2");
  std::vector<std::uint32_t> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    // u uniform on {0..n-2}, shifted past i
    const auto u = static_cast<std::uint32_t>(rng.below(n - 1));
    image[i] = u < i ? u : u + 1;
  }
  return Mapping(std::move(image));
}

std::vector<std::uint32_t> sample_standard_mapping(std::size_t n, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("sample_standard_mapping needs n >= 1");
  std::vector<std::uint32_t> image(n);
  for (auto& x : image) x = static_cast<std::uint32_t>(rng.below(n));
  return image;
}

Spectrum sample_esf_feller(std::size_t n, double theta, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("sample_esf_feller needs n >= 1");
  if (!(theta > 0)) throw std::invalid_argument("sample_esf_feller needs theta > 0");
  Spectrum out(n);
  // xi_1 = 1; a cycle of length j per spacing between successive ones, with
  // a virtual one at position n + 1.
  std::size_t last = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (rng.bernoulli(theta / (theta + static_cast<double>(i - 1)))) {
      out.add(i - last);
      last = i;
    }
  }
  out.add(n + 1 - last);
  assert(out.complete());
  return out;
}

Spectrum sample_esf_crp(std::size_t n, double theta, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("sample_esf_crp needs n >= 1");
  if (!(theta > 0)) throw std::invalid_argument("sample_esf_crp needs theta > 0");
  std::vector<std::uint32_t> table_of(n);
  std::vector<std::uint32_t> table_size;
  for (std::size_t i = 0; i < n; ++i) {
    // customer i + 1 opens a table with probability theta / (theta + i)
    if (i == 0 || rng.bernoulli(theta / (theta + static_cast<double>(i)))) {
      table_of[i] = static_cast<std::uint32_t>(table_size.size());
      table_size.push_back(1);
    } else {
      const auto neighbour = rng.below(i);
      table_of[i] = table_of[neighbour];
      ++table_size[table_of[i]];
    }
  }
  Spectrum out(n);
  for (auto s : table_size) out.add(s);
  return out;
}

ToesComponentSampler::ToesComponentSampler(std::size_t n, EsfMethod method)
    : n_(n), method_(method), factor_(n + 1, 0.0) {
  if (n < 2) throw std::invalid_argument("ToesComponentSampler needs n >= 2");
  for (std::size_t j = 2; j <= n; ++j) {
    const double omega = toes_omega(j);
    if (!(omega > 0.0 && omega <= kTheta)) {
      throw std::logic_error("omega_" + std::to_string(j) + " = " + std::to_string(omega) + " exceeds theta = 1/2");
    }
    factor_[j] = omega / kTheta;
  }
}

ComponentDraw ToesComponentSampler::operator()(RngStream& rng) const {
  ComponentDraw draw;
  for (;;) {
    ++draw.attempts;
    Spectrum esf = method_ == EsfMethod::feller ? sample_esf_feller(n_, kTheta, rng) : sample_esf_crp(n_, kTheta, rng);
    if (esf.count(1) != 0) continue;
    double accept = 1.0;
    for (std::size_t j = 2; j <= n_; ++j) {
      for (std::uint32_t a = esf.count(j); a > 0; --a) accept *= factor_[j];
    }
    if (rng.uniform() < accept) {
      draw.spectrum = std::move(esf);
      return draw;
    }
  }
}

namespace {

template <class Sampler>
const Sampler& cached(std::size_t n) {
  thread_local std::map<std::size_t, std::unique_ptr<Sampler>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Sampler>(n);
  return *slot;
}

}  // namespace

ComponentDraw sample_toes_components(std::size_t n, RngStream& rng) {
  return cached<ToesComponentSampler>(n)(rng);
}

CoreSizeSampler::CoreSizeSampler(std::size_t n) : n_(n) {
  if (n < 2) throw std::invalid_argument("CoreSizeSampler needs n >= 2");
  cumulative_.reserve(n - 1);
  if (n <= kExactLimit) {
    const LawTable table = make_law_table(TableKind::core_size_pmf, n, Model::toes);
    BigRat running = 0;
    for (const auto& e : table.entries) {
      running += e.value;
      cumulative_.push_back(Float(running, 53).to_double());
    }
    if (running != 1) throw ConsistencyError("core-size cumulative table does not end at 1");
  } else {
    // p_r = (n/(n-1))^n (r/n) (n_[r]/n^r) D_r/r!, with D_r/r! = D_{r-1}/(r-1)! + (-1)^r/r!.
    constexpr mpfr_prec_t kBits = 128;
    const Float nf(static_cast<long>(n), kBits);
    Float lead = exp(Float(static_cast<long>(n), kBits) * log(nf / Float(static_cast<long>(n - 1), kBits)));
    Float falling_ratio(1L, kBits);      // n_[r] / n^r
    Float derangement_ratio(1L, kBits);  // D_r / r!
    Float inv_factorial(1L, kBits);      // 1 / r!
    Float running = Float::zero(kBits);
    for (std::size_t r = 1; r <= n; ++r) {
      falling_ratio = falling_ratio * Float(static_cast<long>(n - r + 1), kBits) / nf;
      inv_factorial = inv_factorial / Float(static_cast<long>(r), kBits);
      derangement_ratio = r % 2 == 0 ? derangement_ratio + inv_factorial : derangement_ratio - inv_factorial;
      if (r < 2) continue;
      running += lead * Float(static_cast<long>(r), kBits) / nf * falling_ratio * derangement_ratio;
      cumulative_.push_back(running.to_double());
    }
    cumulative_.back() = 1.0;
  }
}

std::size_t CoreSizeSampler::operator()(RngStream& rng) const {
  const double u = rng.uniform();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const auto offset = static_cast<std::size_t>(std::min(it - cumulative_.begin(),
                                                        static_cast<std::ptrdiff_t>(cumulative_.size() - 1)));
  return offset + 2;
}

std::size_t sample_core_size_toes(std::size_t n, RngStream& rng) { return cached<CoreSizeSampler>(n)(rng); }

Spectrum sample_derangement_cycles(std::size_t r, RngStream& rng) {
  if (r < 2) throw std::invalid_argument("sample_derangement_cycles needs r >= 2");
  std::vector<std::uint32_t> perm(r);
  for (;;) {
    std::iota(perm.begin(), perm.end(), 0U);
    for (std::size_t i = r - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    bool fixed = false;
    for (std::size_t i = 0; i < r && !fixed; ++i) fixed = perm[i] == i;
    if (!fixed) break;
  }
  Spectrum out(r);
  std::vector<bool> seen(r, false);
  for (std::size_t i = 0; i < r; ++i) {
    if (seen[i]) continue;
    std::size_t length = 0;
    for (std::size_t x = i; !seen[x]; x = perm[x]) {
      seen[x] = true;
      ++length;
    }
    out.add(length);
  }
  return out;
}

ToesCoreSampler::Draw ToesCoreSampler::operator()(RngStream& rng) const {
  Draw draw;
  draw.core_size = core_size_(rng);
  const Spectrum cycles = sample_derangement_cycles(draw.core_size, rng);
  draw.cycles = Spectrum(core_size_.n());
  for (std::size_t j = 2; j <= draw.core_size; ++j) {
    if (cycles.count(j) > 0) draw.cycles.set(j, cycles.count(j));
  }
  return draw;
}

Spectrum sample_toes_core(std::size_t n, RngStream& rng) { return cached<ToesCoreSampler>(n)(rng).cycles; }

}  // namespace stoes
