#include "stoes/brute_force.hpp"

#include <stdexcept>
#include <string>

#include "stoes/mapping.hpp"

namespace stoes {

BruteForceLaw brute_force_law(std::size_t n) {
  if (n < 2 || n > BruteForceLaw::kMaxN) {
    throw std::invalid_argument("brute force enumeration needs 2 <= n <= " + std::to_string(BruteForceLaw::kMaxN));
  }
  BruteForceLaw law;
  law.n = n;
  law.core_size.assign(n + 1, 0);
  law.screams.assign(n / 2 + 1, 0);
  law.component_count_sum.assign(n + 1, 0);
  law.cycle_count_sum.assign(n + 1, 0);

  // Odometer over choice[i] in {0..n-2}; image[i] = choice[i] shifted past i.
  std::vector<std::uint32_t> choice(n, 0);
  std::vector<std::uint32_t> image(n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) image[i] = choice[i] < i ? choice[i] : choice[i] + 1;
    const Decomposition d = decompose(image);
    ++law.total;
    ++law.component_spectra[d.component_sizes];
    ++law.core_size[d.core_size];
    ++law.screams[d.cycle_lengths.count(2)];
    for (std::size_t j = 1; j <= n; ++j) {
      law.component_count_sum[j] += d.component_sizes.count(j);
      law.cycle_count_sum[j] += d.cycle_lengths.count(j);
    }
    law.num_components_sum += d.num_components();
    const bool comp_ok = !d.component_sizes.has_repeat();
    const bool cyc_ok = !d.cycle_lengths.has_repeat();
    law.no_repeat_components += comp_ok;
    law.no_repeat_cycles += cyc_ok;
    law.no_repeat_either += comp_ok && cyc_ok;

    std::size_t pos = 0;
    while (pos < n && ++choice[pos] == n - 1) choice[pos++] = 0;
    if (pos == n) break;
  }
  return law;
}

LawTable BruteForceLaw::table(TableKind kind) const {
  LawTable out;
  out.kind = kind;
  out.model = Model::toes;
  out.n = n;
  auto push = [&](std::size_t index, BigRat value) {
    LawEntry e;
    e.index = index;
    e.value = std::move(value);
    out.entries.push_back(std::move(e));
  };
  switch (kind) {
    case TableKind::component_pmf:
      // Same order as for_each_spectrum so tables compare entry by entry.
      for_each_spectrum(n, 2, [&](const Spectrum& s) {
        LawEntry e;
        e.spectrum = s;
        const auto it = component_spectra.find(s);
        e.value = probability(it == component_spectra.end() ? 0 : it->second);
        out.entries.push_back(std::move(e));
      });
      break;
    case TableKind::core_size_pmf:
      for (std::size_t r = 2; r <= n; ++r) push(r, probability(core_size[r]));
      break;
    case TableKind::scream_pmf:
      for (std::size_t k = 0; k < screams.size(); ++k) push(k, probability(screams[k]));
      break;
    case TableKind::component_mean:
      for (std::size_t j = 2; j <= n; ++j) push(j, probability(component_count_sum[j]));
      break;
    case TableKind::cycle_mean:
      for (std::size_t j = 2; j <= n; ++j) push(j, probability(cycle_count_sum[j]));
      break;
    case TableKind::cross_moment:
      throw std::invalid_argument("brute force tally does not keep cross moments");
  }
  return out;
}

}  // namespace stoes
