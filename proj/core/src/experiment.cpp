#include "stoes/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "stoes/brute_force.hpp"
#include "stoes/laws.hpp"
#include "stoes/mapping.hpp"
#include "stoes/samplers.hpp"

namespace stoes {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::exact: return "exact";
    case Method::direct: return "direct";
    case Method::rejection: return "rejection";
    case Method::core_joint: return "core-joint";
    case Method::brute_force: return "brute-force";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "exact") return Method::exact;
  if (name == "direct") return Method::direct;
  if (name == "rejection") return Method::rejection;
  if (name == "core-joint") return Method::core_joint;
  if (name == "brute-force") return Method::brute_force;
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (expected exact|direct|rejection|core-joint|brute-force)");
}

std::string_view to_string(TableId id) {
  switch (id) {
    case TableId::qn: return "1";
    case TableId::components: return "2";
    case TableId::scream: return "3";
    case TableId::cycles: return "cycles";
    case TableId::core: return "core";
    case TableId::repeats: return "repeats";
  }
  return "?";
}

TableId parse_table(std::string_view name) {
  if (name == "1" || name == "qn" || name == "q_n") return TableId::qn;
  if (name == "2" || name == "components") return TableId::components;
  if (name == "3" || name == "scream") return TableId::scream;
  if (name == "cycles") return TableId::cycles;
  if (name == "core") return TableId::core;
  if (name == "repeats") return TableId::repeats;
  throw std::invalid_argument("unknown table '" + std::string(name) + "' (expected 1|2|3|cycles|core|repeats)");
}

namespace {

bool supports(Method method, TableId table) {
  switch (method) {
    case Method::exact: return table != TableId::repeats;
    case Method::direct: return true;
    case Method::brute_force: return true;
    case Method::rejection: return table == TableId::components;
    case Method::core_joint:
      return table == TableId::qn || table == TableId::scream || table == TableId::cycles || table == TableId::core;
  }
  return false;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (method == Method::brute_force && n > BruteForceLaw::kMaxN) {
    throw std::invalid_argument("brute-force enumeration is limited to n <= 7 ((n-1)^n <= 6^7 mappings)");
  }
  if (method != Method::exact && method != Method::brute_force && replicates == 0) {
    throw std::invalid_argument("simulation needs at least one replicate");
  }
  for (TableId t : targets) {
    if (!supports(method, t)) {
      throw std::invalid_argument("method " + std::string(to_string(method)) + " cannot produce table " +
                                  std::string(to_string(t)));
    }
  }
}

unsigned default_threads() {
  if (const char* env = std::getenv("STOES_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<std::uint64_t> default_qn_sizes() {
  return {5, 10, 15, 20, 30, 40, 50, 60, 70, 80, 90, 100, 1000, 10000};
}

void Tally::add(std::span<const std::uint64_t> values) {
  ++replicates;
  for (std::size_t i = 0; i < values.size(); ++i) {
    sum[i] += values[i];
    sum_sq[i] += values[i] * values[i];
  }
}

void Tally::merge(const Tally& other) {
  if (sum.size() != other.sum.size()) throw std::invalid_argument("merging tallies of different shapes");
  replicates += other.replicates;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    sum[i] += other.sum[i];
    sum_sq[i] += other.sum_sq[i];
  }
}

double Tally::mean(std::size_t i) const {
  return replicates == 0 ? 0.0 : static_cast<double>(sum[i]) / static_cast<double>(replicates);
}

double Tally::std_error(std::size_t i) const {
  if (replicates < 2) return 0.0;
  const auto n = static_cast<long double>(replicates);
  const auto s = static_cast<long double>(sum[i]);
  const auto ss = static_cast<long double>(sum_sq[i]);
  const long double var = std::max(0.0L, (ss - s * s / n) / (n - 1));
  return static_cast<double>(std::sqrt(var / n));
}

Tally run_replicates(std::uint64_t replicates, std::uint64_t seed, unsigned threads, std::size_t stats,
                     const std::function<ReplicateFn()>& make_replicate, std::uint64_t batch_size) {
  if (batch_size == 0) throw std::invalid_argument("batch size must be positive");
  const std::uint64_t batches = (replicates + batch_size - 1) / batch_size;
  std::vector<Tally> per_batch(batches, Tally(stats));
  if (threads == 0) threads = default_threads();
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(batches, 1)));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      const ReplicateFn replicate = make_replicate();
      std::vector<std::uint64_t> values(stats);
      for (std::uint64_t b = next++; b < batches; b = next++) {
        RngStream rng = RngStream::for_stream(seed, b);
        const std::uint64_t count = std::min(batch_size, replicates - b * batch_size);
        Tally& tally = per_batch[b];
        for (std::uint64_t r = 0; r < count; ++r) {
          std::fill(values.begin(), values.end(), 0);
          replicate(rng, values);
          tally.add(values);
        }
      }
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = batches;
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  Tally total(stats);
  for (const Tally& t : per_batch) total.merge(t);
  return total;
}

namespace {

const char* kSeedRule = "batch k (replicates [k*batch_size, (k+1)*batch_size)) uses xoshiro256** seeded with seed XOR k";

std::string bracket(std::string_view stat, std::int64_t index) {
  return std::string(stat) + "[" + std::to_string(index) + "]";
}

StatRecord exact_record(std::string group, std::string_view stat, std::optional<std::int64_t> index,
                        const BigRat& value) {
  StatRecord r;
  r.name = group + "." + (index ? bracket(stat, *index) : std::string(stat));
  r.group = std::move(group);
  r.index = index;
  set_exact(r, value);
  return r;
}

StatRecord open_record(std::string group, std::string_view stat, std::optional<std::int64_t> index) {
  StatRecord r;
  r.name = group + "." + (index ? bracket(stat, *index) : std::string(stat));
  r.group = std::move(group);
  r.index = index;
  return r;
}

double exact_as_double(const StatRecord& r) {
  if (!r.exact_rational.empty()) return Float(BigRat(r.exact_rational, 10), 53).to_double();
  return std::stod(r.exact);
}

void attach_simulation(StatRecord& r, double mean, double se) {
  r.simulated = mean;
  r.std_error = se;
  if (!r.exact.empty() && se > 0) r.z = (mean - exact_as_double(r)) / se;
}

/// Enumeration value in place of a simulation; std_error 0, z 0 when equal.
void attach_enumeration(StatRecord& r, const BigRat& enumerated, const BigRat& exact, std::uint64_t& mismatches) {
  r.simulated = Float(enumerated, 64).to_double();
  r.std_error = 0.0;
  if (enumerated == exact) {
    r.z = 0.0;
  } else {
    ++mismatches;
  }
}

/// Which per-replicate statistics a table simulates; one slot per record in
/// `sim_records` order.
struct SimulationPlan {
  std::vector<std::size_t> record_slots;  // index into report.records for each statistic
  std::function<ReplicateFn()> make_replicate;
};

ReplicateFn direct_replicate(std::size_t n, const std::function<void(const Decomposition&, std::span<std::uint64_t>)>& fill) {
  return [n, fill](RngStream& rng, std::span<std::uint64_t> values) {
    const Mapping m = sample_mapping(n, rng);
    fill(decompose(m), values);
  };
}

ReplicateFn core_joint_replicate(std::size_t n,
                                 const std::function<void(std::size_t, const Spectrum&, std::span<std::uint64_t>)>& fill) {
  auto sampler = std::make_shared<ToesCoreSampler>(n);
  return [sampler, fill](RngStream& rng, std::span<std::uint64_t> values) {
    const auto draw = (*sampler)(rng);
    fill(draw.core_size, draw.cycles, values);
  };
}

std::string title_of(TableId table, std::uint64_t n) {
  const std::string at = " (n = " + std::to_string(n) + ")";
  switch (table) {
    case TableId::qn: return "Probability q_n that at least one pair screams";
    case TableId::components: return "Mean number of components of each size" + at;
    case TableId::scream: return "Distribution of the number of screaming pairs" + at;
    case TableId::cycles: return "Mean number of cycles of each length in the core" + at;
    case TableId::core: return "Distribution of the number of elements in the core" + at;
    case TableId::repeats: return "Probability of no repeated component or cycle sizes" + at;
  }
  return "";
}

}  // namespace

ExperimentReport run_table(const ExperimentConfig& config, TableId table) {
  ExperimentConfig single = config;
  single.targets = {table};
  single.validate();

  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = config.n;
  const Method method = config.method;
  const bool simulate = method != Method::exact && method != Method::brute_force;

  ExperimentReport report;
  auto& meta = report.metadata;
  meta.table = std::string(to_string(table));
  meta.title = title_of(table, n);
  meta.method = std::string(to_string(method));
  meta.n = n;
  meta.replicates = simulate ? config.replicates : 0;
  meta.seed = config.seed;
  meta.batch_size = simulate ? kDefaultBatch : 0;
  meta.seed_rule = simulate ? kSeedRule : "";
  meta.threads = simulate ? (config.threads == 0 ? default_threads() : config.threads) : 1;

  auto& recs = report.records;
  std::vector<std::size_t> slots;  // records that receive a simulated value, in statistic order
  std::function<ReplicateFn()> make_replicate;
  std::optional<BruteForceLaw> brute;
  if (method == Method::brute_force) brute = brute_force_law(n);
  std::vector<BigRat> enumerated;  // parallel to slots for brute force

  auto sim_slot = [&](StatRecord r) {
    slots.push_back(recs.size());
    recs.push_back(std::move(r));
  };

  switch (table) {
    case TableId::qn: {
      if (method == Method::exact) {
        const auto sizes = config.qn_sizes.empty() ? default_qn_sizes() : config.qn_sizes;
        for (std::uint64_t m : sizes) {
          recs.push_back(exact_record("toes", "q_n", static_cast<std::int64_t>(m), prob_someone_screams(m)));
        }
        meta.title = title_of(table, 0);
        break;
      }
      sim_slot(exact_record("toes", "q_n", static_cast<std::int64_t>(n), prob_someone_screams(n)));
      if (brute) enumerated.push_back(BigRat(1) - brute->probability(brute->screams[0]));
      if (method == Method::direct) {
        make_replicate = [n] {
          return direct_replicate(n, [](const Decomposition& d, std::span<std::uint64_t> v) {
            v[0] = d.cycle_lengths.count(2) > 0;
          });
        };
      } else if (method == Method::core_joint) {
        make_replicate = [n] {
          return core_joint_replicate(n, [](std::size_t, const Spectrum& c, std::span<std::uint64_t> v) {
            v[0] = c.count(2) > 0;
          });
        };
      }
      break;
    }
    case TableId::components: {
      for (std::size_t j = 2; j <= n; ++j) {
        sim_slot(exact_record("toes", "mean_components", static_cast<std::int64_t>(j),
                              mean_component_count(n, j, Model::toes)));
      }
      sim_slot(exact_record("toes", "mean_num_components", std::nullopt, expected_num_components_toes(n)));
      if (brute) {
        const LawTable t = brute->table(TableKind::component_mean);
        for (const auto& e : t.entries) enumerated.push_back(e.value);
        enumerated.push_back(brute->mean_components());
      }
      for (std::size_t j = 1; j <= n; ++j) {
        recs.push_back(exact_record("standard", "mean_components", static_cast<std::int64_t>(j),
                                    mean_component_count(n, j, Model::standard)));
      }
      recs.push_back(exact_record("standard", "mean_num_components", std::nullopt, expected_num_components_std(n)));
      if (method == Method::direct) {
        make_replicate = [n] {
          return direct_replicate(n, [n](const Decomposition& d, std::span<std::uint64_t> v) {
            for (std::size_t j = 2; j <= n; ++j) v[j - 2] = d.component_sizes.count(j);
            v[n - 1] = d.num_components();
          });
        };
      } else if (method == Method::rejection) {
        make_replicate = [n] {
          auto sampler = std::make_shared<ToesComponentSampler>(n);
          return ReplicateFn([n, sampler](RngStream& rng, std::span<std::uint64_t> v) {
            const ComponentDraw draw = (*sampler)(rng);
            for (std::size_t j = 2; j <= n; ++j) v[j - 2] = draw.spectrum.count(j);
            v[n - 1] = draw.spectrum.parts();
            v[n] = draw.attempts;
          });
        };
      }
      break;
    }
    case TableId::scream: {
      for (std::size_t k = 0; 2 * k <= n; ++k) {
        sim_slot(exact_record("toes", "scream_pmf", static_cast<std::int64_t>(k), scream_pmf(n, k)));
      }
      if (brute) {
        for (const auto& e : brute->table(TableKind::scream_pmf).entries) enumerated.push_back(e.value);
      }
      if (method == Method::direct) {
        make_replicate = [n] {
          return direct_replicate(n, [](const Decomposition& d, std::span<std::uint64_t> v) {
            v[d.cycle_lengths.count(2)] = 1;
          });
        };
      } else if (method == Method::core_joint) {
        make_replicate = [n] {
          return core_joint_replicate(n, [](std::size_t, const Spectrum& c, std::span<std::uint64_t> v) {
            v[c.count(2)] = 1;
          });
        };
      }
      break;
    }
    case TableId::cycles: {
      for (std::size_t j = 2; j <= n; ++j) {
        sim_slot(exact_record("toes", "mean_cycles", static_cast<std::int64_t>(j), mean_cycle_count(n, j, Model::toes)));
      }
      sim_slot(exact_record("toes", "mean_num_cycles", std::nullopt, expected_num_components_toes(n)));
      if (brute) {
        for (const auto& e : brute->table(TableKind::cycle_mean).entries) enumerated.push_back(e.value);
        enumerated.push_back(brute->mean_components());
      }
      BigRat std_total = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        const BigRat v = mean_cycle_count(n, j, Model::standard);
        std_total += v;
        recs.push_back(exact_record("standard", "mean_cycles", static_cast<std::int64_t>(j), v));
      }
      recs.push_back(exact_record("standard", "mean_num_cycles", std::nullopt, std_total));
      if (method == Method::direct) {
        make_replicate = [n] {
          return direct_replicate(n, [n](const Decomposition& d, std::span<std::uint64_t> v) {
            for (std::size_t j = 2; j <= n; ++j) v[j - 2] = d.cycle_lengths.count(j);
            v[n - 1] = d.cycle_lengths.parts();
          });
        };
      } else if (method == Method::core_joint) {
        make_replicate = [n] {
          return core_joint_replicate(n, [n](std::size_t, const Spectrum& c, std::span<std::uint64_t> v) {
            for (std::size_t j = 2; j <= n; ++j) v[j - 2] = c.count(j);
            v[n - 1] = c.parts();
          });
        };
      }
      break;
    }
    case TableId::core: {
      for (std::size_t r = 2; r <= n; ++r) {
        sim_slot(exact_record("toes", "core_size_pmf", static_cast<std::int64_t>(r), core_size_pmf(n, r, Model::toes)));
      }
      if (brute) {
        for (const auto& e : brute->table(TableKind::core_size_pmf).entries) enumerated.push_back(e.value);
      }
      for (std::size_t r = 1; r <= n; ++r) {
        recs.push_back(exact_record("standard", "core_size_pmf", static_cast<std::int64_t>(r),
                                    core_size_pmf(n, r, Model::standard)));
      }
      if (method == Method::direct) {
        make_replicate = [n] {
          return direct_replicate(n, [](const Decomposition& d, std::span<std::uint64_t> v) { v[d.core_size - 2] = 1; });
        };
      } else if (method == Method::core_joint) {
        make_replicate = [n] {
          return core_joint_replicate(n, [](std::size_t r, const Spectrum&, std::span<std::uint64_t> v) { v[r - 2] = 1; });
        };
      }
      break;
    }
    case TableId::repeats: {
      sim_slot(open_record("toes", "no_repeat_components", std::nullopt));
      sim_slot(open_record("toes", "no_repeat_cycles", std::nullopt));
      sim_slot(open_record("toes", "no_repeat_either", std::nullopt));
      if (brute) {
        enumerated.push_back(brute->probability(brute->no_repeat_components));
        enumerated.push_back(brute->probability(brute->no_repeat_cycles));
        enumerated.push_back(brute->probability(brute->no_repeat_either));
      }
      make_replicate = [n] {
        return direct_replicate(n, [](const Decomposition& d, std::span<std::uint64_t> v) {
          const bool comp = !d.component_sizes.has_repeat();
          const bool cyc = !d.cycle_lengths.has_repeat();
          v[0] = comp;
          v[1] = cyc;
          v[2] = comp && cyc;
        });
      };
      break;
    }
  }

  if (brute) {
    for (std::size_t s = 0; s < slots.size(); ++s) {
      StatRecord& r = recs[slots[s]];
      if (r.exact.empty()) {
        // No closed form: the enumeration is the exact value.
        set_exact(r, enumerated[s]);
        attach_enumeration(r, enumerated[s], enumerated[s], meta.mismatches);
      } else {
        attach_enumeration(r, enumerated[s], BigRat(r.exact_rational, 10), meta.mismatches);
      }
    }
  } else if (simulate) {
    const bool rejection = method == Method::rejection;
    const std::size_t stats = slots.size() + (rejection ? 1 : 0);
    const Tally tally = run_replicates(config.replicates, config.seed, meta.threads, stats, make_replicate);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      attach_simulation(recs[slots[s]], tally.mean(s), tally.std_error(s));
    }
    if (rejection) {
      // rate = 1 / mean attempts; delta-method standard error.
      const std::size_t a = slots.size();
      const double mean_attempts = tally.mean(a);
      StatRecord rate = open_record("rejection", "acceptance_rate", std::nullopt);
      if (n <= 60) {
        const ScaledExp exact = rejection_acceptance_rate(n);
        rate.exact = exact.to_float(160).to_fixed(20);
      }
      attach_simulation(rate, 1.0 / mean_attempts, tally.std_error(a) / (mean_attempts * mean_attempts));
      recs.push_back(std::move(rate));
    }
  }

  meta.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

ExperimentReport law_report(TableKind kind, std::uint64_t n, Model model) {
  const auto started = std::chrono::steady_clock::now();
  const LawTable table = make_law_table(kind, n, model);
  std::string stat(to_string(kind));
  std::replace(stat.begin(), stat.end(), '-', '_');
  const std::string group(to_string(model));

  ExperimentReport report;
  auto& meta = report.metadata;
  meta.table = std::string(to_string(kind));
  meta.title = "Exact " + std::string(to_string(kind)) + ", " + group + " model (n = " + std::to_string(n) + ")";
  meta.method = "exact";
  meta.n = n;
  meta.seed = 0;
  meta.threads = 1;
  for (const LawEntry& e : table.entries) {
    if (kind == TableKind::component_pmf) {
      StatRecord r;
      r.group = group;
      r.name = group + "." + stat + e.spectrum.to_string();
      set_exact(r, e.value);
      report.records.push_back(std::move(r));
    } else if (kind == TableKind::cross_moment) {
      StatRecord r;
      r.group = group;
      r.name = group + "." + stat + "[" + std::to_string(e.index) + "," + std::to_string(e.second) + "]";
      set_exact(r, e.value);
      report.records.push_back(std::move(r));
    } else {
      report.records.push_back(exact_record(group, stat, static_cast<std::int64_t>(e.index), e.value));
    }
  }
  meta.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::vector<ExperimentReport> run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::vector<ExperimentReport> out;
  out.reserve(config.targets.size());
  for (TableId t : config.targets) out.push_back(run_table(config, t));
  return out;
}

RepeatedSizeStats repeated_size_stats(std::uint64_t n, std::uint64_t replicates, std::uint64_t seed, unsigned threads) {
  ExperimentConfig config;
  config.n = n;
  config.replicates = replicates;
  config.seed = seed;
  config.threads = threads;
  config.method = Method::direct;
  const ExperimentReport report = run_table(config, TableId::repeats);
  auto estimate = [&](std::string_view name) {
    const StatRecord* r = report.find(name);
    return Estimate{r->simulated.value_or(0.0), r->std_error.value_or(0.0)};
  };
  return {estimate("toes.no_repeat_components"), estimate("toes.no_repeat_cycles"), estimate("toes.no_repeat_either")};
}

ExperimentReport validate_brute_force(std::uint64_t n) {
  const auto started = std::chrono::steady_clock::now();
  const BruteForceLaw brute = brute_force_law(n);
  ExperimentReport report;
  auto& meta = report.metadata;
  meta.table = "validate";
  meta.title = "Exhaustive enumeration against the exact laws (n = " + std::to_string(n) + ")";
  meta.method = "brute-force";
  meta.n = n;
  meta.threads = 1;

  auto compare = [&](StatRecord r, const BigRat& enumerated) {
    attach_enumeration(r, enumerated, BigRat(r.exact_rational, 10), meta.mismatches);
    report.records.push_back(std::move(r));
  };

  const LawTable pmf = make_law_table(TableKind::component_pmf, n, Model::toes);
  const LawTable brute_pmf = brute.table(TableKind::component_pmf);
  for (std::size_t i = 0; i < pmf.entries.size(); ++i) {
    StatRecord r;
    r.group = "toes";
    r.name = "toes.component_pmf" + pmf.entries[i].spectrum.to_string();
    set_exact(r, pmf.entries[i].value);
    compare(std::move(r), brute_pmf.entries[i].value);
  }
  struct Kind {
    TableKind kind;
    const char* stat;
  };
  for (const Kind k : {Kind{TableKind::core_size_pmf, "core_size_pmf"}, Kind{TableKind::scream_pmf, "scream_pmf"},
                       Kind{TableKind::component_mean, "mean_components"}, Kind{TableKind::cycle_mean, "mean_cycles"}}) {
    const LawTable exact = make_law_table(k.kind, n, Model::toes);
    const LawTable enumerated = brute.table(k.kind);
    for (std::size_t i = 0; i < exact.entries.size(); ++i) {
      compare(exact_record("toes", k.stat, static_cast<std::int64_t>(exact.entries[i].index), exact.entries[i].value),
              enumerated.entries[i].value);
    }
  }
  compare(exact_record("toes", "mean_num_components", std::nullopt, expected_num_components_toes(n)),
          brute.mean_components());
  compare(exact_record("toes", "q_n", static_cast<std::int64_t>(n), prob_someone_screams(n)),
          BigRat(1) - brute.probability(brute.screams[0]));

  meta.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace stoes
