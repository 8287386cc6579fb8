#pragma once

// Experiment runner behind the CLI: builds exact columns from the laws,
// simulated columns from the samplers, and brute-force columns from
// enumeration, for the n = 10 reference tables.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stoes/laws.hpp"
#include "stoes/report.hpp"
#include "stoes/rng.hpp"

namespace stoes {

enum class Method { exact, direct, rejection, core_joint, brute_force };

std::string_view to_string(Method method);
Method parse_method(std::string_view name);

/// Table identifiers accepted by the CLI.
///   1 / qn          q_n, probability someone screams
///   2 / components  mean component counts
///   3 / scream      distribution of the number of screaming pairs
///   cycles          mean cycle counts in the core
///   core            distribution of the core size
///   repeats         probability of no repeated component / cycle sizes
enum class TableId { qn, components, scream, cycles, core, repeats };

std::string_view to_string(TableId id);
TableId parse_table(std::string_view name);

struct ExperimentConfig {
  std::uint64_t n = 10;
  std::uint64_t replicates = 1'000'000;
  std::uint64_t seed = 20240601;
  Method method = Method::direct;
  std::vector<TableId> targets;
  unsigned threads = 0;  // 0: default_threads()
  /// q_n table sizes when method is exact; empty means default_qn_sizes().
  std::vector<std::uint64_t> qn_sizes;

  /// Throws std::invalid_argument on an unusable combination (brute force
  /// beyond n = 7, rejection for a core table, ...).
  void validate() const;
};

/// Worker count: $STOES_THREADS when set, else hardware concurrency.
unsigned default_threads();

/// Default sizes for the q_n table.
std::vector<std::uint64_t> default_qn_sizes();

/// Mergeable integer sufficient statistics of per-replicate values.
struct Tally {
  std::uint64_t replicates = 0;
  std::vector<std::uint64_t> sum;
  std::vector<std::uint64_t> sum_sq;

  explicit Tally(std::size_t stats = 0) : sum(stats, 0), sum_sq(stats, 0) {}
  void add(std::span<const std::uint64_t> values);
  void merge(const Tally& other);

  double mean(std::size_t i) const;
  /// Standard error of the mean from the sample variance.
  double std_error(std::size_t i) const;
};

inline constexpr std::uint64_t kDefaultBatch = 10'000;

/// Writes one replicate's statistic values into `values`.
using ReplicateFn = std::function<void(RngStream&, std::span<std::uint64_t>)>;

/// Runs `replicates` replicates in fixed batches of `batch_size`. Batch k draws
/// from RngStream::for_stream(seed, k) and its tally is merged in batch order,
/// so the result does not depend on the number of worker threads.
/// `make_replicate` is called once per worker.
Tally run_replicates(std::uint64_t replicates, std::uint64_t seed, unsigned threads, std::size_t stats,
                     const std::function<ReplicateFn()>& make_replicate, std::uint64_t batch_size = kDefaultBatch);

/// Builds one table report for the config's n, method and replicates.
ExperimentReport run_table(const ExperimentConfig& config, TableId table);

/// Exact law table as a report. Record names are "<model>.<law>[index]";
/// component pmf and cross-moment entries are keyed by spectrum or pair.
ExperimentReport law_report(TableKind kind, std::uint64_t n, Model model);

/// All of config.targets, in order.
std::vector<ExperimentReport> run_experiment(const ExperimentConfig& config);

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

struct RepeatedSizeStats {
  Estimate no_repeat_components;
  Estimate no_repeat_cycles;
  Estimate no_repeat_either;
};

/// Monte Carlo estimates, by direct simulation and decomposition, of the
/// probabilities that no component size / no cycle length / neither repeats.
RepeatedSizeStats repeated_size_stats(std::uint64_t n, std::uint64_t replicates, std::uint64_t seed,
                                      unsigned threads = 0);

/// Brute-force enumeration against every exact law at n (2 <= n <= 7).
/// metadata.mismatches counts cells that are not exactly equal.
ExperimentReport validate_brute_force(std::uint64_t n);

}  // namespace stoes
