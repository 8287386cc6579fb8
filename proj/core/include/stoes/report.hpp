#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stoes/exact.hpp"

namespace stoes {

/// One row of an experiment: an exact value (when one exists) alongside a
/// Monte Carlo or enumeration estimate. z = (simulated - exact) / std_error.
struct StatRecord {
  std::string name;            // unique within a report, e.g. "toes.mean_components[2]"
  std::string group;           // column family, e.g. "toes" or "standard"
  std::optional<std::int64_t> index;  // row key (j, r, k or n); empty for scalars
  std::string exact;           // decimal string, 20 places; empty when unknown
  std::string exact_rational;  // "p/q" when the exact value is rational
  std::optional<double> simulated;
  std::optional<double> std_error;
  std::optional<double> z;

  friend bool operator==(const StatRecord&, const StatRecord&) = default;
};

struct ReportMetadata {
  std::string table;       // table id, e.g. "2"
  std::string title;
  std::string method;      // exact | direct | rejection | core-joint | brute-force
  std::uint64_t n = 0;
  std::uint64_t replicates = 0;
  std::uint64_t seed = 0;
  std::uint64_t batch_size = 0;
  std::string seed_rule;   // how batch streams derive from the master seed
  unsigned threads = 0;
  double wall_time = 0.0;  // seconds; not part of the reproducible payload
  std::uint64_t mismatches = 0;  // brute-force cells that differ from the exact law

  friend bool operator==(const ReportMetadata&, const ReportMetadata&) = default;
};

struct ExperimentReport {
  ReportMetadata metadata;
  std::vector<StatRecord> records;

  const StatRecord* find(std::string_view name) const;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

/// Sets exact / exact_rational from a rational value.
void set_exact(StatRecord& record, const BigRat& value);

/// 4-d.p. rendering of the record's exact value ("" when unknown).
std::string exact_fixed4(const StatRecord& record);

enum class OutputFormat { csv, json, pretty };

OutputFormat parse_format(std::string_view name);

/// CSV columns, in order.
inline constexpr std::string_view kCsvHeader = "statistic,exact,simulated,std_error,z";

/// Serializes reports. CSV/pretty round every decimal to 4 places; JSON keeps
/// full precision. JSON output for several reports is an array.
void emit(std::ostream& out, const std::vector<ExperimentReport>& reports, OutputFormat format,
          bool include_timing = true);
std::string emit(const ExperimentReport& report, OutputFormat format, bool include_timing = true);

/// Writes to `path` ("-" for stdout). Throws std::runtime_error with the path on failure.
void emit_to_path(const std::string& path, const std::vector<ExperimentReport>& reports, OutputFormat format);

/// Parses the JSON produced by emit(); accepts a single report object.
ExperimentReport parse_report_json(std::string_view text);
std::vector<ExperimentReport> parse_reports_json(std::string_view text);

}  // namespace stoes
