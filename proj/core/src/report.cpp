#include "stoes/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace stoes {

using nlohmann::ordered_json;

namespace {

/// Longest "p/q" kept in exact_rational; larger values keep only the decimal.
constexpr std::size_t kMaxRationalChars = 256;

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const StatRecord* ExperimentReport::find(std::string_view name) const {
  const auto it = std::find_if(records.begin(), records.end(), [&](const StatRecord& r) { return r.name == name; });
  return it == records.end() ? nullptr : &*it;
}

void set_exact(StatRecord& record, const BigRat& value) {
  record.exact = to_fixed(value, 20);
  std::string rational = value.get_str();
  record.exact_rational = rational.size() <= kMaxRationalChars ? std::move(rational) : std::string();
}

std::string exact_fixed4(const StatRecord& record) {
  if (record.exact.empty()) return "";
  if (!record.exact_rational.empty()) return to_fixed(BigRat(record.exact_rational, 10), 4);
  const std::string& s = record.exact;
  const bool negative = !s.empty() && s[0] == '-';
  const std::string body = negative ? s.substr(1) : s;
  const auto dot = body.find('.');
  std::string digits = body;
  std::size_t frac = 0;
  if (dot != std::string::npos) {
    digits = body.substr(0, dot) + body.substr(dot + 1);
    frac = body.size() - dot - 1;
  }
  BigRat exact(BigInt(digits, 10), int_pow(10, frac));
  exact.canonicalize();
  if (negative) exact = -exact;
  return to_fixed(exact, 4);
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "pretty") return OutputFormat::pretty;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected csv|json|pretty)");
}

namespace {

void emit_csv(std::ostream& out, const std::vector<ExperimentReport>& reports) {
  out << kCsvHeader << '\n';
  for (const auto& report : reports) {
    for (const auto& r : report.records) {
      out << csv_field(r.name) << ',' << exact_fixed4(r) << ',' << (r.simulated ? fixed4(*r.simulated) : "") << ','
          << (r.std_error ? fixed4(*r.std_error) : "") << ',' << (r.z ? fixed4(*r.z) : "") << '\n';
    }
  }
}

ordered_json optional_number(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

ordered_json to_json(const ExperimentReport& report, bool include_timing) {
  const auto& m = report.metadata;
  ordered_json meta = {
      {"table", m.table},
      {"title", m.title},
      {"method", m.method},
      {"n", m.n},
      {"replicates", m.replicates},
      {"seed", m.seed},
      {"batch_size", m.batch_size},
      {"seed_rule", m.seed_rule},
      {"threads", m.threads},
      {"mismatches", m.mismatches},
  };
  if (include_timing) meta["wall_time"] = m.wall_time;
  ordered_json records = ordered_json::array();
  for (const auto& r : report.records) {
    records.push_back({
        {"name", r.name},
        {"group", r.group},
        {"index", r.index ? ordered_json(*r.index) : ordered_json(nullptr)},
        {"exact", r.exact.empty() ? ordered_json(nullptr) : ordered_json(r.exact)},
        {"exact_rational", r.exact_rational.empty() ? ordered_json(nullptr) : ordered_json(r.exact_rational)},
        {"simulated", optional_number(r.simulated)},
        {"std_error", optional_number(r.std_error)},
        {"z", optional_number(r.z)},
    });
  }
  return {{"metadata", meta}, {"records", records}};
}

std::optional<double> read_number(const ordered_json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

std::string read_string(const ordered_json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return "";
  return j.at(key).get<std::string>();
}

ExperimentReport from_json(const ordered_json& j) {
  ExperimentReport report;
  const auto& meta = j.at("metadata");
  auto& m = report.metadata;
  m.table = meta.at("table").get<std::string>();
  m.title = meta.at("title").get<std::string>();
  m.method = meta.at("method").get<std::string>();
  m.n = meta.at("n").get<std::uint64_t>();
  m.replicates = meta.at("replicates").get<std::uint64_t>();
  m.seed = meta.at("seed").get<std::uint64_t>();
  m.batch_size = meta.at("batch_size").get<std::uint64_t>();
  m.seed_rule = meta.at("seed_rule").get<std::string>();
  m.threads = meta.at("threads").get<unsigned>();
  m.mismatches = meta.at("mismatches").get<std::uint64_t>();
  m.wall_time = meta.value("wall_time", 0.0);
  for (const auto& rj : j.at("records")) {
    StatRecord r;
    r.name = rj.at("name").get<std::string>();
    r.group = rj.at("group").get<std::string>();
    if (!rj.at("index").is_null()) r.index = rj.at("index").get<std::int64_t>();
    r.exact = read_string(rj, "exact");
    r.exact_rational = read_string(rj, "exact_rational");
    r.simulated = read_number(rj, "simulated");
    r.std_error = read_number(rj, "std_error");
    r.z = read_number(rj, "z");
    report.records.push_back(std::move(r));
  }
  return report;
}

/// Fixed-width text table.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& out) const {
    std::vector<std::size_t> width;
    for (const auto& row : rows_) {
      width.resize(std::max(width.size(), row.size()), 0);
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::string line;
      for (std::size_t c = 0; c < rows_[i].size(); ++c) {
        if (c > 0) line += "  ";
        line += std::string(width[c] - rows_[i][c].size(), ' ') + rows_[i][c];
      }
      out << line << '\n';
      if (i == 0) {
        std::size_t total = 0;
        for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c > 0 ? 2 : 0);
        out << std::string(total, '-') << '\n';
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string index_label(const std::string& stat) {
  if (stat.rfind("q_n", 0) == 0) return "n";
  if (stat.rfind("scream", 0) == 0) return "k";
  if (stat.rfind("core_size", 0) == 0) return "r";
  return "j";
}

std::string stat_of(const StatRecord& r) {
  const auto dot = r.name.find('.');
  const auto open = r.name.find('[');
  return r.name.substr(dot + 1, open == std::string::npos ? std::string::npos : open - dot - 1);
}

void emit_pretty_one(std::ostream& out, const ExperimentReport& report, bool include_timing) {
  const auto& m = report.metadata;
  out << m.title << '\n';
  out << "method " << m.method;
  if (m.n > 0 && m.table != "1") out << ", n = " << m.n;
  if (m.replicates > 0) {
    out << ", " << m.replicates << " replicates, seed " << m.seed << ", " << m.threads << " thread"
        << (m.threads == 1 ? "" : "s");
  }
  if (m.method == "brute-force") out << ", mismatches " << m.mismatches;
  if (include_timing) out << ", " << std::fixed << std::setprecision(3) << m.wall_time << " s" << std::defaultfloat;
  out << "\n\n";

  // Indexed records: one row per index, columns per group.
  struct Column {
    std::string group;
    std::string stat;
    bool simulated = false;
  };
  std::vector<Column> columns;
  std::set<std::int64_t> indices;
  for (const auto& r : report.records) {
    if (!r.index) continue;
    indices.insert(*r.index);
    const std::string stat = stat_of(r);
    auto it = std::find_if(columns.begin(), columns.end(),
                           [&](const Column& c) { return c.group == r.group && c.stat == stat; });
    if (it == columns.end()) {
      columns.push_back({r.group, stat, false});
      it = columns.end() - 1;
    }
    it->simulated = it->simulated || r.simulated.has_value();
  }
  if (!columns.empty()) {
    const bool qn_exact_only = m.table == "1" && columns.size() == 1 && !columns[0].simulated;
    if (qn_exact_only) {
      // Two side-by-side halves, n and q_n in each.
      const std::vector<std::int64_t> idx(indices.begin(), indices.end());
      const std::size_t half = (idx.size() + 1) / 2;
      TextTable t({"n", "q_n", "n", "q_n"});
      for (std::size_t i = 0; i < half; ++i) {
        auto cell = [&](std::int64_t n) {
          const StatRecord* r = report.find(columns[0].group + "." + columns[0].stat + "[" + std::to_string(n) + "]");
          return r ? exact_fixed4(*r) : std::string();
        };
        std::vector<std::string> row = {std::to_string(idx[i]), cell(idx[i])};
        if (i + half < idx.size()) {
          row.push_back(std::to_string(idx[i + half]));
          row.push_back(cell(idx[i + half]));
        }
        t.add(std::move(row));
      }
      t.print(out);
    } else {
      std::vector<std::string> header = {index_label(columns[0].stat)};
      for (const auto& c : columns) {
        header.push_back(c.group + " exact");
        if (c.simulated) {
          header.push_back(c.group + " sim");
          header.push_back("s.e.");
          header.push_back("z");
        }
      }
      TextTable t(header);
      for (std::int64_t i : indices) {
        std::vector<std::string> row = {std::to_string(i)};
        for (const auto& c : columns) {
          const StatRecord* r = report.find(c.group + "." + c.stat + "[" + std::to_string(i) + "]");
          row.push_back(r ? exact_fixed4(*r) : "");
          if (c.simulated) {
            row.push_back(r && r->simulated ? fixed4(*r->simulated) : "");
            row.push_back(r && r->std_error ? fixed4(*r->std_error) : "");
            row.push_back(r && r->z ? fixed4(*r->z) : "");
          }
        }
        t.add(std::move(row));
      }
      t.print(out);
    }
  }

  bool first_scalar = true;
  for (const auto& r : report.records) {
    if (r.index) continue;
    if (first_scalar && !columns.empty()) out << '\n';
    first_scalar = false;
    out << r.name << ": exact " << (r.exact.empty() ? "n/a" : exact_fixed4(r));
    if (r.simulated) out << ", sim " << fixed4(*r.simulated);
    if (r.std_error) out << ", s.e. " << fixed4(*r.std_error);
    if (r.z) out << ", z " << fixed4(*r.z);
    out << '\n';
  }
}

}  // namespace

void emit(std::ostream& out, const std::vector<ExperimentReport>& reports, OutputFormat format, bool include_timing) {
  switch (format) {
    case OutputFormat::csv:
      emit_csv(out, reports);
      break;
    case OutputFormat::json: {
      if (reports.size() == 1) {
        out << to_json(reports[0], include_timing).dump(2) << '\n';
      } else {
        ordered_json all = ordered_json::array();
        for (const auto& r : reports) all.push_back(to_json(r, include_timing));
        out << all.dump(2) << '\n';
      }
      break;
    }
    case OutputFormat::pretty:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i > 0) out << '\n';
        emit_pretty_one(out, reports[i], include_timing);
      }
      break;
  }
}

std::string emit(const ExperimentReport& report, OutputFormat format, bool include_timing) {
  std::ostringstream out;
  emit(out, {report}, format, include_timing);
  return out.str();
}

void emit_to_path(const std::string& path, const std::vector<ExperimentReport>& reports, OutputFormat format) {
  if (path == "-") {
    emit(std::cout, reports, format);
    std::cout.flush();
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  emit(file, reports, format);
  file.close();
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

ExperimentReport parse_report_json(std::string_view text) {
  const ordered_json j = ordered_json::parse(text);
  if (j.is_array()) {
    if (j.size() != 1) throw std::invalid_argument("expected a single report, found " + std::to_string(j.size()));
    return from_json(j[0]);
  }
  return from_json(j);
}

std::vector<ExperimentReport> parse_reports_json(std::string_view text) {
  const ordered_json j = ordered_json::parse(text);
  std::vector<ExperimentReport> out;
  if (j.is_array()) {
    for (const auto& r : j) out.push_back(from_json(r));
  } else {
    out.push_back(from_json(j));
  }
  return out;
}

}  // namespace stoes
