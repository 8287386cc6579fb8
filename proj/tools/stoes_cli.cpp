// stoes: exact laws, simulations and brute-force checks for random mappings
// without fixed points.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stoes/experiment.hpp"
#include "stoes/laws.hpp"
#include "stoes/report.hpp"

namespace {

using nlohmann::json;

struct Settings {
  std::uint64_t n = 10;
  std::uint64_t replicates = 1'000'000;
  std::uint64_t seed = 20240601;
  std::string method = "direct";
  std::string model = "toes";
  std::vector<std::string> tables;
  std::vector<std::uint64_t> qn_sizes;
  unsigned threads = 0;
  std::string format = "pretty";
  std::string out = "-";
  std::string config;
};

/// Fills every setting whose flag was not given from the JSON config file.
void apply_config_file(Settings& s, const CLI::App& app) {
  if (s.config.empty()) return;
  std::ifstream in(s.config);
  if (!in) throw std::runtime_error("cannot read config file '" + s.config + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("config file '" + s.config + "': " + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("config file '" + s.config + "' must hold a JSON object");

  auto given = [&](const std::string& flag) {
    for (const CLI::App* a : {&app, app.get_subcommands().empty() ? &app : app.get_subcommands().front()}) {
      try {
        if (a->count(flag) > 0) return true;
      } catch (const CLI::OptionNotFound&) {
      }
    }
    return false;
  };
  auto take = [&](const char* key, const std::string& flag, auto& target) {
    if (j.contains(key) && !given(flag)) j.at(key).get_to(target);
  };
  take("n", "--n", s.n);
  take("replicates", "--reps", s.replicates);
  take("seed", "--seed", s.seed);
  take("method", "--method", s.method);
  take("model", "--model", s.model);
  take("threads", "--threads", s.threads);
  take("format", "--format", s.format);
  take("out", "--out", s.out);
  take("qn_sizes", "--sizes", s.qn_sizes);
  if (j.contains("tables") && !given("--table")) {
    const json& t = j.at("tables");
    s.tables = t.is_array() ? t.get<std::vector<std::string>>() : std::vector<std::string>{t.get<std::string>()};
  }
}

void add_output_options(CLI::App& cmd, Settings& s) {
  cmd.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"csv", "json", "pretty"}));
  cmd.add_option("--out", s.out, "Output path, - for stdout");
  cmd.add_option("--config", s.config, "JSON config file; flags override its values")->check(CLI::ExistingFile);
}

void add_sim_options(CLI::App& cmd, Settings& s) {
  cmd.add_option("--n", s.n, "Number of people (points)")->check(CLI::PositiveNumber);
  cmd.add_option("--reps", s.replicates, "Monte Carlo replicates")->check(CLI::PositiveNumber);
  cmd.add_option("--seed", s.seed, "Master seed");
  cmd.add_option("--threads", s.threads, "Worker threads (default $STOES_THREADS or hardware concurrency)");
}

stoes::ExperimentConfig to_config(const Settings& s, stoes::Method method) {
  stoes::ExperimentConfig c;
  c.n = s.n;
  c.replicates = s.replicates;
  c.seed = s.seed;
  c.method = method;
  c.threads = s.threads;
  c.qn_sizes = s.qn_sizes;
  for (const auto& t : s.tables) c.targets.push_back(stoes::parse_table(t));
  return c;
}

bool is_table_id(const std::string& name) {
  try {
    stoes::parse_table(name);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

/// Method used by `tables` to fill each table's simulation column.
stoes::Method table_method(stoes::TableId id) {
  switch (id) {
    case stoes::TableId::qn: return stoes::Method::exact;
    case stoes::TableId::components: return stoes::Method::rejection;
    case stoes::TableId::repeats: return stoes::Method::direct;
    default: return stoes::Method::core_joint;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact laws, simulations and brute-force checks for random mappings without fixed points"};
  app.require_subcommand(1);
  Settings s;

  auto* exact = app.add_subcommand("exact", "Compute an exact law or table");
  exact->add_option("--n", s.n, "Number of people (points)")->check(CLI::PositiveNumber);
  exact->add_option("--model", s.model, "Mapping model")->check(CLI::IsMember({"standard", "toes", "derangement"}));
  exact->add_option("--table", s.tables,
                    "Law (component-pmf, core-size-pmf, cycle-mean, component-mean, scream-pmf, cross-moment) "
                    "or table id (1, 2, 3, cycles, core)");
  exact->add_option("--sizes", s.qn_sizes, "Sizes for table 1 (default: 5, 10, 15, 20, 30, ..., 100, 1000, 10000)");
  add_output_options(*exact, s);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimates against the exact laws");
  add_sim_options(*simulate, s);
  simulate->add_option("--method", s.method, "Sampler")
      ->check(CLI::IsMember({"direct", "rejection", "core-joint", "brute-force"}));
  simulate->add_option("--table", s.tables, "Table id: 1, 2, 3, cycles, core, repeats (repeatable)");
  add_output_options(*simulate, s);

  auto* validate = app.add_subcommand("validate", "Exhaustive enumeration against every exact law (n <= 7)");
  validate->add_option("--n", s.n, "Number of people (2..7)")->check(CLI::Range(2, 7));
  add_output_options(*validate, s);

  auto* tables = app.add_subcommand("tables", "Reproduce the reference tables");
  tables->add_option("table", s.tables, "1, 2, 3, cycles, core (default: all)");
  add_sim_options(*tables, s);
  add_output_options(*tables, s);

  CLI11_PARSE(app, argc, argv);

  try {
    apply_config_file(s, app);
    const stoes::OutputFormat format = stoes::parse_format(s.format);
    std::vector<stoes::ExperimentReport> reports;
    int status = 0;

    if (exact->parsed()) {
      if (s.tables.empty()) throw std::invalid_argument("exact needs --table (or \"tables\" in the config file)");
      for (const auto& t : s.tables) {
        if (is_table_id(t)) {
          Settings one = s;
          one.tables = {t};
          auto config = to_config(one, stoes::Method::exact);
          if (config.targets[0] == stoes::TableId::qn && config.qn_sizes.empty() && exact->count("--n") > 0) {
            config.qn_sizes = {s.n};
          }
          config.validate();
          reports.push_back(stoes::run_table(config, config.targets[0]));
        } else {
          reports.push_back(stoes::law_report(stoes::parse_table_kind(t), s.n, stoes::parse_model(s.model)));
        }
      }
    } else if (simulate->parsed()) {
      if (s.tables.empty()) throw std::invalid_argument("simulate needs --table (or \"tables\" in the config file)");
      reports = stoes::run_experiment(to_config(s, stoes::parse_method(s.method)));
      for (const auto& r : reports) status |= r.metadata.mismatches > 0;
    } else if (validate->parsed()) {
      reports.push_back(stoes::validate_brute_force(s.n));
      status = reports.back().metadata.mismatches > 0;
    } else if (tables->parsed()) {
      if (s.tables.empty()) s.tables = {"1", "2", "3", "cycles", "core"};
      for (const auto& t : s.tables) {
        const stoes::TableId id = stoes::parse_table(t);
        auto config = to_config(s, table_method(id));
        config.targets = {id};
        reports.push_back(stoes::run_table(config, id));
      }
    }
    stoes::emit_to_path(s.out, reports, format);
    return status;
  } catch (const std::exception& e) {
    std::cerr << "stoes: error: " << e.what() << '\n';
    return 2;
  }
}
