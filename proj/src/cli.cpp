#include "vaxalloc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>

#include <CLI11.hpp>

#include "vaxalloc/oracle.hpp"
#include "vaxalloc/report.hpp"

#ifndef VAXALLOC_DEFAULT_DATASET
#define VAXALLOC_DEFAULT_DATASET "data/synthetic_countries.csv"
#endif

namespace vaxalloc::cli {

namespace {

using report::Json;
using report::Table;

// Output could not be written, or the dataset is unusable.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Dataset {
  std::string path;
  std::vector<CountryRecord> records;
};

struct Country {
  std::string code;
  EconomyProfile profile;
};

const char* command_name(Command c) {
  switch (c) {
    case Command::Solve: return "solve";
    case Command::Frontier: return "frontier";
    case Command::Sweep: return "sweep";
    case Command::Summarize: return "summarize";
    case Command::Audit: return "audit";
    case Command::Calibrate: return "calibrate";
  }
  return "unknown";
}

bool in_unit(double x) { return std::isfinite(x) && x > 0.0 && x < 1.0; }
bool probability(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

Json grid_json(const GridSpec& g) {
  return Json{{"beta_min", g.beta_min}, {"beta_max", g.beta_max}, {"step", g.step},
              {"points", g.values().size()}};
}

Json base_meta(const RunConfig& cfg, const Dataset& data) {
  Json meta;
  meta["tool"] = "vaxalloc";
  meta["command"] = command_name(cfg.command);
  meta["dataset"] = Json{{"path", data.path}, {"records", data.records.size()}};
  meta["gamma"] = cfg.gamma;
  return meta;
}

std::vector<Country> select_countries(const RunConfig& cfg, const Dataset& data) {
  std::map<std::string, const CountryRecord*> by_code;
  for (const auto& r : data.records) by_code[r.country_code] = &r;

  std::vector<Country> out;
  if (cfg.countries.empty()) {
    for (const auto& r : data.records) out.push_back({r.country_code, calibrate(r, cfg.gamma)});
    return out;
  }
  for (const auto& code : cfg.countries) {
    auto it = by_code.find(code);
    if (it == by_code.end()) throw UsageError("country '" + code + "' not in dataset " + data.path);
    out.push_back({code, calibrate(*it->second, cfg.gamma)});
  }
  return out;
}

void emit(const Table& table, const Json& meta, Format format, std::ostream& out) {
  if (format == Format::Json) {
    report::write_json(out, table, meta);
  } else {
    report::write_csv(out, table);
  }
}

void emit_to(const Table& table, const Json& meta, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output_path.empty()) {
    emit(table, meta, cfg.output_format, out);
    return;
  }
  std::ofstream file(cfg.output_path, std::ios::binary);
  if (!file) throw DataError("cannot write " + cfg.output_path);
  emit(table, meta, cfg.output_format, file);
}

void report_degenerate(std::size_t count, Json& meta, std::ostream& err) {
  if (count == 0) return;
  const std::string msg = std::to_string(count) +
                          " degenerate scenario(s): vaccination leaves effective labor unchanged, "
                          "labor split reported";
  meta["warnings"].push_back(msg);
  err << "warning: " << msg << '\n';
}

int run_solve(const RunConfig& cfg, const Dataset& data, std::ostream& out, std::ostream& err) {
  Table table{report::kSolveColumns, {}};
  std::size_t degenerate = 0;
  for (const auto& c : select_countries(cfg, data)) {
    for (double vol : cfg.v_over_l) {
      const double vaccines = vaccines_for(c.profile, vol);
      for (double bw : cfg.beta_white) {
        for (double bb : cfg.beta_blue) {
          const AllocationResult r = solve(c.profile, {bw, bb, vaccines});
          degenerate += r.clamp == Clamp::Degenerate;
          table.add_row({c.code, bw, bb, vol, r.v_blue_star, r.blue_share(vaccines),
                         std::string(to_string(r.clamp)), r.objective, r.surplus_blue,
                         r.surplus_white});
        }
      }
    }
  }
  Json meta = base_meta(cfg, data);
  meta["v_over_l"] = cfg.v_over_l;
  meta["beta_w"] = cfg.beta_white;
  meta["beta_b"] = cfg.beta_blue;
  meta["warnings"] = Json::array();
  report_degenerate(degenerate, meta, err);
  emit_to(table, meta, cfg, out);
  return kExitOk;
}

int run_frontier(const RunConfig& cfg, const Dataset& data, std::ostream& out, std::ostream& err) {
  const std::vector<double> beta_white =
      cfg.beta_white.empty() ? std::vector<double>{0.05, 0.25} : cfg.beta_white;
  Table table{report::kFrontierColumns, {}};
  std::size_t degenerate = 0;
  for (const auto& c : select_countries(cfg, data)) {
    for (double bw : beta_white) {
      for (double vol : cfg.v_over_l) {
        for (const FrontierPoint& pt : frontier_curve(c.profile, bw, vol, cfg.grid)) {
          degenerate += pt.clamp == Clamp::Degenerate;
          table.add_row({c.code, bw, vol, pt.beta_blue, pt.v_ratio, std::string(to_string(pt.clamp))});
        }
      }
    }
  }
  Json meta = base_meta(cfg, data);
  meta["grid"] = grid_json(cfg.grid);
  meta["v_over_l"] = cfg.v_over_l;
  meta["beta_w"] = beta_white;
  meta["crossing_points"] = Json::array();
  for (double bw : beta_white) {
    meta["crossing_points"].push_back(
        Json{{"beta_w", bw}, {"beta_b", crossing_point(bw, cfg.gamma)}});
  }
  meta["warnings"] = Json::array();
  report_degenerate(degenerate, meta, err);
  emit_to(table, meta, cfg, out);
  return kExitOk;
}

void append_sweep_rows(Table& table, const std::string& code, const SweepGrid& sweep,
                       std::size_t& degenerate) {
  for (const SweepCell& cell : sweep.cells()) {
    degenerate += cell.result.clamp == Clamp::Degenerate;
    table.add_row({code, sweep.v_over_l(), cell.beta_white, cell.beta_blue, sweep.v_ratio(cell),
                   std::string(to_string(cell.result.clamp))});
  }
}

int run_sweep(const RunConfig& cfg, const Dataset& data, std::ostream& out, std::ostream& err) {
  Json meta = base_meta(cfg, data);
  meta["grid"] = grid_json(cfg.grid);
  meta["v_over_l"] = cfg.v_over_l;
  meta["warnings"] = Json::array();

  const auto countries = select_countries(cfg, data);
  if (cfg.output_dir.empty()) {
    Table table{report::kSweepColumns, {}};
    std::size_t degenerate = 0;
    for (const auto& c : countries) {
      for (double vol : cfg.v_over_l) {
        append_sweep_rows(table, c.code, sweep_matrix(c.profile, vol, cfg.grid, cfg.execution),
                          degenerate);
      }
    }
    report_degenerate(degenerate, meta, err);
    emit_to(table, meta, cfg, out);
    return kExitOk;
  }

  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  if (ec) throw DataError("cannot create " + cfg.output_dir + ": " + ec.message());
  const char* ext = cfg.output_format == Format::Json ? ".json" : ".csv";
  for (const auto& c : countries) {
    for (double vol : cfg.v_over_l) {
      Table table{report::kSweepColumns, {}};
      std::size_t degenerate = 0;
      append_sweep_rows(table, c.code, sweep_matrix(c.profile, vol, cfg.grid, cfg.execution),
                        degenerate);
      Json file_meta = meta;
      file_meta["country"] = c.code;
      file_meta["v_over_l"] = vol;
      report_degenerate(degenerate, file_meta, err);

      const auto path = std::filesystem::path(cfg.output_dir) /
                        ("sweep_" + c.code + "_" + report::format_number(vol) + ext);
      std::ofstream file(path, std::ios::binary);
      if (!file) throw DataError("cannot write " + path.string());
      emit(table, file_meta, cfg.output_format, file);
      out << path.string() << '\n';
    }
  }
  return kExitOk;
}

int run_summarize(const RunConfig& cfg, const Dataset& data, std::ostream& out, std::ostream& err) {
  Table table{report::kSummarizeColumns, {}};
  std::size_t degenerate = 0;
  for (const auto& c : select_countries(cfg, data)) {
    for (double vol : cfg.v_over_l) {
      const SweepGrid sweep = sweep_matrix(c.profile, vol, cfg.grid, cfg.execution);
      for (const auto& cell : sweep.cells()) degenerate += cell.result.clamp == Clamp::Degenerate;
      const ThresholdSummary s = threshold_share(sweep, cfg.threshold);
      table.add_row({c.code, vol, s.threshold, s.share_exceeding});
    }
  }
  Json meta = base_meta(cfg, data);
  meta["grid"] = grid_json(cfg.grid);
  meta["v_over_l"] = cfg.v_over_l;
  meta["threshold"] = cfg.threshold;
  meta["comparison"] = "beta_b > beta_w cells with v_ratio > threshold";
  meta["warnings"] = Json::array();
  report_degenerate(degenerate, meta, err);
  emit_to(table, meta, cfg, out);
  return kExitOk;
}

int run_audit(const RunConfig& cfg, const Dataset& data, std::ostream& out, std::ostream& err) {
  const std::vector<double> lattice = cfg.grid.values();
  const auto& bws = cfg.beta_white.empty() ? lattice : cfg.beta_white;
  const auto& bbs = cfg.beta_blue.empty() ? lattice : cfg.beta_blue;
  const OracleConfig oracle_cfg{.grid_points = cfg.oracle_points, .refine = true};

  Table table{report::kAuditColumns, {}};
  std::size_t degenerate = 0;
  std::size_t disagreements = 0;
  for (const auto& c : select_countries(cfg, data)) {
    const EconomyProfile& p = c.profile;
    const double scale = p.alpha_white * p.labor_white + p.alpha_blue * p.labor_blue;
    for (double vol : cfg.v_over_l) {
      const double vaccines = vaccines_for(p, vol);
      for (double bw : bws) {
        for (double bb : bbs) {
          const Scenario s{bw, bb, vaccines};
          const AllocationResult r = solve(p, s);
          const OracleResult o = brute_force_optimum(p, s, oracle_cfg);
          bool agree = r.objective <= o.objective + 1e-9 * scale;
          if (r.clamp == Clamp::Degenerate) {
            ++degenerate;
          } else {
            agree = agree && std::abs(r.v_blue_star - o.v_blue) <= o.grid_step;
          }
          disagreements += !agree;
          table.add_row({c.code, vol, bw, bb, r.v_blue_star, o.v_blue, r.objective, o.objective,
                         o.grid_step, agree});
        }
      }
    }
  }
  Json meta = base_meta(cfg, data);
  meta["v_over_l"] = cfg.v_over_l;
  meta["oracle"] = Json{{"grid_points", cfg.oracle_points}, {"refine", true}};
  if (cfg.beta_white.empty() || cfg.beta_blue.empty()) meta["grid"] = grid_json(cfg.grid);
  meta["disagreements"] = disagreements;
  meta["warnings"] = Json::array();
  report_degenerate(degenerate, meta, err);
  if (disagreements > 0) {
    const std::string msg = std::to_string(disagreements) + " scenario(s) disagree with the oracle";
    meta["warnings"].push_back(msg);
    err << "warning: " << msg << '\n';
  }
  emit_to(table, meta, cfg, out);
  return kExitOk;
}

int run_calibrate(const RunConfig& cfg, const Dataset& data, std::ostream& out, std::ostream&) {
  Table table{report::kCalibrateColumns, {}};
  for (const auto& c : select_countries(cfg, data)) {
    const auto& rec = *std::find_if(data.records.begin(), data.records.end(),
                                    [&](const CountryRecord& r) { return r.country_code == c.code; });
    const EconomyProfile& p = c.profile;
    table.add_row({c.code, rec.employment_total, rec.telework_share, p.labor_white, p.labor_blue,
                   p.alpha_white, p.alpha_blue, p.gamma});
  }
  Json meta = base_meta(cfg, data);
  meta["warnings"] = Json::array();
  emit_to(table, meta, cfg, out);
  return kExitOk;
}

}  // namespace

bool parse_args(int argc, const char* const* argv, RunConfig& cfg, std::ostream& out) {
  CLI::App app{"Unemployment-minimizing vaccine allocation between blue- and white-collar workers"};
  app.name("vaxalloc");
  app.require_subcommand(1);

  std::string format = "csv";
  bool serial = false;

  struct Sub {
    Command command;
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {Command::Solve, "solve", "Optimal allocation for explicit scenarios"},
      {Command::Frontier, "frontier", "Blue-collar vaccine share as a function of beta_b"},
      {Command::Sweep, "sweep", "Allocation matrices over the (beta_w, beta_b) lattice"},
      {Command::Summarize, "summarize", "Share of beta_b > beta_w scenarios above a threshold"},
      {Command::Audit, "audit", "Compare the closed-form solution against the brute-force oracle"},
      {Command::Calibrate, "calibrate", "Calibrated economy profiles for the dataset"},
  };

  std::vector<std::pair<CLI::App*, Command>> registered;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("-i,--input", cfg.input_path,
                    std::string("Country CSV (default: $") + kDatasetEnv + " or bundled synthetic data)");
    sub->add_option("--country", cfg.countries, "Country codes, comma separated")->delimiter(',');
    sub->add_option("--gamma", cfg.gamma, "Remote-work productivity")->capture_default_str();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    sub->add_option("-o,--output", cfg.output_path, "Output file (default: stdout)");
    if (s.command == Command::Calibrate) {
      registered.emplace_back(sub, s.command);
      continue;
    }
    sub->add_option("--v-over-l", cfg.v_over_l, "Vaccine availability as a share of the workforce")
        ->delimiter(',')
        ->capture_default_str();
    sub->add_option("--beta-w", cfg.beta_white, "White-collar infection risks")->delimiter(',');
    if (s.command != Command::Frontier) {
      sub->add_option("--beta-b", cfg.beta_blue, "Blue-collar infection risks")->delimiter(',');
    }
    if (s.command != Command::Solve) {
      sub->add_option("--grid-min", cfg.grid.beta_min, "Lowest lattice risk")->capture_default_str();
      sub->add_option("--grid-max", cfg.grid.beta_max, "Highest lattice risk")->capture_default_str();
      sub->add_option("--grid-step", cfg.grid.step, "Lattice spacing")->capture_default_str();
    }
    if (s.command == Command::Summarize) {
      sub->add_option("--threshold", cfg.threshold, "Blue-collar share threshold")->capture_default_str();
    }
    if (s.command == Command::Sweep || s.command == Command::Summarize) {
      sub->add_flag("--serial", serial, "Evaluate lattice cells on one thread");
    }
    if (s.command == Command::Sweep) {
      sub->add_option("--output-dir", cfg.output_dir, "Write one file per (country, V/L)");
    }
    if (s.command == Command::Audit) {
      sub->add_option("--grid-points", cfg.oracle_points, "Oracle grid size")->capture_default_str();
    }
    registered.emplace_back(sub, s.command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return false;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return false;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (const auto& [sub, command] : registered) {
    if (sub->parsed()) cfg.command = command;
  }
  cfg.output_format = format == "json" ? Format::Json : Format::Csv;
  cfg.execution = serial ? Execution::Serial : Execution::Parallel;
  validate(cfg);
  return true;
}

void validate(const RunConfig& cfg) {
  if (!std::isfinite(cfg.gamma) || cfg.gamma <= 0.0 || cfg.gamma > 1.0) {
    throw UsageError("--gamma must lie in (0, 1]");
  }
  for (double v : cfg.v_over_l) {
    if (!in_unit(v)) throw UsageError("--v-over-l values must lie in (0, 1)");
  }
  for (const auto* list : {&cfg.beta_white, &cfg.beta_blue}) {
    for (double b : *list) {
      if (!probability(b)) throw UsageError("infection risks must lie in [0, 1]");
    }
  }
  if (cfg.command != Command::Calibrate && cfg.v_over_l.empty()) {
    throw UsageError("--v-over-l needs at least one value");
  }
  switch (cfg.command) {
    case Command::Solve:
      if (cfg.beta_white.empty() || cfg.beta_blue.empty()) {
        throw UsageError("solve requires --beta-w and --beta-b");
      }
      break;
    case Command::Audit:
      if (cfg.beta_white.empty() != cfg.beta_blue.empty()) {
        throw UsageError("audit takes both --beta-w and --beta-b, or neither for the full lattice");
      }
      if (cfg.oracle_points < 3) throw UsageError("--grid-points must be at least 3");
      break;
    case Command::Summarize:
      if (!in_unit(cfg.threshold)) throw UsageError("--threshold must lie in (0, 1)");
      break;
    default:
      break;
  }
  if (cfg.command != Command::Solve && cfg.command != Command::Calibrate) {
    try {
      validate(cfg.grid);
    } catch (const InvalidInput& e) {
      throw UsageError(e.what());
    }
  }
  if (!cfg.output_dir.empty() && !cfg.output_path.empty()) {
    throw UsageError("--output and --output-dir are mutually exclusive");
  }
}

std::string dataset_path(const RunConfig& cfg) {
  if (!cfg.input_path.empty()) return cfg.input_path;
  if (const char* env = std::getenv(kDatasetEnv); env != nullptr && *env != '\0') return env;
  return VAXALLOC_DEFAULT_DATASET;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    Dataset data;
    data.path = dataset_path(cfg);
    data.records = load_countries(data.path);
    switch (cfg.command) {
      case Command::Solve: return run_solve(cfg, data, out, err);
      case Command::Frontier: return run_frontier(cfg, data, out, err);
      case Command::Sweep: return run_sweep(cfg, data, out, err);
      case Command::Summarize: return run_summarize(cfg, data, out, err);
      case Command::Audit: return run_audit(cfg, data, out, err);
      case Command::Calibrate: return run_calibrate(cfg, data, out, err);
    }
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    if (!parse_args(argc, argv, cfg, out)) return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kExitUsage;
  }
  return run(cfg, out, err);
}

}  // namespace vaxalloc::cli
