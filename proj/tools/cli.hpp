#pragma once

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "symwalk/io.hpp"
#include "symwalk/oracle.hpp"
#include "symwalk/symwalk.hpp"
#include "symwalk/verify.hpp"

namespace symwalk::cli {

using io::Json;

/// Parsed command line for every subcommand.
struct RunConfig {
  std::string subcommand;
  int n = 0;
  std::vector<std::string> generators;
  std::vector<std::string> weights;
  std::string start;
  std::string target;
  std::optional<double> t;
  std::string t_grid;
  std::string format = "json";
  bool classical = false;
  bool allow_n7 = false;
  bool dump_adjacency = false;
  std::string output;
};

struct Limits {
  int partition_cap = kDefaultPartitionCap;
  int table_cap = kDefaultCharacterTableCap;
  int oracle_cap = oracle::kDefaultOracleCap;

  /// SYMWALK_MAX_N, when set, replaces every cap.
  static Limits from_environment() {
    Limits limits;
    if (const char* value = std::getenv("SYMWALK_MAX_N")) {
      const int cap = std::atoi(value);
      if (cap > 0) limits.partition_cap = limits.table_cap = limits.oracle_cap = cap;
    }
    return limits;
  }
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what, ExitCode::usage) {}
};

namespace detail {

inline std::vector<double> time_grid(const RunConfig& cfg) {
  if (cfg.t && !cfg.t_grid.empty()) throw UsageError("--t and --t-grid are exclusive");
  if (cfg.t) return {*cfg.t};
  double lo = 0, hi = 2 * std::numbers::pi;
  int steps = 65;
  if (!cfg.t_grid.empty()) {
    std::stringstream ss(cfg.t_grid);
    std::string a, b, c;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') || !std::getline(ss, c))
      throw UsageError("--t-grid expects min,max,steps");
    try {
      lo = std::stod(a);
      hi = std::stod(b);
      steps = std::stoi(c);
    } catch (const std::exception&) {
      throw UsageError("--t-grid expects min,max,steps");
    }
    if (steps < 1) throw UsageError("--t-grid needs at least one step");
  }
  std::vector<double> out;
  for (int j = 0; j < steps; ++j)
    out.push_back(steps == 1 ? lo : lo + (hi - lo) * j / (steps - 1));
  return out;
}

inline Partition parse_class(const std::string& text, int n, const char* flag) {
  const Partition p = Partition::parse(text);
  if (p.size() != n)
    throw UsageError(std::string(flag) + " " + text + " is not a partition of " +
                     std::to_string(n));
  return p;
}

inline ClassFunction generator_function(const RunConfig& cfg) {
  if (cfg.generators.empty()) throw UsageError("at least one --generator is required");
  if (!cfg.weights.empty() && cfg.weights.size() != cfg.generators.size())
    throw UsageError("--weight must be given once per --generator");
  ClassFunction f(cfg.n);
  for (std::size_t i = 0; i < cfg.generators.size(); ++i) {
    const Partition gamma = parse_class(cfg.generators[i], cfg.n, "--generator");
    if (gamma.is_identity())
      throw DegenerateGenerator("the identity class does not generate edges");
    BigRational w = 1;
    if (!cfg.weights.empty()) {
      try {
        w = parse_rational(cfg.weights[i]);
      } catch (const std::exception&) {
        throw UsageError("cannot parse --weight " + cfg.weights[i]);
      }
    }
    if (w < 0) throw UsageError("generator weights must be nonnegative");
    f.set(gamma, f.weight(gamma) + w);
  }
  return f;
}

inline Partition start_class(const RunConfig& cfg) {
  return cfg.start.empty() ? Partition::identity(cfg.n)
                           : parse_class(cfg.start, cfg.n, "--start");
}

inline std::string dump(const Json& j) { return j.dump() + "\n"; }

inline std::shared_ptr<const CharacterTable> table_for(const RunConfig& cfg, const Limits& limits) {
  if (cfg.n > limits.partition_cap)
    throw ResourceLimit("n=" + std::to_string(cfg.n) + " exceeds partition cap " +
                        std::to_string(limits.partition_cap));
  return std::make_shared<const CharacterTable>(character_table(cfg.n, limits.table_cap));
}

inline oracle::OracleOptions oracle_options(const RunConfig& cfg, const Limits& limits) {
  return {limits.oracle_cap, cfg.allow_n7};
}

inline int cmd_characters(const RunConfig& cfg, const Limits& limits, std::ostream& out) {
  const auto table = table_for(cfg, limits);
  if (cfg.format == "csv") io::write_csv(*table, out);
  else out << dump(io::to_json(*table));
  return 0;
}

inline int cmd_spectrum(const RunConfig& cfg, const Limits& limits, std::ostream& out) {
  const WalkSpectrum spec(generator_function(cfg), table_for(cfg, limits));
  if (cfg.format == "csv") {
    out << "rep,dim,eigenvalue\n";
    for (const auto& line : spec.lines())
      out << '"' << line.rep.to_string() << "\"," << line.dim.str() << ','
          << to_exact_string(line.eigenvalue) << '\n';
    return 0;
  }
  Json j = io::to_json(spec);
  j["groups"] = io::to_json(eigenvalue_groups(spec));
  out << dump(j);
  return 0;
}

inline int cmd_amplitude(const RunConfig& cfg, const Limits& limits, std::ostream& out) {
  const WalkSpectrum spec(generator_function(cfg), table_for(cfg, limits));
  const Partition mu = start_class(cfg);
  if (cfg.target.empty()) throw UsageError("amplitude needs --target");
  const Partition lambda = parse_class(cfg.target, cfg.n, "--target");
  const auto times = time_grid(cfg);
  if (cfg.format == "csv") {
    out << "t,re,im,probability\n";
    char buffer[128];
    for (double t : times) {
      const auto a = class_amplitude(spec, lambda, mu, t);
      std::snprintf(buffer, sizeof buffer, "%.17g,%.17g,%.17g,%.17g\n", t, a.real(), a.imag(),
                    std::norm(a));
      out << buffer;
    }
    return 0;
  }
  Json samples = Json::array();
  for (double t : times) {
    const auto a = class_amplitude(spec, lambda, mu, t);
    Json s;
    s["t"] = t;
    s["re"] = a.real();
    s["im"] = a.imag();
    s["probability"] = std::norm(a);
    samples.push_back(std::move(s));
  }
  Json j;
  j["n"] = cfg.n;
  j["generator"] = io::generator_json(spec.generator());
  j["weights"] = io::weights_json(spec.generator());
  j["start"] = io::to_json(mu);
  j["target"] = io::to_json(lambda);
  j["samples"] = std::move(samples);
  out << dump(j);
  return 0;
}

inline int cmd_distribution(const RunConfig& cfg, const Limits& limits, std::ostream& out) {
  const WalkSpectrum spec(generator_function(cfg), table_for(cfg, limits));
  const Partition mu = start_class(cfg);
  std::vector<ClassDistribution> series;
  for (double t : time_grid(cfg))
    series.push_back(cfg.classical ? classical_class_distribution(spec, mu, t)
                                   : class_distribution(spec, mu, t));
  if (cfg.format == "csv") {
    io::write_time_series_csv(series, out);
  } else if (series.size() == 1) {
    out << dump(io::to_json(series.front(), spec.generator()));
  } else {
    Json arr = Json::array();
    for (const auto& d : series) arr.push_back(io::to_json(d, spec.generator()));
    out << dump(arr);
  }
  return 0;
}

inline int cmd_limit(const RunConfig& cfg, const Limits& limits, std::ostream& out) {
  const WalkSpectrum spec(generator_function(cfg), table_for(cfg, limits));
  const Partition mu = start_class(cfg);
  const auto dist = limiting_class_distribution(spec, mu);
  Json j = io::to_json(dist, spec.generator());
  j["groups"] = io::to_json(eigenvalue_groups(spec));
  Json tv;
  tv["symmetric_group"] = io::exact_value_json(tv_distance(dist, Support::symmetric_group));
  bool odd_mass = false;
  for (const auto& c : dist.classes)
    if (!c.partition.is_even_class() && c.probability != 0) odd_mass = true;
  tv["alternating_group"] =
      odd_mass ? Json(nullptr)
               : io::exact_value_json(tv_distance(dist, Support::alternating_group));
  j["tv_distance"] = std::move(tv);

  const auto& f = spec.generator();
  if (cfg.n >= 2 && f.is_indicator() && mu.is_identity()) {
    const Partition& gamma = f.weights().begin()->first;
    Json bound = nullptr;
    if (gamma.is_hook() && gamma[0] % 2 == 0) {
      bound = io::exact_value_json(symmetric_tv_lower_bound(cfg.n));
      bound["support"] = "symmetric_group";
    } else if (gamma.is_hook() && cfg.n % 2 == 1) {
      bound = io::exact_value_json(alternating_tv_lower_bound(cfg.n));
      bound["support"] = "alternating_group";
    }
    j["ncycle_tv_lower_bound"] = std::move(bound);
  }
  out << dump(j);
  return 0;
}

inline int cmd_table(const RunConfig& cfg, const Limits& limits, std::ostream& out) {
  if (cfg.n < 2) throw UsageError("table needs n >= 2");
  const auto table = table_for(cfg, limits);
  bool all_agree = true;
  if (cfg.format == "csv") out << "n,p,row,exact,decimal,agrees\n";
  for (int p = 2; p <= cfg.n; ++p) {
    const auto entry = table_ncycle_probability(cfg.n, p);
    const WalkSpectrum spec(ClassFunction::indicator(Partition::cycle_class(p, cfg.n)), table);
    const auto engine =
        limiting_class_distribution(spec, Partition::identity(cfg.n)).per_element(Partition{cfg.n});
    const bool agrees = engine == entry.value;
    all_agree = all_agree && agrees;
    if (cfg.format == "csv") {
      out << cfg.n << ',' << p << ",\"" << row_label(entry.row) << "\","
          << to_exact_string(entry.value) << ',' << to_decimal_string(entry.value) << ','
          << (agrees ? "true" : "false") << '\n';
      continue;
    }
    Json j;
    j["n"] = cfg.n;
    j["p"] = p;
    j["row"] = row_label(entry.row);
    j["row_id"] = static_cast<int>(entry.row);
    j["exact"] = to_exact_string(entry.value);
    j["decimal"] = to_decimal_string(entry.value);
    j["engine_exact"] = to_exact_string(engine);
    j["agrees"] = agrees;
    out << dump(j);
  }
  return all_agree ? 0 : static_cast<int>(ExitCode::verification_failure);
}

inline int cmd_verify(const RunConfig& cfg, const Limits& limits, std::ostream& out) {
  verify::Options options;
  options.table_cap = limits.table_cap;
  options.oracle = oracle_options(cfg, limits);
  const auto report = verify::run(cfg.n, options);
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (c.max_abs_error) e["max_abs_error"] = *c.max_abs_error;
    if (c.tolerance) e["tolerance"] = *c.tolerance;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  Json j;
  j["n"] = report.n;
  j["passed"] = report.passed();
  j["failed"] = report.failed();
  j["checks"] = std::move(checks);
  out << dump(j);
  return report.ok() ? 0 : static_cast<int>(ExitCode::verification_failure);
}

inline int cmd_oracle(const RunConfig& cfg, const Limits& limits, std::ostream& out) {
  if (cfg.generators.size() != 1 || !cfg.weights.empty())
    throw UsageError("oracle takes exactly one unweighted --generator");
  const Partition gamma = parse_class(cfg.generators.front(), cfg.n, "--generator");
  const auto walk = oracle::build_cayley(cfg.n, gamma, oracle_options(cfg, limits));
  if (cfg.dump_adjacency) {
    oracle::dump_adjacency(walk, out);
    return 0;
  }
  const WalkSpectrum spec(ClassFunction::indicator(gamma), table_for(cfg, limits));
  const Partition mu = start_class(cfg);
  Json comparisons = Json::array();
  double worst = 0;
  for (double t : time_grid(cfg)) {
    ClassDistribution spectral;
    oracle::ClassAggregate dense;
    if (cfg.classical) {
      spectral = classical_class_distribution(spec, mu, t);
      dense = oracle::class_aggregate(
          walk, Eigen::VectorXd(oracle::evolve_classical(
                    walk, oracle::class_probability_state(walk, mu), t)));
    } else {
      spectral = class_distribution(spec, mu, t);
      dense = oracle::class_aggregate(
          walk, Eigen::VectorXcd(oracle::evolve_quantum(walk, oracle::class_state(walk, mu), t)));
    }
    Json classes = Json::array();
    double t_worst = 0;
    for (const auto& c : spectral.classes) {
      const double d = dense.mass_of(c.partition);
      const double err = std::abs(d - c.probability);
      t_worst = std::max(t_worst, err);
      Json e;
      e["partition"] = io::to_json(c.partition);
      e["oracle"] = d;
      e["spectral"] = c.probability;
      e["max_abs_error"] = err;
      classes.push_back(std::move(e));
    }
    worst = std::max(worst, t_worst);
    Json entry;
    entry["t"] = t;
    entry["max_abs_error"] = t_worst;
    entry["class_constancy_deviation"] = dense.worst_deviation;
    entry["classes"] = std::move(classes);
    comparisons.push_back(std::move(entry));
  }
  Json j;
  j["n"] = cfg.n;
  j["generator"] = io::to_json(gamma);
  j["start"] = io::to_json(mu);
  j["walk"] = cfg.classical ? "classical" : "quantum";
  j["max_abs_error"] = worst;
  j["comparisons"] = std::move(comparisons);
  out << dump(j);
  return 0;
}

inline void report_error(std::ostream& err, const std::string& message, int code) {
  Json j;
  j["error"] = message;
  j["code"] = code;
  err << j.dump() << '\n';
}

}  // namespace detail

/// Entry point shared by the `symwalk` binary and the tests. `args` excludes
/// the program name. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact spectral engine for quantum walks on Cayley graphs of S_n", "symwalk"};
  app.require_subcommand(1);

  auto add_n = [&cfg](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Degree of the symmetric group")->required()->check(
        CLI::NonNegativeNumber);
  };
  auto add_walk = [&cfg](CLI::App* sub) {
    sub->add_option("--generator", cfg.generators,
                    "Generating class as a comma-separated partition; repeatable");
    sub->add_option("--weight", cfg.weights, "Rational weight p/q for each --generator");
  };
  auto add_format = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(
        CLI::IsMember({"json", "csv"}));
  };
  auto add_output = [&cfg](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "Write the report here instead of stdout");
  };
  auto add_time = [&cfg](CLI::App* sub) {
    sub->add_option("--t", cfg.t, "Time in radians");
    sub->add_option("--t-grid", cfg.t_grid, "Sweep min,max,steps (default 0,2pi,65)");
  };

  auto* characters = app.add_subcommand("characters", "Character table of S_n");
  add_n(characters);
  add_format(characters);
  add_output(characters);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Exact eigenvalue per representation");
  add_n(spectrum_cmd);
  add_walk(spectrum_cmd);
  add_format(spectrum_cmd);
  add_output(spectrum_cmd);

  auto* amplitude = app.add_subcommand("amplitude", "Class-to-class amplitude at time t");
  add_n(amplitude);
  add_walk(amplitude);
  add_time(amplitude);
  amplitude->add_option("--start", cfg.start, "Start class (default identity)");
  amplitude->add_option("--target", cfg.target, "Target class");
  add_format(amplitude);
  add_output(amplitude);

  auto* distribution = app.add_subcommand("distribution", "Class distribution P_t");
  add_n(distribution);
  add_walk(distribution);
  add_time(distribution);
  distribution->add_option("--start", cfg.start, "Start class (default identity)");
  distribution->add_flag("--classical", cfg.classical, "Classical walk exp(-tL)");
  add_format(distribution);
  add_output(distribution);

  auto* limit = app.add_subcommand("limit", "Exact limiting distribution and TV distances");
  add_n(limit);
  add_walk(limit);
  limit->add_option("--start", cfg.start, "Start class (default identity)");
  add_output(limit);

  auto* table = app.add_subcommand("table", "Closed-form n-cycle table for every p");
  add_n(table);
  add_format(table);
  add_output(table);

  auto* verify_cmd = app.add_subcommand("verify", "Oracle and closed-form self-check suite");
  add_n(verify_cmd);
  verify_cmd->add_flag("--allow-n7", cfg.allow_n7, "Permit the 5040-vertex dense oracle");
  add_output(verify_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "Dense Cayley graph dump or evolution");
  add_n(oracle_cmd);
  add_walk(oracle_cmd);
  add_time(oracle_cmd);
  oracle_cmd->add_option("--start", cfg.start, "Start class (default identity)");
  oracle_cmd->add_flag("--dump-adjacency", cfg.dump_adjacency, "Emit the edge list as CSV");
  oracle_cmd->add_flag("--classical", cfg.classical, "Compare the classical walk");
  oracle_cmd->add_flag("--allow-n7", cfg.allow_n7, "Permit the 5040-vertex dense oracle");
  add_output(oracle_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    detail::report_error(err, e.what(), static_cast<int>(ExitCode::usage));
    return static_cast<int>(ExitCode::usage);
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  const Limits limits = Limits::from_environment();

  std::ostringstream buffer;
  int code = 0;
  try {
    if (cfg.subcommand == "characters") code = detail::cmd_characters(cfg, limits, buffer);
    else if (cfg.subcommand == "spectrum") code = detail::cmd_spectrum(cfg, limits, buffer);
    else if (cfg.subcommand == "amplitude") code = detail::cmd_amplitude(cfg, limits, buffer);
    else if (cfg.subcommand == "distribution") code = detail::cmd_distribution(cfg, limits, buffer);
    else if (cfg.subcommand == "limit") code = detail::cmd_limit(cfg, limits, buffer);
    else if (cfg.subcommand == "table") code = detail::cmd_table(cfg, limits, buffer);
    else if (cfg.subcommand == "verify") code = detail::cmd_verify(cfg, limits, buffer);
    else code = detail::cmd_oracle(cfg, limits, buffer);
  } catch (const Error& e) {
    detail::report_error(err, e.what(), static_cast<int>(e.code()));
    return static_cast<int>(e.code());
  }

  if (cfg.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      detail::report_error(err, "cannot open " + cfg.output, static_cast<int>(ExitCode::usage));
      return static_cast<int>(ExitCode::usage);
    }
    file << buffer.str();
  }
  if (code == static_cast<int>(ExitCode::verification_failure))
    detail::report_error(err, "verification failed", code);
  return code;
}

}  // namespace symwalk::cli
