/*
 * Copyright 2026 The satmetric Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "satmetric/cli.h"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "satmetric/errors.h"
#include "satmetric/evaluation.h"
#include "satmetric/reference_oracles.h"
#include "satmetric/simulator.h"
#include "satmetric/trec_io.h"

namespace satmetric::cli {
namespace {

// Thrown for bad command-line or config usage; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string qrels;
  std::string run;
  std::string config;
  std::string stopping = "ap";
  std::string satisfaction = "precision";
  double persistence = 0.8;
  double base_hazard = 0.5;
  double alpha = 0.5;
  double gamma = 1.0;
  double delta = 1.0;
  double prior = 1.0;
  std::string gains;
  int threshold = 1;
  std::string unjudged = "nonrelevant";
  std::size_t depth = 0;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 42;
  bool json = false;
};

using OptionTable = std::map<std::string, CLI::Option*>;

OptionTable add_common_options(CLI::App& cmd, Flags& f) {
  OptionTable o;
  o["qrels"] = cmd.add_option("--qrels", f.qrels, "qrels file")->required();
  o["run"] = cmd.add_option("--run", f.run, "run file")->required();
  o["config"] = cmd.add_option("--config", f.config,
                               "JSON config file; flags override it");
  o["stopping"] = cmd.add_option("--stopping", f.stopping, "ap|rbp|we");
  o["satisfaction"] = cmd.add_option("--satisfaction", f.satisfaction,
                                     "precision|gain|navigational");
  o["persistence"] =
      cmd.add_option("--persistence", f.persistence, "RBP persistence");
  o["base-hazard"] =
      cmd.add_option("--base-hazard", f.base_hazard, "WE base hazard");
  o["alpha"] = cmd.add_option("--alpha", f.alpha, "WE expectation smoothing");
  o["gamma"] = cmd.add_option("--gamma", f.gamma, "WE willingness exponent");
  o["delta"] = cmd.add_option("--delta", f.delta, "WE expectation exponent");
  o["prior"] = cmd.add_option("--prior", f.prior, "WE expectation prior");
  o["gains"] = cmd.add_option("--gains", f.gains, "grade:gain,...");
  o["threshold"] =
      cmd.add_option("--threshold", f.threshold, "binarization threshold");
  o["unjudged"] = cmd.add_option("--unjudged", f.unjudged,
                                 "nonrelevant|exclude|error");
  o["depth"] = cmd.add_option("--depth", f.depth, "rank cutoff");
  return o;
}

template <typename T>
T json_value(const nlohmann::json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw UsageError("config file: bad value for '" + key + "'");
  }
}

// Fills in values from the config file for every option not given on the
// command line.
void apply_config_file(Flags& f, const OptionTable& given) {
  if (f.config.empty()) return;
  std::ifstream in(f.config);
  if (!in) throw UsageError("cannot read config file " + f.config);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file " + f.config + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    const auto opt = given.find(key);
    if (opt == given.end() || key == "qrels" || key == "run" ||
        key == "config") {
      throw UsageError("config file: unknown key '" + key + "'");
    }
    if (opt->second->count() > 0) continue;
    if (key == "stopping") f.stopping = json_value<std::string>(j, key);
    else if (key == "satisfaction") f.satisfaction = json_value<std::string>(j, key);
    else if (key == "persistence") f.persistence = json_value<double>(j, key);
    else if (key == "base-hazard") f.base_hazard = json_value<double>(j, key);
    else if (key == "alpha") f.alpha = json_value<double>(j, key);
    else if (key == "gamma") f.gamma = json_value<double>(j, key);
    else if (key == "delta") f.delta = json_value<double>(j, key);
    else if (key == "prior") f.prior = json_value<double>(j, key);
    else if (key == "gains") f.gains = json_value<std::string>(j, key);
    else if (key == "threshold") f.threshold = json_value<int>(j, key);
    else if (key == "unjudged") f.unjudged = json_value<std::string>(j, key);
    else if (key == "depth") f.depth = json_value<std::size_t>(j, key);
  }
}

MetricConfig build_config(const Flags& f) {
  MetricConfig c;
  try {
    c.stopping = parse_stopping_model(f.stopping);
    c.satisfaction = parse_satisfaction_model(f.satisfaction);
    c.unjudged = parse_unjudged_policy(f.unjudged);
    c.persistence = f.persistence;
    c.we.base_hazard = f.base_hazard;
    c.we.expectation_smoothing = f.alpha;
    c.we.willingness_exponent = f.gamma;
    c.we.expectation_exponent = f.delta;
    c.we.expectation_prior = f.prior;
    c.binarization_threshold = f.threshold;
    if (!f.gains.empty()) c.gains = GainMap::parse(f.gains);
    if (f.depth > 0) c.max_depth = f.depth;
    c.validate();
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  return c;
}

QrelsSet load_qrels(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open qrels file " + path);
  QrelsSet qrels = parse_qrels(in);
  if (qrels.clamped_negative > 0) {
    err << "warning: " << qrels.clamped_negative
        << " negative grade(s) in " << path << " clamped to 0\n";
  }
  return qrels;
}

RunSet load_run(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open run file " + path);
  return parse_run(in);
}

int cmd_evaluate(const Flags& f, const MetricConfig& config, std::ostream& out,
                 std::ostream& err) {
  const EvaluationReport report =
      evaluate(load_qrels(f.qrels, err), load_run(f.run), config);
  if (f.json) {
    write_report_json(report, out);
  } else {
    write_report_tsv(report, out);
  }
  if (!report.aggregate) {
    err << "error: metric undefined for every topic\n";
    return kExitDataFailure;
  }
  return kExitOk;
}

int cmd_compare(const Flags& f, MetricConfig config, const OptionTable& given,
                std::ostream& out, std::ostream& err) {
  SatisfactionModel implied;
  switch (config.stopping) {
    case StoppingModel::kAp:
      implied = SatisfactionModel::kPrecision;
      break;
    case StoppingModel::kRbp:
      implied = SatisfactionModel::kGain;
      break;
    default:
      throw UsageError("compare needs --stopping ap or rbp; the " +
                       std::string(to_string(config.stopping)) +
                       " model has no reference metric");
  }
  if (given.at("satisfaction")->count() > 0 && config.satisfaction != implied) {
    throw UsageError("the " + std::string(to_string(config.stopping)) +
                     " instantiation uses " + std::string(to_string(implied)) +
                     " satisfaction");
  }
  config.satisfaction = implied;

  const QrelsSet qrels = load_qrels(f.qrels, err);
  const RunSet run = load_run(f.run);
  constexpr double kTolerance = 1e-9;
  bool ok = true;
  for (const JudgedRanking& r : evaluation_rankings(qrels, run, config)) {
    const std::optional<MetricScore> framework = score_ranking(r, config);
    out << r.topic_id() << '\t';
    if (!framework) {
      out << "undefined\tundefined\tundefined\n";
      continue;
    }
    const double oracle =
        config.stopping == StoppingModel::kAp
            ? average_precision(r)
            : rbp_direct(r, config.persistence, config.effective_gains()).value;
    const double delta = std::abs(framework->expected_satisfaction - oracle);
    if (!(delta <= kTolerance)) ok = false;
    out << format_score(framework->expected_satisfaction) << '\t'
        << format_score(oracle) << '\t' << format_score(delta) << '\n';
  }
  if (!ok) {
    err << "error: framework and reference differ by more than "
        << kTolerance << '\n';
    return kExitDataFailure;
  }
  return kExitOk;
}

std::uint64_t topic_seed(std::uint64_t seed, const std::string& topic) {
  std::uint64_t h = 14695981039346656037ull;  // FNV-1a
  for (unsigned char c : topic) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return seed ^ h;
}

int cmd_simulate(const Flags& f, const MetricConfig& config, std::ostream& out,
                 std::ostream& err) {
  if (f.trials < 1) throw UsageError("--trials must be >= 1");
  const QrelsSet qrels = load_qrels(f.qrels, err);
  const RunSet run = load_run(f.run);
  bool any_defined = false;
  for (const JudgedRanking& r : evaluation_rankings(qrels, run, config)) {
    std::optional<HazardSchedule> hazards;
    try {
      hazards = hazards_for(r, config);
    } catch (const UndefinedMetricError&) {
    }
    if (!hazards) {
      out << r.topic_id() << "\tsim\tundefined\tundefined\tundefined\tn/a\n";
      continue;
    }
    any_defined = true;
    const SatisfactionSchedule sats = satisfaction_for(r, config);
    const MetricScore closed = expected_satisfaction(*hazards, sats);
    const SimResult sim =
        simulate(*hazards, sats, f.trials, topic_seed(f.seed, r.topic_id()));

    out << r.topic_id() << "\tsim\t" << format_score(sim.mean_satisfaction)
        << '\t';
    if (sim.std_error) {
      // The absolute slack only matters for zero-variance schedules.
      const bool agree =
          std::abs(sim.mean_satisfaction - closed.expected_satisfaction) <=
          4.0 * *sim.std_error + 1e-12;
      out << format_score(*sim.std_error) << '\t'
          << format_score(closed.expected_satisfaction) << '\t'
          << (agree ? "yes" : "no") << '\n';
    } else {
      out << "n/a\t" << format_score(closed.expected_satisfaction)
          << "\tn/a\n";
    }
    const StopWeights w = stop_weights(*hazards);
    for (std::size_t k = 0; k < sim.stop_counts.size(); ++k) {
      out << r.topic_id() << "\tstop\t" << (k + 1) << '\t'
          << sim.stop_counts[k] << '\t' << format_score(w.weights[k]) << '\n';
    }
    out << r.topic_id() << "\tstop\tnever\t" << sim.never_stopped << '\t'
        << format_score(w.residual) << '\n';
  }
  if (!any_defined) {
    err << "error: metric undefined for every topic\n";
    return kExitDataFailure;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Expected-satisfaction retrieval metrics", "satmetric"};
  app.require_subcommand(1);
  Flags flags;

  CLI::App* evaluate_cmd =
      app.add_subcommand("evaluate", "score a run against qrels");
  const OptionTable evaluate_opts = add_common_options(*evaluate_cmd, flags);
  evaluate_cmd->add_flag("--json", flags.json,
                         "structured output with the config echo");

  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "check the ap/rbp instantiations against direct AP/RBP");
  const OptionTable compare_opts = add_common_options(*compare_cmd, flags);

  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "Monte Carlo browsing simulation per topic");
  const OptionTable simulate_opts = add_common_options(*simulate_cmd, flags);
  simulate_cmd->add_option("--trials", flags.trials, "trials per topic");
  simulate_cmd->add_option("--seed", flags.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const OptionTable& given = evaluate_cmd->parsed()  ? evaluate_opts
                               : compare_cmd->parsed() ? compare_opts
                                                       : simulate_opts;
    apply_config_file(flags, given);
    const MetricConfig config = build_config(flags);
    if (evaluate_cmd->parsed()) return cmd_evaluate(flags, config, out, err);
    if (compare_cmd->parsed()) {
      return cmd_compare(flags, config, given, out, err);
    }
    return cmd_simulate(flags, config, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataFailure;
  }
}

}  // namespace satmetric::cli
