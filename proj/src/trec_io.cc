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

#include "satmetric/trec_io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"
#include "satmetric/errors.h"

namespace satmetric {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    const std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

template <typename T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

double parse_report_value(std::string_view text, std::size_t line) {
  const auto v = parse_number<double>(text);
  if (!v) {
    throw ParseError("bad number '" + std::string(text) + "'", line);
  }
  return *v;
}

}  // namespace

bool TopicLess::operator()(std::string_view a, std::string_view b) const {
  const bool na = all_digits(a);
  const bool nb = all_digits(b);
  if (na && nb) {
    const auto strip = [](std::string_view s) {
      const std::size_t first = s.find_first_not_of('0');
      return first == std::string_view::npos ? std::string_view{}
                                             : s.substr(first);
    };
    const std::string_view sa = strip(a);
    const std::string_view sb = strip(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
    return a < b;  // "01" vs "1"
  }
  if (na != nb) return na;
  return a < b;
}

std::size_t QrelsSet::relevant_count(std::string_view topic,
                                     int threshold) const {
  const auto it = judgments.find(topic);
  if (it == judgments.end()) return 0;
  return static_cast<std::size_t>(
      std::count_if(it->second.begin(), it->second.end(),
                    [threshold](const auto& e) { return e.second >= threshold; }));
}

std::optional<RelevanceGrade> QrelsSet::grade(std::string_view topic,
                                              std::string_view doc) const {
  const auto t = judgments.find(topic);
  if (t == judgments.end()) return std::nullopt;
  const auto d = t->second.find(std::string(doc));
  if (d == t->second.end()) return std::nullopt;
  return d->second;
}

QrelsSet parse_qrels(std::istream& in) {
  QrelsSet qrels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto f = split_fields(line);
    if (f.empty()) continue;
    if (f.size() != 4) {
      throw ParseError("qrels record needs 4 fields (topic iter doc grade), "
                       "got " + std::to_string(f.size()),
                       line_no);
    }
    auto grade = parse_number<long long>(f[3]);
    if (!grade) {
      throw ParseError("bad relevance grade '" + std::string(f[3]) + "'",
                       line_no);
    }
    if (*grade < 0) {
      grade = 0;
      ++qrels.clamped_negative;
    }
    if (*grade > 1'000'000) {
      throw ParseError("relevance grade too large", line_no);
    }
    auto& docs = qrels.judgments[std::string(f[0])];
    if (!docs.emplace(std::string(f[2]), static_cast<RelevanceGrade>(*grade))
             .second) {
      throw ParseError("duplicate judgment for topic " + std::string(f[0]) +
                       " doc " + std::string(f[2]),
                       line_no);
    }
  }
  return qrels;
}

RunSet parse_run(std::istream& in) {
  RunSet run;
  std::map<std::string, std::set<std::string, std::less<>>, TopicLess> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto f = split_fields(line);
    if (f.empty()) continue;
    if (f.size() != 6) {
      throw ParseError("run record needs 6 fields "
                       "(topic iter doc rank score tag), got " +
                       std::to_string(f.size()),
                       line_no);
    }
    const auto score = parse_number<double>(f[4]);
    if (!score || !std::isfinite(*score)) {
      throw ParseError("bad score '" + std::string(f[4]) + "'", line_no);
    }
    const std::string topic(f[0]);
    if (!seen[topic].emplace(f[2]).second) {
      throw ParseError("doc " + std::string(f[2]) +
                       " appears twice in topic " + topic,
                       line_no);
    }
    run.topics[topic].push_back({std::string(f[2]), *score});
  }
  for (auto& [topic, docs] : run.topics) {
    std::sort(docs.begin(), docs.end(),
              [](const RankedDoc& a, const RankedDoc& b) {
                if (a.score != b.score) return a.score > b.score;
                return a.doc_id < b.doc_id;
              });
  }
  return run;
}

std::string_view to_string(StoppingModel m) {
  switch (m) {
    case StoppingModel::kAp: return "ap";
    case StoppingModel::kRbp: return "rbp";
    case StoppingModel::kWe: return "we";
  }
  return "?";
}

std::string_view to_string(SatisfactionModel m) {
  switch (m) {
    case SatisfactionModel::kPrecision: return "precision";
    case SatisfactionModel::kGain: return "gain";
    case SatisfactionModel::kNavigational: return "navigational";
  }
  return "?";
}

std::string_view to_string(UnjudgedPolicy p) {
  switch (p) {
    case UnjudgedPolicy::kNonrelevant: return "nonrelevant";
    case UnjudgedPolicy::kExclude: return "exclude";
    case UnjudgedPolicy::kError: return "error";
  }
  return "?";
}

StoppingModel parse_stopping_model(std::string_view name) {
  for (auto m : {StoppingModel::kAp, StoppingModel::kRbp, StoppingModel::kWe})
    if (to_string(m) == name) return m;
  throw ConfigError("unknown stopping model '" + std::string(name) + "'");
}

SatisfactionModel parse_satisfaction_model(std::string_view name) {
  for (auto m : {SatisfactionModel::kPrecision, SatisfactionModel::kGain,
                 SatisfactionModel::kNavigational})
    if (to_string(m) == name) return m;
  throw ConfigError("unknown satisfaction model '" + std::string(name) + "'");
}

UnjudgedPolicy parse_unjudged_policy(std::string_view name) {
  for (auto p : {UnjudgedPolicy::kNonrelevant, UnjudgedPolicy::kExclude,
                 UnjudgedPolicy::kError})
    if (to_string(p) == name) return p;
  throw ConfigError("unknown unjudged policy '" + std::string(name) + "'");
}

void MetricConfig::validate() const {
  if (binarization_threshold < 1) {
    throw ConfigError("threshold must be >= 1");
  }
  if (max_depth && *max_depth == 0) {
    throw ConfigError("depth must be >= 1");
  }
  switch (stopping) {
    case StoppingModel::kRbp:
      if (!(persistence >= 0.0 && persistence < 1.0)) {
        throw ConfigError("persistence must be in [0, 1)");
      }
      break;
    case StoppingModel::kWe:
      try {
        we.validate();
      } catch (const DomainError& e) {
        throw ConfigError(e.what());
      }
      break;
    case StoppingModel::kAp:
      break;
  }
}

GainMap MetricConfig::effective_gains() const {
  return gains ? *gains : GainMap::binary(binarization_threshold);
}

std::string MetricConfig::metric_name() const {
  std::string name = "esat:";
  name += to_string(stopping);
  if (stopping == StoppingModel::kRbp) {
    name += "(" + format_score(persistence) + ")";
  }
  name += ":";
  name += to_string(satisfaction);
  return name;
}

std::vector<JudgedRanking> join(const QrelsSet& qrels, const RunSet& run,
                                const MetricConfig& config) {
  std::vector<JudgedRanking> out;
  out.reserve(run.topics.size());
  const auto pool = [&](std::string_view topic) -> const auto* {
    const auto it = qrels.judgments.find(topic);
    return it == qrels.judgments.end() ? nullptr : &it->second;
  };
  for (const auto& [topic, docs] : run.topics) {
    const auto* judged = pool(topic);
    std::vector<RelevanceGrade> grades;
    grades.reserve(docs.size());
    for (const RankedDoc& doc : docs) {
      if (config.max_depth && grades.size() >= *config.max_depth) break;
      std::optional<RelevanceGrade> grade;
      if (judged) {
        const auto it = judged->find(doc.doc_id);
        if (it != judged->end()) grade = it->second;
      }
      if (!grade) {
        switch (config.unjudged) {
          case UnjudgedPolicy::kNonrelevant:
            grade = 0;
            break;
          case UnjudgedPolicy::kExclude:
            continue;
          case UnjudgedPolicy::kError:
            throw UnjudgedDocumentError("unjudged document " + doc.doc_id +
                                        " in topic " + topic);
        }
      }
      grades.push_back(*grade);
    }
    out.emplace_back(topic, std::move(grades),
                     qrels.relevant_count(topic, config.binarization_threshold),
                     config.binarization_threshold);
  }
  return out;
}

std::string format_score(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

void write_report_tsv(const EvaluationReport& report, std::ostream& out) {
  const auto row = [&](const std::string& topic,
                       const std::optional<MetricScore>& score) {
    out << topic << '\t' << report.metric << '\t';
    if (score) {
      out << format_score(score->expected_satisfaction) << '\t'
          << format_score(score->residual) << '\n';
    } else {
      out << "undefined\tundefined\n";
    }
  };
  for (const TopicResult& t : report.topics) row(t.topic_id, t.score);
  row("all", report.aggregate);
}

namespace {

nlohmann::json config_to_json(const MetricConfig& c) {
  nlohmann::json j;
  j["stopping"] = std::string(to_string(c.stopping));
  j["satisfaction"] = std::string(to_string(c.satisfaction));
  j["threshold"] = c.binarization_threshold;
  j["unjudged"] = std::string(to_string(c.unjudged));
  j["depth"] = c.max_depth ? nlohmann::json(*c.max_depth) : nlohmann::json();
  if (c.stopping == StoppingModel::kRbp) j["persistence"] = c.persistence;
  if (c.stopping == StoppingModel::kWe) {
    j["base-hazard"] = c.we.base_hazard;
    j["alpha"] = c.we.expectation_smoothing;
    j["prior"] = c.we.expectation_prior;
    j["gamma"] = c.we.willingness_exponent;
    j["delta"] = c.we.expectation_exponent;
  }
  if (c.satisfaction == SatisfactionModel::kGain) {
    j["gains"] = c.effective_gains().to_string();
  }
  return j;
}

nlohmann::json score_json(const std::optional<MetricScore>& s) {
  if (!s) return {{"score", nullptr}, {"residual", nullptr}, {"defined", false}};
  return {{"score", s->expected_satisfaction},
          {"residual", s->residual},
          {"defined", true}};
}

}  // namespace

void write_report_json(const EvaluationReport& report, std::ostream& out) {
  nlohmann::json j;
  j["metric"] = report.metric;
  j["topics"] = nlohmann::json::array();
  for (const TopicResult& t : report.topics) {
    nlohmann::json row = score_json(t.score);
    row["topic"] = t.topic_id;
    j["topics"].push_back(std::move(row));
  }
  j["all"] = score_json(report.aggregate);
  if (report.config) j["config"] = config_to_json(*report.config);
  out << j.dump(2) << '\n';
}

EvaluationReport parse_report_tsv(std::istream& in) {
  EvaluationReport report;
  std::string line;
  std::size_t line_no = 0;
  bool saw_all = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) f.push_back(field);
    if (f.size() != 4) {
      throw ParseError("report row needs 4 tab-separated fields", line_no);
    }
    if (saw_all) throw ParseError("row after the 'all' row", line_no);
    if (report.metric.empty()) {
      report.metric = f[1];
    } else if (report.metric != f[1]) {
      throw ParseError("mixed metrics in one report", line_no);
    }
    std::optional<MetricScore> score;
    if (f[2] != "undefined" || f[3] != "undefined") {
      score = MetricScore{parse_report_value(f[2], line_no),
                          parse_report_value(f[3], line_no)};
    }
    if (f[0] == "all") {
      report.aggregate = score;
      saw_all = true;
    } else {
      report.topics.push_back({f[0], score});
    }
  }
  if (!saw_all) throw ParseError("missing 'all' row", line_no);
  return report;
}

}  // namespace satmetric
