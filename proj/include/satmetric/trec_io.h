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

#ifndef SATMETRIC_TREC_IO_H_
#define SATMETRIC_TREC_IO_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satmetric/metric_core.h"
#include "satmetric/ranking.h"
#include "satmetric/satisfaction_models.h"
#include "satmetric/stopping_models.h"

namespace satmetric {

// Orders topic ids numerically when both are unsigned integers, otherwise
// lexicographically; numeric ids sort before non-numeric ones.
struct TopicLess {
  bool operator()(std::string_view a, std::string_view b) const;
  using is_transparent = void;
};

// Relevance judgments: topic -> doc -> grade.
struct QrelsSet {
  std::map<std::string, std::map<std::string, RelevanceGrade>, TopicLess>
      judgments;
  // Number of records whose negative grade was clamped to 0.
  std::size_t clamped_negative = 0;

  // Relevant documents in the pool of `topic` at the given threshold.
  std::size_t relevant_count(std::string_view topic, int threshold) const;
  std::optional<RelevanceGrade> grade(std::string_view topic,
                                      std::string_view doc) const;
};

struct RankedDoc {
  std::string doc_id;
  double score = 0.0;

  friend bool operator==(const RankedDoc&, const RankedDoc&) = default;
};

// A system run. Each topic's documents are held in rank order: score
// descending, ties by doc id ascending. The rank column of the input file is
// ignored.
struct RunSet {
  std::map<std::string, std::vector<RankedDoc>, TopicLess> topics;
};

// `topic iter docid grade` per line. Blank lines are skipped.
// Throws ParseError on a malformed line or a repeated (topic, doc) pair.
QrelsSet parse_qrels(std::istream& in);

// `topic iter docid rank score tag` per line.
// Throws ParseError on a malformed line or a doc repeated within a topic.
RunSet parse_run(std::istream& in);

enum class StoppingModel { kAp, kRbp, kWe };
enum class SatisfactionModel { kPrecision, kGain, kNavigational };
enum class UnjudgedPolicy { kNonrelevant, kExclude, kError };

std::string_view to_string(StoppingModel m);
std::string_view to_string(SatisfactionModel m);
std::string_view to_string(UnjudgedPolicy p);
// Inverse of to_string; throw ConfigError on unknown names.
StoppingModel parse_stopping_model(std::string_view name);
SatisfactionModel parse_satisfaction_model(std::string_view name);
UnjudgedPolicy parse_unjudged_policy(std::string_view name);

struct MetricConfig {
  StoppingModel stopping = StoppingModel::kAp;
  double persistence = 0.8;  // rbp
  WEParams we;               // we
  SatisfactionModel satisfaction = SatisfactionModel::kPrecision;
  // Gain table for gain satisfaction; empty means binary at the threshold.
  std::optional<GainMap> gains;
  int binarization_threshold = 1;
  UnjudgedPolicy unjudged = UnjudgedPolicy::kNonrelevant;
  std::optional<std::size_t> max_depth;

  // Throws ConfigError / DomainError for out-of-range settings.
  void validate() const;
  GainMap effective_gains() const;
  // Label used in the report's metric column, e.g. "esat:rbp(0.5):gain".
  std::string metric_name() const;
};

// One JudgedRanking per topic of the run, in TopicLess order.
std::vector<JudgedRanking> join(const QrelsSet& qrels, const RunSet& run,
                                const MetricConfig& config);

struct TopicResult {
  std::string topic_id;
  // Empty when the metric is undefined for the topic (no relevant
  // documents under ap or we stopping).
  std::optional<MetricScore> score;
};

struct EvaluationReport {
  std::string metric;
  std::vector<TopicResult> topics;
  // Mean score and mean residual over topics with a defined score.
  std::optional<MetricScore> aggregate;
  std::optional<MetricConfig> config;
};

// 12 significant digits, shortest form ("0.625", "0.833333333333", "1").
std::string format_score(double value);

// `topic<TAB>metric<TAB>score<TAB>residual` per topic, then the `all` row.
// Undefined entries are written as `undefined`.
void write_report_tsv(const EvaluationReport& report, std::ostream& out);
// Same fields plus the config echo, as one JSON document.
void write_report_json(const EvaluationReport& report, std::ostream& out);
EvaluationReport parse_report_tsv(std::istream& in);

}  // namespace satmetric

#endif  // SATMETRIC_TREC_IO_H_
