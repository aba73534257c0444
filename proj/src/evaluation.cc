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

#include "satmetric/evaluation.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "satmetric/errors.h"
#include "satmetric/satisfaction_models.h"
#include "satmetric/stopping_models.h"

namespace satmetric {

HazardSchedule hazards_for(const JudgedRanking& ranking,
                           const MetricConfig& config) {
  switch (config.stopping) {
    case StoppingModel::kAp:
      return ap_hazards(ranking);
    case StoppingModel::kRbp:
      return rbp_hazards(ranking.size(), config.persistence);
    case StoppingModel::kWe:
      return we_hazards(ranking, config.we);
  }
  throw ConfigError("unknown stopping model");
}

SatisfactionSchedule satisfaction_for(const JudgedRanking& ranking,
                                      const MetricConfig& config) {
  switch (config.satisfaction) {
    case SatisfactionModel::kPrecision:
      return precision_satisfaction(ranking);
    case SatisfactionModel::kGain:
      return gain_satisfaction(ranking, config.effective_gains());
    case SatisfactionModel::kNavigational:
      return navigational_satisfaction(ranking);
  }
  throw ConfigError("unknown satisfaction model");
}

std::optional<MetricScore> score_ranking(const JudgedRanking& ranking,
                                         const MetricConfig& config) {
  try {
    return expected_satisfaction(hazards_for(ranking, config),
                                 satisfaction_for(ranking, config));
  } catch (const UndefinedMetricError&) {
    return std::nullopt;
  }
}

std::vector<JudgedRanking> evaluation_rankings(const QrelsSet& qrels,
                                               const RunSet& run,
                                               const MetricConfig& config) {
  std::vector<JudgedRanking> rankings = join(qrels, run, config);
  for (const auto& [topic, docs] : qrels.judgments) {
    if (run.topics.contains(topic)) continue;
    rankings.emplace_back(
        topic, std::vector<RelevanceGrade>{},
        qrels.relevant_count(topic, config.binarization_threshold),
        config.binarization_threshold);
  }
  std::sort(rankings.begin(), rankings.end(),
            [](const JudgedRanking& a, const JudgedRanking& b) {
              return TopicLess{}(a.topic_id(), b.topic_id());
            });
  return rankings;
}

EvaluationReport evaluate(const QrelsSet& qrels, const RunSet& run,
                          const MetricConfig& config, unsigned threads) {
  config.validate();
  const std::vector<JudgedRanking> rankings =
      evaluation_rankings(qrels, run, config);

  EvaluationReport report;
  report.metric = config.metric_name();
  report.config = config;
  report.topics.resize(rankings.size());

  // Each worker writes only its own slots, so row order is fixed by topic.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic_flag failed = ATOMIC_FLAG_INIT;
  const auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < rankings.size();) {
      try {
        report.topics[i] = {rankings[i].topic_id(),
                            score_ranking(rankings[i], config)};
      } catch (...) {
        if (!failed.test_and_set()) failure = std::current_exception();
      }
    }
  };
  unsigned workers =
      threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(1, rankings.size())));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  double sum = 0.0;
  double residual = 0.0;
  std::size_t defined = 0;
  for (const TopicResult& t : report.topics) {
    if (!t.score) continue;
    sum += t.score->expected_satisfaction;
    residual += t.score->residual;
    ++defined;
  }
  if (defined > 0) {
    report.aggregate = MetricScore{sum / static_cast<double>(defined),
                                   residual / static_cast<double>(defined)};
  }
  return report;
}

}  // namespace satmetric
