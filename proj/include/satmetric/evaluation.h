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

#ifndef SATMETRIC_EVALUATION_H_
#define SATMETRIC_EVALUATION_H_

#include <optional>
#include <vector>

#include "satmetric/metric_core.h"
#include "satmetric/ranking.h"
#include "satmetric/trec_io.h"

namespace satmetric {

HazardSchedule hazards_for(const JudgedRanking& ranking,
                           const MetricConfig& config);
SatisfactionSchedule satisfaction_for(const JudgedRanking& ranking,
                                      const MetricConfig& config);

// Empty when the configured stopping model is undefined for the ranking.
std::optional<MetricScore> score_ranking(const JudgedRanking& ranking,
                                         const MetricConfig& config);

// join() plus an empty ranking for every qrels topic the run left out, so a
// system that returned nothing still scores 0 with residual 1. TopicLess
// order.
std::vector<JudgedRanking> evaluation_rankings(const QrelsSet& qrels,
                                               const RunSet& run,
                                               const MetricConfig& config);

// Scores every topic (in parallel when threads != 1; 0 = hardware
// concurrency). Rows come back in topic order either way.
EvaluationReport evaluate(const QrelsSet& qrels, const RunSet& run,
                          const MetricConfig& config, unsigned threads = 0);

}  // namespace satmetric

#endif  // SATMETRIC_EVALUATION_H_
