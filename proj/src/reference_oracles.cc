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

#include "satmetric/reference_oracles.h"

#include <cmath>
#include <string>

#include "satmetric/errors.h"

namespace satmetric {

double average_precision(const JudgedRanking& ranking) {
  if (ranking.total_relevant() == 0) {
    throw UndefinedMetricError("AP is undefined for topic '" +
                               ranking.topic_id() +
                               "': no relevant documents in the pool");
  }
  double sum_precision = 0.0;
  int hits = 0;
  for (std::size_t rank = 1; rank <= ranking.size(); ++rank) {
    if (ranking.grade(rank - 1) >= ranking.binarization_threshold()) {
      ++hits;
      sum_precision += static_cast<double>(hits) / static_cast<double>(rank);
    }
  }
  return sum_precision / static_cast<double>(ranking.total_relevant());
}

RbpValue rbp_direct(const JudgedRanking& ranking, double persistence,
                    const GainMap& gains) {
  if (!(persistence >= 0.0 && persistence < 1.0)) {
    throw DomainError("RBP persistence must be in [0, 1), got " +
                      std::to_string(persistence));
  }
  double sum = 0.0;
  for (std::size_t rank = 1; rank <= ranking.size(); ++rank) {
    sum += std::pow(persistence, static_cast<double>(rank - 1)) *
           gains.gain(ranking.grade(rank - 1));
  }
  return {(1.0 - persistence) * sum,
          std::pow(persistence, static_cast<double>(ranking.size()))};
}

}  // namespace satmetric
