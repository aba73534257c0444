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

#ifndef SATMETRIC_SATISFACTION_MODELS_H_
#define SATMETRIC_SATISFACTION_MODELS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "satmetric/metric_core.h"
#include "satmetric/ranking.h"

namespace satmetric {

// Maps relevance grades to gains in [0, 1].
//
// Either an explicit table (grade 0 is implicitly 0 if absent; gains must be
// non-decreasing in grade) or a binary map that assigns 1 to grades at or
// above a threshold and 0 below it.
class GainMap {
 public:
  // Throws ConfigError if the table violates the invariants above.
  explicit GainMap(std::map<RelevanceGrade, double> table);

  static GainMap binary(int threshold = 1);

  // Parses "grade:gain,grade:gain,...", e.g. "0:0,1:0.5,2:1".
  static GainMap parse(std::string_view text);

  // Throws ConfigError for a grade the table does not cover.
  double gain(RelevanceGrade grade) const;

  // "binary" or the table in parse() syntax.
  std::string to_string() const;

 private:
  GainMap() = default;

  std::map<RelevanceGrade, double> table_;
  std::optional<int> binary_threshold_;
};

// s_k = precision at rank k (binarized at the ranking's threshold).
SatisfactionSchedule precision_satisfaction(const JudgedRanking& ranking);

// s_k = gain of the document at rank k.
SatisfactionSchedule gain_satisfaction(const JudgedRanking& ranking,
                                       const GainMap& gains);

// s_k = 1 once a relevant document has appeared at or before k, else 0.
SatisfactionSchedule navigational_satisfaction(const JudgedRanking& ranking);

}  // namespace satmetric

#endif  // SATMETRIC_SATISFACTION_MODELS_H_
