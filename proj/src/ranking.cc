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

#include "satmetric/ranking.h"

#include <string>
#include <utility>

#include "satmetric/errors.h"

namespace satmetric {

JudgedRanking::JudgedRanking(std::string topic_id,
                             std::vector<RelevanceGrade> grades,
                             std::size_t total_relevant,
                             int binarization_threshold)
    : topic_id_(std::move(topic_id)),
      grades_(std::move(grades)),
      total_relevant_(total_relevant),
      threshold_(binarization_threshold) {
  if (threshold_ < 1) {
    throw DomainError("binarization threshold must be >= 1, got " +
                      std::to_string(threshold_));
  }
  if (grades_.size() > kMaxRankingDepth) {
    throw DomainError("ranking for topic '" + topic_id_ + "' has " +
                      std::to_string(grades_.size()) +
                      " ranks, more than the supported depth " +
                      std::to_string(kMaxRankingDepth));
  }
  for (std::size_t i = 0; i < grades_.size(); ++i) {
    if (grades_[i] < 0) {
      throw DomainError("negative relevance grade at rank " +
                        std::to_string(i + 1));
    }
    if (grades_[i] >= threshold_) ++relevant_retrieved_;
  }
  if (total_relevant_ < relevant_retrieved_) {
    throw DomainError("topic '" + topic_id_ + "': total_relevant " +
                      std::to_string(total_relevant_) +
                      " is smaller than the " +
                      std::to_string(relevant_retrieved_) +
                      " relevant documents retrieved");
  }
}

JudgedRanking binary_ranking(std::vector<RelevanceGrade> grades,
                             std::size_t total_relevant,
                             std::string topic_id) {
  return JudgedRanking(std::move(topic_id), std::move(grades), total_relevant,
                       1);
}

}  // namespace satmetric
