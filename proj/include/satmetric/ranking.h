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

#ifndef SATMETRIC_RANKING_H_
#define SATMETRIC_RANKING_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace satmetric {

// Longest ranking the library accepts. Prefix products are evaluated
// directly in double precision, which stays accurate up to this depth.
inline constexpr std::size_t kMaxRankingDepth = 100000;

// Relevance grade of a judged document; 0 means not relevant.
using RelevanceGrade = int;

// One topic's ranked list reduced to relevance grades, plus the number of
// relevant documents in the whole judgment pool (retrieved or not).
//
// Ranks are 1-based in the documentation and 0-based in the accessors:
// grade(0) is the document at rank 1.
class JudgedRanking {
 public:
  JudgedRanking() = default;

  // Throws DomainError if a grade is negative, the threshold is < 1, the
  // ranking exceeds kMaxRankingDepth, or total_relevant is smaller than the
  // number of relevant documents in the ranking.
  JudgedRanking(std::string topic_id, std::vector<RelevanceGrade> grades,
                std::size_t total_relevant, int binarization_threshold = 1);

  const std::string& topic_id() const { return topic_id_; }
  std::span<const RelevanceGrade> grades() const { return grades_; }
  RelevanceGrade grade(std::size_t index) const { return grades_[index]; }
  std::size_t size() const { return grades_.size(); }
  bool empty() const { return grades_.empty(); }
  std::size_t total_relevant() const { return total_relevant_; }
  int binarization_threshold() const { return threshold_; }

  bool is_relevant(std::size_t index) const {
    return grades_[index] >= threshold_;
  }
  std::size_t relevant_retrieved() const { return relevant_retrieved_; }

 private:
  std::string topic_id_;
  std::vector<RelevanceGrade> grades_;
  std::size_t total_relevant_ = 0;
  int threshold_ = 1;
  std::size_t relevant_retrieved_ = 0;
};

// Convenience for binary rankings: 1 = relevant, 0 = not.
JudgedRanking binary_ranking(std::vector<RelevanceGrade> grades,
                             std::size_t total_relevant,
                             std::string topic_id = "q");

}  // namespace satmetric

#endif  // SATMETRIC_RANKING_H_
