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

#ifndef SATMETRIC_METRIC_CORE_H_
#define SATMETRIC_METRIC_CORE_H_

#include <cstddef>
#include <span>
#include <vector>

namespace satmetric {

// Conditional stopping probabilities p_k = P(stop at k | reached k).
//
// Construction validates every entry; an out-of-range hazard throws
// DomainError naming its 1-based rank.
class HazardSchedule {
 public:
  HazardSchedule() = default;
  explicit HazardSchedule(std::vector<double> hazards);

  std::span<const double> values() const { return hazards_; }
  double operator[](std::size_t index) const { return hazards_[index]; }
  std::size_t size() const { return hazards_.size(); }

  friend bool operator==(const HazardSchedule&,
                         const HazardSchedule&) = default;

 private:
  std::vector<double> hazards_;
};

// Expected satisfaction when stopping at each rank, s_k = E[S | F = k].
class SatisfactionSchedule {
 public:
  SatisfactionSchedule() = default;
  explicit SatisfactionSchedule(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  double operator[](std::size_t index) const { return values_[index]; }
  std::size_t size() const { return values_.size(); }

  friend bool operator==(const SatisfactionSchedule&,
                         const SatisfactionSchedule&) = default;

 private:
  std::vector<double> values_;
};

// Unconditional stopping distribution over the ranking.
struct StopWeights {
  // weights[k-1] = P(F = k) = (prod_{u<k} (1 - p_u)) * p_k
  std::vector<double> weights;
  // P(user walks past the last rank without stopping).
  double residual = 1.0;
};

struct MetricScore {
  double expected_satisfaction = 0.0;
  double residual = 1.0;
};

StopWeights stop_weights(const HazardSchedule& hazards);

// Closed-form expected satisfaction truncated at the ranking length. The
// never-stop mass contributes zero satisfaction and is returned as
// MetricScore::residual. Throws StructuralError on a length mismatch.
MetricScore expected_satisfaction(const HazardSchedule& hazards,
                                  const SatisfactionSchedule& sats);

// Same quantity by the backward recursion
//   E[S | F >= k] = p_k s_k + (1 - p_k) E[S | F >= k+1],  E[S | F >= n+1] = 0.
double expected_satisfaction_by_recursion(const HazardSchedule& hazards,
                                          const SatisfactionSchedule& sats);

}  // namespace satmetric

#endif  // SATMETRIC_METRIC_CORE_H_
