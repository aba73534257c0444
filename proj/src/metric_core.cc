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

#include "satmetric/metric_core.h"

#include <cmath>
#include <string>
#include <utility>

#include "satmetric/errors.h"
#include "satmetric/ranking.h"

namespace satmetric {
namespace {

void check_unit_interval(std::span<const double> values, const char* what) {
  if (values.size() > kMaxRankingDepth) {
    throw DomainError(std::string(what) + " schedule longer than " +
                      std::to_string(kMaxRankingDepth));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    // Written so that NaN fails too.
    if (!(values[i] >= 0.0 && values[i] <= 1.0)) {
      throw DomainError(std::string(what) + " at rank " +
                        std::to_string(i + 1) + " is " +
                        std::to_string(values[i]) + ", outside [0, 1]");
    }
  }
}

void check_aligned(const HazardSchedule& hazards,
                   const SatisfactionSchedule& sats) {
  if (hazards.size() != sats.size()) {
    throw StructuralError("hazard schedule has " +
                          std::to_string(hazards.size()) +
                          " ranks but satisfaction schedule has " +
                          std::to_string(sats.size()));
  }
}

}  // namespace

HazardSchedule::HazardSchedule(std::vector<double> hazards)
    : hazards_(std::move(hazards)) {
  check_unit_interval(hazards_, "hazard");
}

SatisfactionSchedule::SatisfactionSchedule(std::vector<double> values)
    : values_(std::move(values)) {
  check_unit_interval(values_, "satisfaction");
}

StopWeights stop_weights(const HazardSchedule& hazards) {
  StopWeights out;
  out.weights.resize(hazards.size());
  double reach = 1.0;  // P(F >= k)
  for (std::size_t k = 0; k < hazards.size(); ++k) {
    out.weights[k] = reach * hazards[k];
    reach *= 1.0 - hazards[k];
  }
  out.residual = reach;
  return out;
}

MetricScore expected_satisfaction(const HazardSchedule& hazards,
                                  const SatisfactionSchedule& sats) {
  check_aligned(hazards, sats);
  const StopWeights w = stop_weights(hazards);
  double total = 0.0;
  for (std::size_t k = 0; k < w.weights.size(); ++k) {
    total += w.weights[k] * sats[k];
  }
  return {total, w.residual};
}

double expected_satisfaction_by_recursion(const HazardSchedule& hazards,
                                          const SatisfactionSchedule& sats) {
  check_aligned(hazards, sats);
  double beyond = 0.0;
  for (std::size_t k = hazards.size(); k-- > 0;) {
    beyond = hazards[k] * sats[k] + (1.0 - hazards[k]) * beyond;
  }
  return beyond;
}

}  // namespace satmetric
