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

#ifndef SATMETRIC_STOPPING_MODELS_H_
#define SATMETRIC_STOPPING_MODELS_H_

#include <cstddef>

#include "satmetric/metric_core.h"
#include "satmetric/ranking.h"

namespace satmetric {

// Parameters of the willingness/expectation stopping model.
//
// At rank k the user has seen ranks 1..k-1. Two factors drive the hazard:
//   W_k  fraction of the pool's relevant documents not yet seen,
//   E_k  exponentially smoothed precision of the seen prefix,
// and the hazard is
//   p_k = min(1, base_hazard * ((1 - E_k)^delta + (1 - W_k)^gamma) / 2).
// With 0^0 = 1, gamma = delta = 0 collapses to the constant base_hazard.
struct WEParams {
  double base_hazard = 0.5;            // (0, 1]
  double expectation_smoothing = 0.5;  // alpha, (0, 1]
  double expectation_prior = 1.0;      // E_1, [0, 1]
  double willingness_exponent = 1.0;   // gamma >= 0
  double expectation_exponent = 1.0;   // delta >= 0

  // Throws DomainError naming the first field out of range.
  void validate() const;
};

// AP read as a stopping model: never stop on a non-relevant document; on a
// relevant one stop with probability 1 / (relevant documents at or after k),
// counting relevant documents the run did not retrieve as lying past the end.
//
// Throws UndefinedMetricError when total_relevant is 0.
HazardSchedule ap_hazards(const JudgedRanking& ranking);

// Constant hazard 1 - persistence at every rank. persistence must be in
// [0, 1); 1 would mean the user never stops and is rejected.
HazardSchedule rbp_hazards(std::size_t n, double persistence);

// Hazard of the WE model for given factor values. Exposed for tests of the
// model's shape; we_hazards() evaluates it along a ranking.
double we_hazard(double willingness, double expectation,
                 const WEParams& params);

HazardSchedule we_hazards(const JudgedRanking& ranking,
                          const WEParams& params);

}  // namespace satmetric

#endif  // SATMETRIC_STOPPING_MODELS_H_
