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

#ifndef SATMETRIC_REFERENCE_ORACLES_H_
#define SATMETRIC_REFERENCE_ORACLES_H_

#include "satmetric/ranking.h"
#include "satmetric/satisfaction_models.h"

namespace satmetric {

// Textbook metric definitions, written without the stopping/satisfaction
// machinery so they can check it.

// (1 / R) * sum of precision@k over ranks k holding a relevant document.
// Relevant documents that were not retrieved contribute 0.
// Throws UndefinedMetricError when R = 0.
double average_precision(const JudgedRanking& ranking);

struct RbpValue {
  double value = 0.0;
  // Weight of the geometric tail past the last rank, persistence^n.
  double residual_uncertainty = 1.0;
};

// (1 - p) * sum_k p^(k-1) g_k. persistence must be in [0, 1).
RbpValue rbp_direct(const JudgedRanking& ranking, double persistence,
                    const GainMap& gains);

}  // namespace satmetric

#endif  // SATMETRIC_REFERENCE_ORACLES_H_
