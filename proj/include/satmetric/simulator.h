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

#ifndef SATMETRIC_SIMULATOR_H_
#define SATMETRIC_SIMULATOR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "satmetric/metric_core.h"

namespace satmetric {

struct SimResult {
  std::uint64_t trials = 0;
  double mean_satisfaction = 0.0;
  // Standard error of the mean; empty when trials < 2.
  std::optional<double> std_error;
  // stop_counts[k-1] = number of trials that stopped at rank k.
  std::vector<std::uint64_t> stop_counts;
  std::uint64_t never_stopped = 0;

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

struct SimOptions {
  // Worker threads; 0 picks std::thread::hardware_concurrency(). The result
  // does not depend on this value.
  unsigned threads = 0;
};

// Walks the ranking once per trial, stopping at rank k with probability p_k
// and scoring s_k on a stop (0 if the walk runs off the end).
//
// Trials are split into fixed-size blocks, each driven by its own generator
// seeded from (seed, block index), and merged through integer counts, so the
// result is a function of (hazards, sats, trials, seed) alone.
SimResult simulate(const HazardSchedule& hazards,
                   const SatisfactionSchedule& sats, std::uint64_t trials,
                   std::uint64_t seed, SimOptions options = {});

}  // namespace satmetric

#endif  // SATMETRIC_SIMULATOR_H_
