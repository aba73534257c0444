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

#include "satmetric/simulator.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <thread>

#include "satmetric/errors.h"

namespace satmetric {
namespace {

constexpr std::uint64_t kBlockSize = 1 << 14;

struct Counts {
  std::vector<std::uint64_t> stops;
  std::uint64_t never = 0;
};

void run_block(const HazardSchedule& hazards, std::uint64_t seed,
               std::uint64_t block, std::uint64_t trials, Counts& counts) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block),
                    static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 gen(seq);
  // 53-bit uniform in [0, 1); never returns 1, so p_k = 1 always stops.
  const auto unit = [&gen] {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
  };
  const std::size_t n = hazards.size();
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::size_t k = 0;
    while (k < n && !(unit() < hazards[k])) ++k;
    if (k < n) {
      ++counts.stops[k];
    } else {
      ++counts.never;
    }
  }
}

}  // namespace

SimResult simulate(const HazardSchedule& hazards,
                   const SatisfactionSchedule& sats, std::uint64_t trials,
                   std::uint64_t seed, SimOptions options) {
  if (hazards.size() != sats.size()) {
    throw StructuralError("hazard schedule has " +
                          std::to_string(hazards.size()) +
                          " ranks but satisfaction schedule has " +
                          std::to_string(sats.size()));
  }
  if (trials == 0) throw DomainError("simulate needs at least one trial");

  const std::size_t n = hazards.size();
  const std::uint64_t blocks = (trials + kBlockSize - 1) / kBlockSize;
  unsigned workers = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, blocks));

  std::vector<Counts> partial(workers, Counts{std::vector<std::uint64_t>(n), 0});
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t b = w; b < blocks; b += workers) {
          const std::uint64_t size =
              std::min(kBlockSize, trials - b * kBlockSize);
          run_block(hazards, seed, b, size, partial[w]);
        }
      });
    }
  }

  SimResult result;
  result.trials = trials;
  result.stop_counts.assign(n, 0);
  for (const Counts& c : partial) {
    for (std::size_t k = 0; k < n; ++k) result.stop_counts[k] += c.stops[k];
    result.never_stopped += c.never;
  }

  // Satisfaction is a function of the stop rank, so the moments follow from
  // the histogram.
  const double total = static_cast<double>(trials);
  double mean = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    mean += (static_cast<double>(result.stop_counts[k]) / total) * sats[k];
  }
  result.mean_satisfaction = mean;
  if (trials >= 2) {
    double sq = static_cast<double>(result.never_stopped) * mean * mean;
    for (std::size_t k = 0; k < n; ++k) {
      const double d = sats[k] - mean;
      sq += static_cast<double>(result.stop_counts[k]) * d * d;
    }
    result.std_error = std::sqrt(sq / (total - 1.0) / total);
  }
  return result;
}

}  // namespace satmetric
