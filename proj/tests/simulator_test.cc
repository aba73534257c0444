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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "satmetric/errors.h"
#include "test_support.h"

namespace satmetric {
namespace {

TEST(Simulate, DeterministicStop) {
  const SimResult r =
      simulate(HazardSchedule({1.0}), SatisfactionSchedule({0.7}), 1000, 1);
  EXPECT_EQ(r.mean_satisfaction, 0.7);
  ASSERT_TRUE(r.std_error.has_value());
  EXPECT_EQ(*r.std_error, 0.0);
  EXPECT_EQ(r.stop_counts[0], 1000u);
  EXPECT_EQ(r.never_stopped, 0u);
}

TEST(Simulate, NoStopping) {
  const SimResult r = simulate(HazardSchedule({0.0, 0.0}),
                               SatisfactionSchedule({0.9, 0.4}), 5000, 2);
  EXPECT_EQ(r.mean_satisfaction, 0.0);
  EXPECT_EQ(r.never_stopped, 5000u);
  EXPECT_EQ(r.stop_counts, (std::vector<std::uint64_t>{0, 0}));
}

TEST(Simulate, ConvergesToClosedForm) {
  const HazardSchedule p({0.5, 0.5, 1.0});
  const SatisfactionSchedule s({1.0, 0.0, 2.0 / 3.0});
  const SimResult r = simulate(p, s, 1'000'000, 2026);
  ASSERT_TRUE(r.std_error.has_value());
  EXPECT_LE(std::abs(r.mean_satisfaction - 2.0 / 3.0), 4.0 * *r.std_error);
  EXPECT_EQ(r.never_stopped, 0u);
}

TEST(Simulate, SingleTrialHasNoStdError) {
  const SimResult r =
      simulate(HazardSchedule({0.5}), SatisfactionSchedule({1.0}), 1, 3);
  EXPECT_FALSE(r.std_error.has_value());
  EXPECT_EQ(r.stop_counts[0] + r.never_stopped, 1u);
}

TEST(Simulate, Errors) {
  EXPECT_THROW(
      simulate(HazardSchedule({0.5}), SatisfactionSchedule({1.0, 1.0}), 10, 1),
      StructuralError);
  EXPECT_THROW(simulate(HazardSchedule({0.5}), SatisfactionSchedule({1.0}), 0, 1),
               DomainError);
}

TEST(Simulate, ReproducibleAndThreadCountIndependent) {
  std::mt19937_64 rng(43);
  const auto p = testing::random_unit_values(rng, 12);
  const auto s = testing::random_unit_values(rng, 12);
  const SimResult a = simulate(HazardSchedule(p), SatisfactionSchedule(s),
                               100'000, 99, {.threads = 1});
  const SimResult b = simulate(HazardSchedule(p), SatisfactionSchedule(s),
                               100'000, 99, {.threads = 3});
  const SimResult c = simulate(HazardSchedule(p), SatisfactionSchedule(s),
                               100'000, 99, {.threads = 8});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  const SimResult other = simulate(HazardSchedule(p), SatisfactionSchedule(s),
                                   100'000, 100, {.threads = 1});
  EXPECT_NE(a.stop_counts, other.stop_counts);
}

TEST(Simulate, HistogramMatchesStopWeights) {
  std::mt19937_64 rng(47);
  constexpr std::uint64_t kTrials = 200'000;
  for (int i = 0; i < 5; ++i) {
    const std::size_t n = 1 + rng() % 15;
    std::vector<double> p = testing::random_unit_values(rng, n);
    for (double& h : p) h *= 0.5;
    const HazardSchedule hazards(p);
    const SimResult r = simulate(hazards, SatisfactionSchedule(std::vector<double>(n)),
                                 kTrials, 1000 + i);
    const StopWeights w = stop_weights(hazards);
    std::uint64_t total = r.never_stopped;
    const auto check = [&](std::uint64_t count, double weight) {
      const double freq = static_cast<double>(count) / kTrials;
      const double se = std::sqrt(weight * (1.0 - weight) / kTrials);
      EXPECT_LE(std::abs(freq - weight), 4.0 * se + 1e-12)
          << "weight " << weight << " freq " << freq;
    };
    for (std::size_t k = 0; k < n; ++k) {
      total += r.stop_counts[k];
      check(r.stop_counts[k], w.weights[k]);
    }
    check(r.never_stopped, w.residual);
    EXPECT_EQ(total, kTrials);
  }
}

}  // namespace
}  // namespace satmetric
