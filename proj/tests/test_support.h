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

#ifndef SATMETRIC_TESTS_TEST_SUPPORT_H_
#define SATMETRIC_TESTS_TEST_SUPPORT_H_

// Test-only oracles and random generators. Nothing here calls into the
// library's evaluation path.

#include <cstddef>
#include <random>
#include <vector>

namespace satmetric::testing {

// Stopping outcome distribution found by walking the decision tree of the
// browsing process: at each rank branch into "stop" and "continue".
struct PathEnumeration {
  std::vector<double> stop_probability;  // per rank
  double never = 0.0;
  double expected_satisfaction = 0.0;
};

inline void enumerate_from(const std::vector<double>& p,
                           const std::vector<double>& s, std::size_t rank,
                           double reach, PathEnumeration& acc) {
  if (rank == p.size()) {
    acc.never += reach;
    return;
  }
  const double stop = reach * p[rank];
  acc.stop_probability[rank] += stop;
  acc.expected_satisfaction += stop * s[rank];
  enumerate_from(p, s, rank + 1, reach - stop, acc);
}

inline PathEnumeration enumerate_paths(const std::vector<double>& p,
                                       const std::vector<double>& s) {
  PathEnumeration acc;
  acc.stop_probability.assign(p.size(), 0.0);
  enumerate_from(p, s, 0, 1.0, acc);
  return acc;
}

// Hazards in [0, 1], with exact 0 and 1 showing up now and then.
inline std::vector<double> random_unit_values(std::mt19937_64& rng,
                                              std::size_t n) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, 19);
  std::vector<double> v(n);
  for (double& x : v) {
    const int c = pick(rng);
    x = c == 0 ? 0.0 : c == 1 ? 1.0 : unit(rng);
  }
  return v;
}

struct BinaryCase {
  std::vector<int> grades;
  std::size_t total_relevant = 0;
};

// Random binary ranking of length in [0, max_len] whose pool holds up to
// `max_unretrieved` extra relevant documents.
inline BinaryCase random_binary_case(std::mt19937_64& rng,
                                     std::size_t max_len,
                                     std::size_t max_unretrieved) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> extra(0, max_unretrieved);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  BinaryCase c;
  const double d = density(rng);
  c.grades.resize(len(rng));
  std::bernoulli_distribution rel(d);
  for (int& g : c.grades) g = rel(rng) ? 1 : 0;
  for (int g : c.grades) c.total_relevant += static_cast<std::size_t>(g);
  c.total_relevant += extra(rng);
  return c;
}

// Independent AP definition over raw grades: mean over the pool of
// precision at each relevant rank.
inline double textbook_ap(const std::vector<int>& grades, std::size_t pool) {
  double sum = 0.0;
  for (std::size_t k = 0; k < grades.size(); ++k) {
    if (grades[k] == 0) continue;
    std::size_t hits = 0;
    for (std::size_t u = 0; u <= k; ++u) hits += grades[u] != 0;
    sum += static_cast<double>(hits) / static_cast<double>(k + 1);
  }
  return sum / static_cast<double>(pool);
}

}  // namespace satmetric::testing

#endif  // SATMETRIC_TESTS_TEST_SUPPORT_H_
