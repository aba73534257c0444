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

#include "satmetric/stopping_models.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "satmetric/errors.h"

namespace satmetric {
namespace {

void require_relevant(const JudgedRanking& ranking, const char* model) {
  if (ranking.total_relevant() == 0) {
    throw UndefinedMetricError(std::string(model) + " is undefined for topic '" +
                               ranking.topic_id() +
                               "': no relevant documents in the pool");
  }
}

void check_range(bool ok, const char* field, double value) {
  if (!ok) {
    throw DomainError(std::string("WE parameter ") + field + " = " +
                      std::to_string(value) + " is out of range");
  }
}

}  // namespace

void WEParams::validate() const {
  check_range(base_hazard > 0.0 && base_hazard <= 1.0, "base_hazard",
              base_hazard);
  check_range(expectation_smoothing > 0.0 && expectation_smoothing <= 1.0,
              "expectation_smoothing", expectation_smoothing);
  check_range(expectation_prior >= 0.0 && expectation_prior <= 1.0,
              "expectation_prior", expectation_prior);
  check_range(willingness_exponent >= 0.0 && std::isfinite(willingness_exponent),
              "willingness_exponent", willingness_exponent);
  check_range(expectation_exponent >= 0.0 && std::isfinite(expectation_exponent),
              "expectation_exponent", expectation_exponent);
}

HazardSchedule ap_hazards(const JudgedRanking& ranking) {
  require_relevant(ranking, "AP");
  std::vector<double> p(ranking.size(), 0.0);
  std::size_t remaining = ranking.total_relevant();
  for (std::size_t k = 0; k < ranking.size(); ++k) {
    if (!ranking.is_relevant(k)) continue;
    p[k] = 1.0 / static_cast<double>(remaining);
    --remaining;
  }
  return HazardSchedule(std::move(p));
}

HazardSchedule rbp_hazards(std::size_t n, double persistence) {
  if (!(persistence >= 0.0 && persistence < 1.0)) {
    throw DomainError("RBP persistence must be in [0, 1), got " +
                      std::to_string(persistence));
  }
  return HazardSchedule(std::vector<double>(n, 1.0 - persistence));
}

double we_hazard(double willingness, double expectation,
                 const WEParams& params) {
  const double expectation_term =
      std::pow(1.0 - expectation, params.expectation_exponent);
  const double willingness_term =
      std::pow(1.0 - willingness, params.willingness_exponent);
  return std::min(
      1.0, params.base_hazard * (expectation_term + willingness_term) / 2.0);
}

HazardSchedule we_hazards(const JudgedRanking& ranking,
                          const WEParams& params) {
  params.validate();
  require_relevant(ranking, "the WE model");
  const double total = static_cast<double>(ranking.total_relevant());
  const double alpha = params.expectation_smoothing;

  std::vector<double> p(ranking.size());
  std::size_t remaining = ranking.total_relevant();
  double expectation = params.expectation_prior;
  for (std::size_t k = 0; k < ranking.size(); ++k) {
    const double willingness = static_cast<double>(remaining) / total;
    p[k] = we_hazard(willingness, expectation, params);
    const double rel = ranking.is_relevant(k) ? 1.0 : 0.0;
    expectation = alpha * rel + (1.0 - alpha) * expectation;
    if (ranking.is_relevant(k)) --remaining;
  }
  return HazardSchedule(std::move(p));
}

}  // namespace satmetric
