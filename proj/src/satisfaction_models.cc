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

#include "satmetric/satisfaction_models.h"

#include <charconv>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "satmetric/errors.h"

namespace satmetric {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

GainMap::GainMap(std::map<RelevanceGrade, double> table)
    : table_(std::move(table)) {
  table_.try_emplace(0, 0.0);
  double previous = 0.0;
  for (const auto& [grade, gain] : table_) {
    if (grade < 0) {
      throw ConfigError("gain map: negative grade " + std::to_string(grade));
    }
    if (!(gain >= 0.0 && gain <= 1.0)) {
      throw ConfigError("gain map: gain for grade " + std::to_string(grade) +
                        " is outside [0, 1]");
    }
    if (grade == 0 && gain != 0.0) {
      throw ConfigError("gain map: grade 0 must map to 0");
    }
    if (gain < previous) {
      throw ConfigError("gain map: gains must be non-decreasing in grade (" +
                        std::to_string(grade) + ")");
    }
    previous = gain;
  }
}

GainMap GainMap::binary(int threshold) {
  if (threshold < 1) {
    throw ConfigError("binary gain threshold must be >= 1");
  }
  GainMap map;
  map.binary_threshold_ = threshold;
  return map;
}

GainMap GainMap::parse(std::string_view text) {
  std::map<RelevanceGrade, double> table;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = trim(text.substr(start, end - start));
    start = end + 1;
    if (item.empty()) {
      if (end == text.size()) break;
      throw ConfigError("gain map: empty entry in '" + std::string(text) + "'");
    }
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ConfigError("gain map: expected grade:gain, got '" +
                        std::string(item) + "'");
    }
    const std::string_view grade_text = trim(item.substr(0, colon));
    const std::string gain_text(trim(item.substr(colon + 1)));
    RelevanceGrade grade = 0;
    const auto [ptr, ec] = std::from_chars(
        grade_text.data(), grade_text.data() + grade_text.size(), grade);
    if (ec != std::errc() || ptr != grade_text.data() + grade_text.size()) {
      throw ConfigError("gain map: bad grade '" + std::string(grade_text) +
                        "'");
    }
    double gain = 0.0;
    std::size_t used = 0;
    try {
      gain = std::stod(gain_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != gain_text.size()) {
      throw ConfigError("gain map: bad gain '" + gain_text + "'");
    }
    if (!table.emplace(grade, gain).second) {
      throw ConfigError("gain map: grade " + std::to_string(grade) +
                        " listed twice");
    }
  }
  if (table.empty()) throw ConfigError("gain map is empty");
  return GainMap(std::move(table));
}

double GainMap::gain(RelevanceGrade grade) const {
  if (binary_threshold_) return grade >= *binary_threshold_ ? 1.0 : 0.0;
  const auto it = table_.find(grade);
  if (it == table_.end()) {
    throw ConfigError("gain map has no entry for grade " +
                      std::to_string(grade));
  }
  return it->second;
}

std::string GainMap::to_string() const {
  if (binary_threshold_) {
    return "binary>=" + std::to_string(*binary_threshold_);
  }
  std::string out;
  char buf[64];
  for (const auto& [grade, gain] : table_) {
    std::snprintf(buf, sizeof(buf), "%s%d:%.12g", out.empty() ? "" : ",",
                  grade, gain);
    out += buf;
  }
  return out;
}

SatisfactionSchedule precision_satisfaction(const JudgedRanking& ranking) {
  std::vector<double> s(ranking.size());
  std::size_t found = 0;
  for (std::size_t k = 0; k < ranking.size(); ++k) {
    if (ranking.is_relevant(k)) ++found;
    s[k] = static_cast<double>(found) / static_cast<double>(k + 1);
  }
  return SatisfactionSchedule(std::move(s));
}

SatisfactionSchedule gain_satisfaction(const JudgedRanking& ranking,
                                       const GainMap& gains) {
  std::vector<double> s(ranking.size());
  for (std::size_t k = 0; k < ranking.size(); ++k) {
    s[k] = gains.gain(ranking.grade(k));
  }
  return SatisfactionSchedule(std::move(s));
}

SatisfactionSchedule navigational_satisfaction(const JudgedRanking& ranking) {
  std::vector<double> s(ranking.size());
  bool found = false;
  for (std::size_t k = 0; k < ranking.size(); ++k) {
    found = found || ranking.is_relevant(k);
    s[k] = found ? 1.0 : 0.0;
  }
  return SatisfactionSchedule(std::move(s));
}

}  // namespace satmetric
