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

#ifndef SATMETRIC_ERRORS_H_
#define SATMETRIC_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace satmetric {

// A probability, grade or parameter outside its admissible range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Inputs whose shapes do not line up (e.g. schedules of different length).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The metric has no value for this input, e.g. AP with no relevant documents.
class UndefinedMetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad metric configuration (unmapped grade, unknown model name, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Raised by join() when the unjudged policy is `error`.
class UnjudgedDocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace satmetric

#endif  // SATMETRIC_ERRORS_H_
