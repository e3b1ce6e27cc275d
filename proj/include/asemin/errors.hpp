/*
 * Copyright 2026 The asemin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace asemin {

/// Raised when caller-supplied data breaks a documented precondition
/// (unknown state, malformed system, bad traffic spec, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
  InputError(const std::string& what, std::vector<std::string> violations)
      : std::runtime_error(what), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// A document could not be decoded. `what()` starts with a JSON path.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// A scheduler was queried outside the region it was synthesized for.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace asemin
