// Copyright 2026 The QHOPM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qhopm {

/// Precondition or shape mismatch detected at a public API boundary.
class ContractViolation : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A contraction produced a (numerically) zero vector, so the mode update has
/// no direction. Carries the offending mode so callers can re-seed it.
class DegenerateUpdate : public std::runtime_error {
  public:
    explicit DegenerateUpdate(std::size_t mode)
        : std::runtime_error("degenerate update at mode " +
                             std::to_string(mode)),
          mode_(mode) {}

    [[nodiscard]] std::size_t mode() const noexcept { return mode_; }

  private:
    std::size_t mode_;
};

/// Calibration target mismatch: the measured value lies below the reference.
class NegativeRate : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class MitigationOverflow : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Invalid experiment configuration (CLI / config file).
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace qhopm
