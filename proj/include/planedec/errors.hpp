// Copyright 2026 The planedec Authors
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

#include <stdexcept>
#include <string>

namespace planedec {

/// Rejected arguments: bad sizes, unknown families, out-of-range labels.
class InvalidInputError : public std::invalid_argument {
 public:
  explicit InvalidInputError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// A construction or curated data set failed one of its own postcondition
/// checks. This is always a bug report, never something to repair silently.
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Malformed document; the message carries the location of the offense.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace planedec
