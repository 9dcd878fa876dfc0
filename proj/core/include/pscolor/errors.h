// Copyright 2026 The pscolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PSCOLOR_ERRORS_H_
#define PSCOLOR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace pscolor {

// Input that violates a structural precondition (self-loops, out-of-range
// vertices, unparsable files).
class MalformedInputError : public std::invalid_argument {
 public:
  explicit MalformedInputError(const std::string& what)
      : std::invalid_argument(what) {}
};

// An exhaustive oracle was asked to search an instance beyond its budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A pipeline precondition on the graph does not hold (e.g. a triangle was
// found where the input must be triangle-free).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace pscolor

#endif  // PSCOLOR_ERRORS_H_
