// Copyright 2026 The hcwalk Authors
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

#ifndef HCWALK_ERRORS_HPP
#define HCWALK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hcwalk {

// Invalid input: a bound on d, q or a threshold was violated.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request exceeds a configured size bound (oracle, dense eigen).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// The graph structure is inconsistent (e.g. singular hitting-time system).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Round-off beyond tolerance, typically an operator bug.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hcwalk

#endif  // HCWALK_ERRORS_HPP
