// Copyright 2026 The telegain Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace telegain {

/// A parameter lies outside the domain where the model is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A basis index exceeds the Fock cutoff.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Operands with different shapes (cutoffs, grids) were combined.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operator does not satisfy the density-operator invariants, or is not
/// Hermitian where that is required.
class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input has weight on a number-basis dyad with no closed-form
/// transition coefficient.
class UnsupportedSourceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The truncated output loses more trace than the tail tolerance allows.
class CutoffError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A phase-space function is not contained in its grid.
class ExtentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The maximizer landed on a bracket endpoint.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ratio was requested whose denominator vanishes.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace telegain
