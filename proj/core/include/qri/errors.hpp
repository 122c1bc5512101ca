// Copyright 2026 The qri developers
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

namespace qri {

/** Input fails a structural precondition (normalization, orthogonality, range). */
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/** Operands have incompatible dimensions. */
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/**
 * Relative entropy is undefined: the first distribution puts weight where the
 * second has none. For the sequential-measurement divergence this cannot occur
 * with valid inputs, so an occurrence signals corrupted data upstream.
 */
class AbsoluteContinuityViolation : public std::runtime_error {
 public:
  explicit AbsoluteContinuityViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qri
