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

#include <cstddef>
#include <string>

#include "qri/states.hpp"

namespace qri {

/**
 * State descriptions, one object per state:
 *   {"kind": "pure", "amps": [[re, im], ...]}
 *   {"kind": "mixed", "matrix": [[[re, im], ...], ...]}
 *   {"kind": "bloch", "theta": t, "phi": p}
 *   {"kind": "depolarized", "theta": t, "phi": p, "p": x}
 * Malformed documents raise ValidationError; a valid document whose matrix
 * fails the density-operator checks raises the underlying error unchanged.
 */
DensityMatrix parse_state_json(const std::string& text);

/**
 * Observable descriptions, resolved against the state dimension:
 *   {"name": "computational" | "fourier" | "pauli-x" | "pauli-y"}
 *   {"beta": b, "gamma": g}      parametric qubit basis
 *   {"a": x}                     real-parameter qubit basis
 *   {"vectors": [[[re, im], ...], ...]}  explicit orthonormal basis
 * Bases of the wrong dimension raise DimensionMismatch.
 */
ObservableBasis parse_observable_json(const std::string& text, std::size_t state_dim);

}  // namespace qri
