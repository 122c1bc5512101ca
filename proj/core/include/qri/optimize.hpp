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

#include <cstdint>
#include <optional>
#include <vector>

#include "qri/incompat.hpp"

namespace qri {

/** Qubit basis parameters; canonical range beta in [0, pi], gamma in [0, 2pi). */
struct BasisParams {
  double beta = 0.0;
  double gamma = 0.0;
};

/**
 * Any real (beta, gamma) names the same basis as exactly one canonical pair:
 * beta wraps mod 2pi, the upper half folds onto [0, pi] with gamma shifted
 * by pi. Refinement wanders freely and reports canonically.
 */
BasisParams canonical_params(double beta, double gamma);

struct RefinePoint {
  BasisParams params;  // canonical; zeroed for the general path where no
                       // two-parameter chart exists
  double value;
};

struct MaxQResult {
  double q_max = 0.0;
  BasisParams argmax;  // populated for dimension 2
  int grid_resolution = 0;  // grid side for the qubit path, sample count otherwise
  int refine_iterations = 0;
  std::vector<RefinePoint> trace;  // accepted values, nondecreasing
  std::optional<ObservableBasis> best_basis;
};

/**
 * Largest incompatibility of any qubit basis relative to `a` on rho.
 * Exhaustive (beta, gamma) grid scan (grid_n >= 8 per side) followed by
 * Nelder-Mead simplex refinement from the three best cells, standard
 * coefficients (reflection 1, expansion 2, contraction 0.5, shrink 0.5).
 * Fully deterministic; grid ties resolve to the smallest beta, then gamma.
 * The returned q_max is never below any evaluated sample.
 */
MaxQResult max_q_over_b(const DensityMatrix& rho, const ObservableBasis& a,
                        int grid_n = 64, int refine_iters = 200,
                        LogBase base = LogBase::two, std::uint64_t seed = 0,
                        int threads = 1);

/**
 * Any-dimension variant: `samples` Haar-random bases (at least 32), then
 * random orthogonal perturbations of the best one with a step that shrinks
 * by 0.7 on every rejection; gives up after 20 consecutive rejections or
 * refine_iters proposals. Deterministic for a given seed.
 */
MaxQResult max_q_over_b_general(const DensityMatrix& rho, const ObservableBasis& a,
                                int samples = 64, int refine_iters = 200,
                                LogBase base = LogBase::two, std::uint64_t seed = 0);

}  // namespace qri
