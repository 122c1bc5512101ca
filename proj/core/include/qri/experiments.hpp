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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qri/optimize.hpp"

namespace qri {

struct Axis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  int steps = 0;
};

/**
 * Dense parameter-sweep result. Each row holds the axis values (last axis
 * fastest) followed by the computed columns; the row count is the product of
 * the axis step counts. Rows are computed into index-addressed slots, so a
 * sweep is byte-identical for any thread count.
 */
struct SweepGrid {
  std::vector<Axis> axes;
  std::vector<std::string> value_names;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> meta;
};

/** Shortest representation at 12 significant digits, locale-independent. */
std::string format_sig12(double v);

/** CSV: "# key=value" metadata lines, a header row, then data rows. */
void write_csv(const SweepGrid& grid, std::ostream& out);

/** Same grid as a JSON document (meta, axes, columns, rows). */
void write_json(const SweepGrid& grid, std::ostream& out);

/**
 * Pure-qubit arc theta in [0, pi] at phi = 0, measured in the computational
 * basis after a prior pauli-y measurement. Columns: q and the computational
 * coherence c; q + c = 1 along the whole arc.
 */
SweepGrid fig1_sweep(int steps = 181, int threads = 0);

/**
 * Real amplitude alpha against real bases a and b, each axis on [0, 1].
 * Column: q.
 */
SweepGrid fig2_sweep(int steps = 41, int threads = 0);

/** Single fig2 cell; exposed so exact parameter points can be checked. */
double fig2_quantumness(double alpha, double a, double b);

/**
 * Largest q over all bases for every pure qubit state (theta in [0, pi],
 * phi in [0, 2pi]). Column: q_max.
 */
SweepGrid fig3_sweep(int theta_steps = 61, int phi_steps = 61, int grid_n = 32,
                     int refine_iters = 200, std::uint64_t seed = 0, int threads = 0);

/**
 * Largest q over all bases for depolarized states (theta in [0, pi], mixing
 * p in [0, 1]; p = 1 is pure). Column: q_max.
 */
SweepGrid fig4_sweep(int theta_steps = 61, int p_steps = 51, int grid_n = 32,
                     int refine_iters = 200, std::uint64_t seed = 0, int threads = 0);

enum class AxiomId { q1, q2, q3, q4, comp, finite, marginal_note };

/** Canonical display names: Q1..Q4, COMP, FINITE, MARGINAL-NOTE. */
std::string axiom_name(AxiomId id);

/** Case-insensitive parse of an axiom name; empty when unknown. */
std::optional<AxiomId> parse_axiom_id(std::string_view name);

/** Tolerance each suite is held to when the caller does not override it. */
double default_axiom_tolerance(AxiomId id);

struct AxiomReport {
  AxiomId id;
  int trials = 0;
  int failures = 0;
  double max_violation = 0.0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
};

/**
 * Randomized property suite for one structural guarantee:
 *   Q1  zero on the maximally mixed state
 *   Q2  zero when the second basis is the first up to order and phases
 *   Q3  convexity in the state
 *   Q4  additivity on product states, product form against direct evaluation
 *   COMP  q + c = 1 for pure qubits against an unbiased second basis
 *   FINITE  finite value on rank-deficient states
 *   MARGINAL-NOTE  row sums of the joint distribution reproduce the direct
 *                  marginal (the first measurement cannot see the later one)
 * Trials cycle dimensions 2, 3, 4 (COMP is qubit-only by statement).
 */
AxiomReport run_axiom_suite(AxiomId id, int trials, std::uint64_t seed, double tol,
                            int threads = 0);

/** Gaussian-amplitude pure state, dimension >= 2. */
DensityMatrix random_pure(std::size_t dim, SplitMix64& rng);

/** Wishart-style density of the given rank: normalized G G^dagger. */
DensityMatrix random_density(std::size_t dim, std::size_t rank, SplitMix64& rng);

/** Columns of a Haar unitary as a measurement basis. */
ObservableBasis random_basis(std::size_t dim, SplitMix64& rng);

}  // namespace qri
