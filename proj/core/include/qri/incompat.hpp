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
#include <vector>

#include "qri/states.hpp"

namespace qri {

enum class LogBase { two, e };

/** log in the requested base; callers guarantee x > 0. */
double log_in_base(double x, LogBase base);

/**
 * Probability distribution over measurement outcomes. Entries in
 * [-1e-10, 1e-15) are clamped to zero on construction (quadratic forms of
 * valid states can dip that far below zero); anything more negative is
 * rejected. The total must be 1 within 1e-9. The base tag records which
 * logarithm downstream entropy-like reports were, or will be, taken in.
 */
class ProbVector {
 public:
  explicit ProbVector(std::vector<double> probs, LogBase base = LogBase::two);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }
  LogBase base() const { return base_; }

 private:
  std::vector<double> probs_;
  LogBase base_;
};

/** Which observable the measurement sequence starts with. */
enum class MeasOrder { a_then_b, b_then_a };

/**
 * Outcome distribution of two projective measurements in sequence. Entry
 * (i, j) is the probability of outcome i for the first measurement followed
 * by outcome j for the second. Rows index the first-measured basis.
 */
class JointDist {
 public:
  JointDist(std::vector<std::vector<double>> grid, MeasOrder order);

  std::size_t rows() const { return grid_.size(); }
  std::size_t cols() const { return grid_.empty() ? 0 : grid_.front().size(); }
  double at(std::size_t i, std::size_t j) const { return grid_[i][j]; }
  MeasOrder order() const { return order_; }

  /** Distribution of the first measurement's outcome (sum over columns). */
  ProbVector row_marginal() const;
  /** Distribution of the second measurement's outcome (sum over rows). */
  ProbVector col_marginal() const;

 private:
  std::vector<std::vector<double>> grid_;
  MeasOrder order_;
};

/** Full decomposition of the sequential-measurement disturbance. */
struct QReport {
  double q;             // divergence between the two A marginals
  double coherence_c;   // relative entropy of coherence in the A basis
  double d_term;        // total: -sum_i p_first[i] * log p_after[i]
  ProbVector p_first;   // A measured directly
  ProbVector p_after;   // A measured after B
};

/** Outcome distribution of measuring `a` directly on rho. */
ProbVector marginal_first(const DensityMatrix& rho, const ObservableBasis& a);

/**
 * Outcome distribution of `a` when a projective `b` measurement (result
 * discarded) happens first: p'_i = sum_j <y_j|rho|y_j> |<x_i|y_j>|^2.
 */
ProbVector marginal_after(const DensityMatrix& rho, const ObservableBasis& a,
                          const ObservableBasis& b);

/** Joint outcome distribution; `first` is measured before `second`. */
JointDist joint_dist(const DensityMatrix& rho, const ObservableBasis& first,
                     const ObservableBasis& second, MeasOrder order = MeasOrder::a_then_b);

/**
 * Kullback-Leibler divergence D(p || q) = sum_i p_i log(p_i / q_i).
 * Zero-probability entries of p contribute nothing; q_i = 0 with p_i above
 * 1e-12 raises AbsoluteContinuityViolation. Never negative; results inside
 * [-1e-12, 0) from rounding collapse to 0.
 */
double kl_divergence(const ProbVector& p, const ProbVector& q, LogBase base = LogBase::two);

/**
 * Incompatibility of b relative to a on rho: the divergence of the direct
 * a-outcome distribution from the one obtained when b is measured first.
 * Zero exactly when the prior b measurement cannot be detected from a's
 * statistics.
 */
double quantumness(const DensityMatrix& rho, const ObservableBasis& a,
                   const ObservableBasis& b, LogBase base = LogBase::two);

/** S(diagonal part of rho in `basis`) - S(rho), entropies via hermitian_eig. */
double coherence_rel_ent(const DensityMatrix& rho, const ObservableBasis& basis,
                         LogBase base = LogBase::two);

/** Von Neumann entropy of rho. */
double von_neumann_entropy(const DensityMatrix& rho, LogBase base = LogBase::two);

/** Shannon entropy of a distribution. */
double shannon_entropy(const ProbVector& p, LogBase base = LogBase::two);

/**
 * Joint decomposition q + coherence_c = d_term for pure states: the total
 * d_term depends only on the pair of bases through |<x_i|y_j>|^2, so it
 * splits the disturbance into a basis-coherence part and an incompatibility
 * part. Requires purity: Tr(rho^2) >= 1 - 1e-8.
 */
QReport complementarity_report(const DensityMatrix& rho, const ObservableBasis& a,
                               const ObservableBasis& b, LogBase base = LogBase::two);

/**
 * Incompatibility on a product state rho1 (x) rho2 with both observables
 * applied factor-wise, evaluated through the product of the single-system
 * outcome distributions. Equals the sum of the single-system values.
 */
double quantumness_composite(const DensityMatrix& rho1, const DensityMatrix& rho2,
                             const ObservableBasis& a, const ObservableBasis& b,
                             LogBase base = LogBase::two);

}  // namespace qri
