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

#include "qri/incompat.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qri {

namespace {

// Entries below this are treated as exact zeros; valid-state quadratic forms
// can land here through cancellation.
constexpr double kZeroFloor = 1e-15;
// p mass above this sitting on a q zero is a genuine support mismatch.
constexpr double kSupportTol = 1e-12;

double clamp_probability(double v, const char* where) {
  if (v < -1e-10) {
    throw ValidationError(std::string(where) + ": probability below -1e-10");
  }
  if (v < kZeroFloor) return 0.0;
  return v;
}

void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw DimensionMismatch(std::string(where) + ": dimensions " + std::to_string(a) +
                            " and " + std::to_string(b) + " do not match");
  }
}

}  // namespace

double log_in_base(double x, LogBase base) {
  return base == LogBase::two ? std::log2(x) : std::log(x);
}

ProbVector::ProbVector(std::vector<double> probs, LogBase base)
    : probs_(std::move(probs)), base_(base) {
  if (probs_.empty()) throw ValidationError("ProbVector: empty distribution");
  double total = 0.0;
  for (double& v : probs_) {
    v = clamp_probability(v, "ProbVector");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("ProbVector: entries sum to " + std::to_string(total) +
                          ", not 1 within 1e-9");
  }
}

JointDist::JointDist(std::vector<std::vector<double>> grid, MeasOrder order)
    : grid_(std::move(grid)), order_(order) {
  if (grid_.empty()) throw ValidationError("JointDist: empty grid");
  const std::size_t cols = grid_.front().size();
  double total = 0.0;
  for (auto& row : grid_) {
    if (row.size() != cols) throw ValidationError("JointDist: ragged grid");
    for (double& v : row) {
      v = clamp_probability(v, "JointDist");
      total += v;
    }
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("JointDist: entries sum to " + std::to_string(total) +
                          ", not 1 within 1e-9");
  }
}

ProbVector JointDist::row_marginal() const {
  std::vector<double> out(rows(), 0.0);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) out[i] += grid_[i][j];
  return ProbVector(std::move(out));
}

ProbVector JointDist::col_marginal() const {
  std::vector<double> out(cols(), 0.0);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) out[j] += grid_[i][j];
  return ProbVector(std::move(out));
}

ProbVector marginal_first(const DensityMatrix& rho, const ObservableBasis& a) {
  require_same_dim(rho.dim(), a.dim(), "marginal_first");
  std::vector<double> probs(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) probs[i] = rho.expectation(a[i]);
  return ProbVector(std::move(probs));
}

ProbVector marginal_after(const DensityMatrix& rho, const ObservableBasis& a,
                          const ObservableBasis& b) {
  require_same_dim(rho.dim(), a.dim(), "marginal_after");
  require_same_dim(rho.dim(), b.dim(), "marginal_after");
  const std::size_t d = a.dim();
  std::vector<double> weights(d);
  for (std::size_t j = 0; j < d; ++j) weights[j] = rho.expectation(b[j]);
  std::vector<double> probs(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) acc += weights[j] * std::norm(inner(a[i], b[j]));
    probs[i] = acc;
  }
  return ProbVector(std::move(probs));
}

JointDist joint_dist(const DensityMatrix& rho, const ObservableBasis& first,
                     const ObservableBasis& second, MeasOrder order) {
  require_same_dim(rho.dim(), first.dim(), "joint_dist");
  require_same_dim(rho.dim(), second.dim(), "joint_dist");
  const std::size_t d = first.dim();
  // Tr[P_j (P_i rho P_i) P_j] collapses to <x_i|rho|x_i> |<y_j|x_i>|^2 for
  // rank-one projectors.
  std::vector<std::vector<double>> grid(d, std::vector<double>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) {
    const double pi = rho.expectation(first[i]);
    for (std::size_t j = 0; j < d; ++j) grid[i][j] = pi * std::norm(inner(second[j], first[i]));
  }
  return JointDist(std::move(grid), order);
}

double kl_divergence(const ProbVector& p, const ProbVector& q, LogBase base) {
  require_same_dim(p.size(), q.size(), "kl_divergence");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p[i];
    const double qi = q[i];
    if (pi == 0.0) continue;  // 0 log 0 = 0, also when q_i = 0
    if (qi == 0.0) {
      if (pi > kSupportTol) {
        throw AbsoluteContinuityViolation(
            "kl_divergence: p has weight " + std::to_string(pi) +
            " where q vanishes (index " + std::to_string(i) + ")");
      }
      continue;  // noise-level mass over an empty bin
    }
    sum += pi * log_in_base(pi / qi, base);
  }
  if (sum < 0.0) {
    if (sum < -1e-12) {
      throw ValidationError("kl_divergence: negative result, inputs are not distributions");
    }
    sum = 0.0;
  }
  return sum;
}

double quantumness(const DensityMatrix& rho, const ObservableBasis& a,
                   const ObservableBasis& b, LogBase base) {
  return kl_divergence(marginal_first(rho, a), marginal_after(rho, a, b), base);
}

double shannon_entropy(const ProbVector& p, LogBase base) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double v = p[i];
    if (v > 0.0) sum -= v * log_in_base(v, base);
  }
  return sum < 0.0 ? 0.0 : sum;
}

namespace {

double entropy_of_spectrum(const std::vector<double>& values, LogBase base) {
  double sum = 0.0;
  for (double v : values) {
    if (v < -1e-10) {
      throw ValidationError("entropy: eigenvalue below -1e-10");
    }
    if (v > kZeroFloor) sum -= v * log_in_base(v, base);
  }
  return sum < 0.0 ? 0.0 : sum;
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho, LogBase base) {
  return entropy_of_spectrum(hermitian_eig(rho.matrix()).values, base);
}

double coherence_rel_ent(const DensityMatrix& rho, const ObservableBasis& basis,
                         LogBase base) {
  require_same_dim(rho.dim(), basis.dim(), "coherence_rel_ent");
  const std::size_t d = rho.dim();
  // Dephase rho in the given basis, then compare entropies.
  CMat dephased(d);
  for (std::size_t i = 0; i < d; ++i) {
    dephased(i, i) = Complex(rho.expectation(basis[i]), 0.0);
  }
  const double s_dephased = entropy_of_spectrum(hermitian_eig(dephased).values, base);
  const double diff = s_dephased - von_neumann_entropy(rho, base);
  // The dephased spectrum majorizes from below; tiny negatives are rounding.
  return diff < 0.0 ? 0.0 : diff;
}

QReport complementarity_report(const DensityMatrix& rho, const ObservableBasis& a,
                               const ObservableBasis& b, LogBase base) {
  if (rho.purity() < 1.0 - 1e-8) {
    throw ValidationError("complementarity_report: state must be pure (Tr rho^2 >= 1 - 1e-8)");
  }
  ProbVector p_first = marginal_first(rho, a);
  ProbVector p_after = marginal_after(rho, a, b);
  double d_term = 0.0;
  for (std::size_t i = 0; i < p_first.size(); ++i) {
    const double xi = p_first[i];
    const double zi = p_after[i];
    if (xi == 0.0) continue;
    if (zi == 0.0) {
      if (xi > kSupportTol) {
        throw AbsoluteContinuityViolation(
            "complementarity_report: direct outcome " + std::to_string(i) +
            " has weight where the disturbed marginal vanishes");
      }
      continue;
    }
    d_term -= xi * log_in_base(zi, base);
  }
  const double q = kl_divergence(p_first, p_after, base);
  const double c = coherence_rel_ent(rho, a, base);
  return QReport{q, c, d_term, ProbVector(p_first.probs(), base), ProbVector(p_after.probs(), base)};
}

double quantumness_composite(const DensityMatrix& rho1, const DensityMatrix& rho2,
                             const ObservableBasis& a, const ObservableBasis& b,
                             LogBase base) {
  require_same_dim(rho1.dim(), a.dim(), "quantumness_composite");
  require_same_dim(rho2.dim(), a.dim(), "quantumness_composite");
  require_same_dim(rho1.dim(), b.dim(), "quantumness_composite");
  const ProbVector p1 = marginal_first(rho1, a);
  const ProbVector p2 = marginal_first(rho2, a);
  const ProbVector q1 = marginal_after(rho1, a, b);
  const ProbVector q2 = marginal_after(rho2, a, b);
  const std::size_t d = p1.size();
  std::vector<double> joint_p(d * d), joint_q(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      joint_p[i * d + j] = p1[i] * p2[j];
      joint_q[i * d + j] = q1[i] * q2[j];
    }
  }
  return kl_divergence(ProbVector(std::move(joint_p), base),
                       ProbVector(std::move(joint_q), base), base);
}

}  // namespace qri
