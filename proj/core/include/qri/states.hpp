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
#include <vector>

#include "qri/linalg.hpp"

namespace qri {

/**
 * Validated density operator: Hermitian within 1e-10, unit trace within
 * 1e-10, smallest eigenvalue no lower than -1e-10. Every public constructor
 * funnels through from_matrix, so holding a DensityMatrix means the checks
 * passed.
 */
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(const CMat& m);

  const CMat& matrix() const { return mat_; }
  std::size_t dim() const { return mat_.dim(); }

  /** Tr(rho^2); equals 1 exactly only for pure states. */
  double purity() const;
  bool is_pure(double tol = 1e-8) const { return purity() >= 1.0 - tol; }

  /** <v|rho|v> for a unit vector v; the imaginary part is discarded (it is
   *  bounded by the Hermiticity tolerance). */
  double expectation(const CVec& v) const;

 private:
  explicit DensityMatrix(CMat m) : mat_(std::move(m)) {}
  CMat mat_;
};

/**
 * Orthonormal measurement basis: d unit vectors, pairwise orthogonal within
 * 1e-10, resolving the identity within 1e-9.
 */
class ObservableBasis {
 public:
  explicit ObservableBasis(std::vector<CVec> vectors, std::string label = "");

  std::size_t dim() const { return vectors_.size(); }
  const std::vector<CVec>& vectors() const { return vectors_; }
  const CVec& operator[](std::size_t i) const { return vectors_[i]; }
  const std::string& label() const { return label_; }

 private:
  std::vector<CVec> vectors_;
  std::string label_;
};

/** Convex mixture description; consumed by mix(). */
struct MixtureSpec {
  std::vector<double> weights;
  std::vector<DensityMatrix> components;
};

/** |psi><psi| from amplitudes; the input is normalized, zero input throws. */
DensityMatrix pure_state(const CVec& amps);

/** Pure qubit at polar angle theta in [0, pi] and azimuth phi (periodic). */
DensityMatrix bloch_pure(double theta, double phi);

/** I/d for dimension d >= 2. */
DensityMatrix maximally_mixed(std::size_t dim);

/**
 * Convex blend p * rho + (1 - p) * I/2 of a pure qubit state with the
 * maximally mixed one; eigenvalues are (1 + p)/2 and (1 - p)/2.
 */
DensityMatrix depolarized(const DensityMatrix& pure_qubit, double p);

/** Weighted mixture; weights must be nonnegative and sum to 1 within 1e-12. */
DensityMatrix mix(const MixtureSpec& spec);

/**
 * Named bases. "computational" works at any dimension, "fourier" gives the
 * discrete Fourier basis (unbiased with respect to computational), "pauli-x"
 * and "pauli-y" are the qubit eigenbases of those operators.
 */
ObservableBasis named_basis(const std::string& name, std::size_t dim);

/**
 * Qubit basis { (cos(b/2), e^{ig} sin(b/2)), orthogonal complement } for
 * beta in [0, pi], gamma in [0, 2pi). Vectors are phase-normalized so the
 * first nonzero amplitude is real and nonnegative, keeping emitted numbers
 * reproducible.
 */
ObservableBasis parametric_qubit_basis(double beta, double gamma);

/** Real qubit basis { (a, sqrt(1-a^2)), (sqrt(1-a^2), -a) } for a in [0, 1]. */
ObservableBasis real_parameter_basis(double a);

/** Composite-system builders; indices pair row-major as (i, j) -> i*d2 + j. */
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);
ObservableBasis tensor_product(const ObservableBasis& a, const ObservableBasis& b);

}  // namespace qri
