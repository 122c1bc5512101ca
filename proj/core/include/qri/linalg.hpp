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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "qri/errors.hpp"
#include "qri/rng.hpp"

namespace qri {

using Complex = std::complex<double>;

/** Dense complex vector. Dimensions of interest are small (2 to 8). */
class CVec {
 public:
  CVec() = default;
  explicit CVec(std::size_t dim) : entries_(dim) {}
  CVec(std::initializer_list<Complex> init) : entries_(init) {}

  /** Standard basis vector e_index in the given dimension. */
  static CVec basis_vector(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  Complex& operator[](std::size_t i) { return entries_[i]; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }

  double norm() const;
  /** Unit vector along *this; throws ValidationError on (near-)zero input. */
  CVec normalized() const;

  CVec& operator+=(const CVec& rhs);
  CVec& operator-=(const CVec& rhs);
  CVec& operator*=(Complex scale);

 private:
  std::vector<Complex> entries_;
};

CVec operator+(CVec lhs, const CVec& rhs);
CVec operator-(CVec lhs, const CVec& rhs);
CVec operator*(Complex scale, CVec v);

/** Dense square complex matrix, row-major. */
class CMat {
 public:
  CMat() = default;
  explicit CMat(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static CMat identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  CMat adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  /** Largest |entry| of (*this - other); both operands must share dimension. */
  double max_abs_diff(const CMat& other) const;
  bool is_hermitian(double tol) const;

  CMat& operator+=(const CMat& rhs);
  CMat& operator-=(const CMat& rhs);
  CMat& operator*=(Complex scale);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

CMat operator+(CMat lhs, const CMat& rhs);
CMat operator-(CMat lhs, const CMat& rhs);
CMat operator*(Complex scale, CMat m);
CMat operator*(const CMat& lhs, const CMat& rhs);
CVec operator*(const CMat& m, const CVec& v);

/** Hermitian inner product <u|v>, conjugate-linear in the first argument. */
Complex inner(const CVec& u, const CVec& v);

/** Rank-one matrix |u><v|. */
CMat outer(const CVec& u, const CVec& v);

/**
 * Modified Gram-Schmidt orthonormalization. Input vectors must be linearly
 * independent: a residual norm at or below 1e-10 at any step is rejected.
 * Output spans the same subspace and is orthonormal to better than 1e-12.
 */
std::vector<CVec> gram_schmidt(const std::vector<CVec>& vectors);

struct EigResult {
  std::vector<double> values;   // descending
  std::vector<CVec> vectors;    // vectors[k] pairs with values[k]
};

/**
 * Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
 * Deliberately dependency-free; quadratic convergence makes it exact to
 * near machine precision at the dimensions used here. Input must be
 * Hermitian to within 1e-10 (max deviation from its adjoint).
 */
EigResult hermitian_eig(const CMat& m);

/** Kronecker products; index (i, j) of the factors maps to i * dim_b + j. */
CMat tensor(const CMat& a, const CMat& b);
CVec tensor(const CVec& a, const CVec& b);

/**
 * Haar-distributed random unitary: a complex Gaussian matrix orthonormalized
 * column by column. Gram-Schmidt leaves the implicit R factor with a positive
 * real diagonal, which is exactly the phase fix the Haar measure needs.
 * Deterministic for a given seed. Requires dim >= 2.
 */
CMat haar_unitary(std::size_t dim, std::uint64_t seed);
CMat haar_unitary(std::size_t dim, SplitMix64& rng);

}  // namespace qri
