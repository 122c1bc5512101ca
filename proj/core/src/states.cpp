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

#include "qri/states.hpp"

#include <cmath>
#include <utility>

namespace qri {

namespace {

constexpr double kPi = 3.14159265358979323846;

/** Rotate a global phase so the first nonzero amplitude is real >= 0. */
CVec canonical_phase(CVec v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > 1e-12) {
      const Complex factor = std::conj(v[i]) / mag;
      v *= factor;
      // Force the pivot exactly real; the rotation leaves eps-level residue.
      v[i] = Complex(mag, 0.0);
      return v;
    }
  }
  return v;
}

}  // namespace

DensityMatrix DensityMatrix::from_matrix(const CMat& m) {
  if (m.dim() < 2) throw ValidationError("DensityMatrix: dimension must be at least 2");
  if (!m.is_hermitian(1e-10)) {
    throw ValidationError("DensityMatrix: matrix is not Hermitian within 1e-10");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > 1e-10) {
    throw ValidationError("DensityMatrix: trace deviates from 1 by more than 1e-10");
  }
  const EigResult eig = hermitian_eig(m);
  if (eig.values.back() < -1e-10) {
    throw ValidationError("DensityMatrix: smallest eigenvalue below -1e-10, not positive semidefinite");
  }
  return DensityMatrix(m);
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double sum = 0.0;
  const std::size_t n = mat_.dim();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) sum += std::norm(mat_(r, c));
  return sum;
}

double DensityMatrix::expectation(const CVec& v) const {
  if (v.dim() != dim()) throw DimensionMismatch("expectation: vector dimension mismatch");
  return inner(v, mat_ * v).real();
}

ObservableBasis::ObservableBasis(std::vector<CVec> vectors, std::string label)
    : vectors_(std::move(vectors)), label_(std::move(label)) {
  if (vectors_.size() < 2) {
    throw ValidationError("ObservableBasis: need at least two vectors");
  }
  const std::size_t d = vectors_.front().dim();
  if (vectors_.size() != d) {
    throw ValidationError("ObservableBasis: vector count must equal the dimension");
  }
  for (const CVec& v : vectors_) {
    if (v.dim() != d) throw DimensionMismatch("ObservableBasis: mixed vector dimensions");
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(std::abs(inner(vectors_[i], vectors_[j])) - target) > 1e-10) {
        throw ValidationError("ObservableBasis: vectors are not orthonormal within 1e-10");
      }
    }
  }
  CMat completeness(d);
  for (const CVec& v : vectors_) completeness += outer(v, v);
  if (completeness.max_abs_diff(CMat::identity(d)) > 1e-9) {
    throw ValidationError("ObservableBasis: vectors do not resolve the identity within 1e-9");
  }
}

DensityMatrix pure_state(const CVec& amps) {
  if (amps.dim() < 2) throw ValidationError("pure_state: dimension must be at least 2");
  const CVec unit = amps.normalized();
  return DensityMatrix::from_matrix(outer(unit, unit));
}

DensityMatrix bloch_pure(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw ValidationError("bloch_pure: theta must lie in [0, pi]");
  }
  if (!std::isfinite(phi)) throw ValidationError("bloch_pure: phi must be finite");
  CVec amps(2);
  amps[0] = Complex(std::cos(theta / 2.0), 0.0);
  amps[1] = std::polar(std::sin(theta / 2.0), phi);
  return pure_state(amps);
}

DensityMatrix maximally_mixed(std::size_t dim) {
  if (dim < 2) throw ValidationError("maximally_mixed: dimension must be at least 2");
  CMat m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = Complex(1.0 / static_cast<double>(dim), 0.0);
  return DensityMatrix::from_matrix(m);
}

DensityMatrix depolarized(const DensityMatrix& pure_qubit, double p) {
  if (pure_qubit.dim() != 2) throw DimensionMismatch("depolarized: defined for qubits only");
  if (!pure_qubit.is_pure()) throw ValidationError("depolarized: input state must be pure");
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("depolarized: p must lie in [0, 1]");
  CMat m = Complex(p, 0.0) * pure_qubit.matrix();
  m(0, 0) += Complex((1.0 - p) / 2.0, 0.0);
  m(1, 1) += Complex((1.0 - p) / 2.0, 0.0);
  return DensityMatrix::from_matrix(m);
}

DensityMatrix mix(const MixtureSpec& spec) {
  if (spec.components.empty()) throw ValidationError("mix: empty mixture");
  if (spec.weights.size() != spec.components.size()) {
    throw ValidationError("mix: weight and component counts differ");
  }
  const std::size_t d = spec.components.front().dim();
  double total = 0.0;
  for (double w : spec.weights) {
    if (w < 0.0) throw ValidationError("mix: weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw ValidationError("mix: weights must sum to 1 within 1e-12");
  }
  CMat acc(d);
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    if (spec.components[i].dim() != d) {
      throw DimensionMismatch("mix: component dimensions differ");
    }
    acc += Complex(spec.weights[i], 0.0) * spec.components[i].matrix();
  }
  return DensityMatrix::from_matrix(acc);
}

ObservableBasis named_basis(const std::string& name, std::size_t dim) {
  if (dim < 2) throw ValidationError("named_basis: dimension must be at least 2");
  if (name == "computational") {
    std::vector<CVec> vecs;
    vecs.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) vecs.push_back(CVec::basis_vector(dim, i));
    return ObservableBasis(std::move(vecs), name);
  }
  if (name == "fourier") {
    const double root = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<CVec> vecs;
    vecs.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      CVec v(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        const double angle = 2.0 * kPi * static_cast<double>(j * k) / static_cast<double>(dim);
        v[j] = std::polar(root, angle);
      }
      vecs.push_back(std::move(v));
    }
    return ObservableBasis(std::move(vecs), name);
  }
  if (name == "pauli-x" || name == "pauli-y") {
    if (dim != 2) throw DimensionMismatch("named_basis: " + name + " is a qubit basis");
    const double r = 1.0 / std::sqrt(2.0);
    const Complex second = (name == "pauli-x") ? Complex(r, 0.0) : Complex(0.0, r);
    std::vector<CVec> vecs;
    vecs.push_back(CVec{Complex(r, 0.0), second});
    vecs.push_back(CVec{Complex(r, 0.0), -second});
    return ObservableBasis(std::move(vecs), name);
  }
  throw ValidationError("named_basis: unknown basis name '" + name + "'");
}

ObservableBasis parametric_qubit_basis(double beta, double gamma) {
  if (!(beta >= 0.0 && beta <= kPi)) {
    throw ValidationError("parametric_qubit_basis: beta must lie in [0, pi]");
  }
  if (!(gamma >= 0.0 && gamma < 2.0 * kPi)) {
    throw ValidationError("parametric_qubit_basis: gamma must lie in [0, 2pi)");
  }
  const double c = std::cos(beta / 2.0);
  const double s = std::sin(beta / 2.0);
  CVec b{Complex(c, 0.0), std::polar(s, gamma)};
  CVec b_perp{-std::polar(s, -gamma), Complex(c, 0.0)};
  std::vector<CVec> vecs;
  vecs.push_back(canonical_phase(std::move(b)));
  vecs.push_back(canonical_phase(std::move(b_perp)));
  return ObservableBasis(std::move(vecs));
}

ObservableBasis real_parameter_basis(double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw ValidationError("real_parameter_basis: a must lie in [0, 1]");
  }
  const double rest = std::sqrt(std::max(0.0, 1.0 - a * a));
  CVec b{Complex(a, 0.0), Complex(rest, 0.0)};
  CVec b_perp{Complex(rest, 0.0), Complex(-a, 0.0)};
  std::vector<CVec> vecs;
  vecs.push_back(canonical_phase(std::move(b)));
  vecs.push_back(canonical_phase(std::move(b_perp)));
  return ObservableBasis(std::move(vecs));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::from_matrix(tensor(a.matrix(), b.matrix()));
}

ObservableBasis tensor_product(const ObservableBasis& a, const ObservableBasis& b) {
  std::vector<CVec> vecs;
  vecs.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) vecs.push_back(tensor(a[i], b[j]));
  std::string label;
  if (!a.label().empty() || !b.label().empty()) label = a.label() + "*" + b.label();
  return ObservableBasis(std::move(vecs), std::move(label));
}

}  // namespace qri
