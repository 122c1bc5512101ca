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

#include "qri/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qri {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw DimensionMismatch(std::string(where) + ": dimensions " + std::to_string(a) +
                            " and " + std::to_string(b) + " do not match");
  }
}

}  // namespace

CVec CVec::basis_vector(std::size_t dim, std::size_t index) {
  if (index >= dim) throw ValidationError("basis_vector: index out of range");
  CVec v(dim);
  v[index] = Complex(1.0, 0.0);
  return v;
}

double CVec::norm() const {
  double sum = 0.0;
  for (const Complex& c : entries_) sum += std::norm(c);
  return std::sqrt(sum);
}

CVec CVec::normalized() const {
  double n = norm();
  if (n <= 1e-12) throw ValidationError("normalized: vector norm is zero");
  CVec out = *this;
  out *= Complex(1.0 / n, 0.0);
  return out;
}

CVec& CVec::operator+=(const CVec& rhs) {
  require_same_dim(dim(), rhs.dim(), "CVec::operator+=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

CVec& CVec::operator-=(const CVec& rhs) {
  require_same_dim(dim(), rhs.dim(), "CVec::operator-=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

CVec& CVec::operator*=(Complex scale) {
  for (Complex& c : entries_) c *= scale;
  return *this;
}

CVec operator+(CVec lhs, const CVec& rhs) { return lhs += rhs; }
CVec operator-(CVec lhs, const CVec& rhs) { return lhs -= rhs; }
CVec operator*(Complex scale, CVec v) { return v *= scale; }

CMat CMat::identity(std::size_t dim) {
  CMat m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = Complex(1.0, 0.0);
  return m;
}

CMat CMat::adjoint() const {
  CMat out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex CMat::trace() const {
  Complex t(0.0, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double CMat::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& c : entries_) sum += std::norm(c);
  return std::sqrt(sum);
}

double CMat::max_abs_diff(const CMat& other) const {
  require_same_dim(dim_, other.dim_, "CMat::max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
  return worst;
}

bool CMat::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
    }
  }
  return true;
}

CMat& CMat::operator+=(const CMat& rhs) {
  require_same_dim(dim_, rhs.dim_, "CMat::operator+=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

CMat& CMat::operator-=(const CMat& rhs) {
  require_same_dim(dim_, rhs.dim_, "CMat::operator-=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

CMat& CMat::operator*=(Complex scale) {
  for (Complex& c : entries_) c *= scale;
  return *this;
}

CMat operator+(CMat lhs, const CMat& rhs) { return lhs += rhs; }
CMat operator-(CMat lhs, const CMat& rhs) { return lhs -= rhs; }
CMat operator*(Complex scale, CMat m) { return m *= scale; }

CMat operator*(const CMat& lhs, const CMat& rhs) {
  require_same_dim(lhs.dim(), rhs.dim(), "CMat::operator*");
  const std::size_t n = lhs.dim();
  CMat out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex lrk = lhs(r, k);
      if (lrk == Complex(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += lrk * rhs(k, c);
    }
  }
  return out;
}

CVec operator*(const CMat& m, const CVec& v) {
  require_same_dim(m.dim(), v.dim(), "CMat * CVec");
  const std::size_t n = m.dim();
  CVec out(n);
  for (std::size_t r = 0; r < n; ++r) {
    Complex acc(0.0, 0.0);
    for (std::size_t c = 0; c < n; ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Complex inner(const CVec& u, const CVec& v) {
  require_same_dim(u.dim(), v.dim(), "inner");
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < u.dim(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

CMat outer(const CVec& u, const CVec& v) {
  require_same_dim(u.dim(), v.dim(), "outer");
  const std::size_t n = u.dim();
  CMat out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = u[r] * std::conj(v[c]);
  return out;
}

std::vector<CVec> gram_schmidt(const std::vector<CVec>& vectors) {
  if (vectors.empty()) throw ValidationError("gram_schmidt: empty input");
  const std::size_t dim = vectors.front().dim();
  if (vectors.size() > dim) {
    throw ValidationError("gram_schmidt: more vectors than the dimension allows");
  }
  std::vector<CVec> out;
  out.reserve(vectors.size());
  for (const CVec& v : vectors) {
    require_same_dim(v.dim(), dim, "gram_schmidt");
    CVec w = v;
    // Two projection passes: one pass of modified Gram-Schmidt can leave
    // overlaps near sqrt(eps) for ill-angled inputs; the second pass removes
    // them down to machine precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (const CVec& u : out) w -= inner(u, w) * u;
    }
    double residual = w.norm();
    if (residual <= 1e-10) {
      throw ValidationError("gram_schmidt: vectors are linearly dependent (residual " +
                            std::to_string(residual) + ")");
    }
    w *= Complex(1.0 / residual, 0.0);
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

double offdiag_frobenius(const CMat& a) {
  const std::size_t n = a.dim();
  double sum = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c) sum += std::norm(a(r, c));
  return std::sqrt(sum);
}

}  // namespace

EigResult hermitian_eig(const CMat& m) {
  if (m.dim() == 0) throw ValidationError("hermitian_eig: empty matrix");
  if (!m.is_hermitian(1e-10)) {
    throw ValidationError("hermitian_eig: matrix is not Hermitian within 1e-10");
  }
  const std::size_t n = m.dim();

  // Symmetrize away the sub-tolerance asymmetry so rotations see an exactly
  // Hermitian operand.
  CMat a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

  CMat vecs = CMat::identity(n);

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (offdiag_frobenius(a) < 1e-13) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        // Smaller-magnitude root of t^2 - 2*tau*t - 1 = 0 keeps the rotation
        // angle at most pi/4, which is what makes cyclic Jacobi stable.
        const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(tau * tau + 1.0))
                                      : 1.0 / (-tau + std::sqrt(tau * tau + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex phase = apq / r;

        // Unitary plane rotation V on columns (p, q):
        //   V[p][p] = c            V[p][q] = -phase * s
        //   V[q][p] = conj(phase)*s  V[q][q] = c
        // Applied as a <- V^dagger a V, vecs <- vecs V.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp + std::conj(phase) * s * akq;
          a(k, q) = -phase * s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + phase * s * aqk;
          a(q, k) = -std::conj(phase) * s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = vecs(k, p);
          const Complex vkq = vecs(k, q);
          vecs(k, p) = c * vkp + std::conj(phase) * s * vkq;
          vecs(k, q) = -phase * s * vkp + c * vkq;
        }
        // Rotation leaves conjugate-pair residue of order eps in (p, q).
        a(p, q) = Complex(0.0, 0.0);
        a(q, p) = Complex(0.0, 0.0);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&a](std::size_t lhs, std::size_t rhs) {
    return a(lhs, lhs).real() > a(rhs, rhs).real();
  });

  EigResult result;
  result.values.reserve(n);
  result.vectors.reserve(n);
  for (std::size_t k : order) {
    result.values.push_back(a(k, k).real());
    CVec v(n);
    for (std::size_t row = 0; row < n; ++row) v[row] = vecs(row, k);
    result.vectors.push_back(std::move(v));
  }
  return result;
}

CMat tensor(const CMat& a, const CMat& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  CMat out(na * nb);
  for (std::size_t r1 = 0; r1 < na; ++r1)
    for (std::size_t c1 = 0; c1 < na; ++c1) {
      const Complex arc = a(r1, c1);
      for (std::size_t r2 = 0; r2 < nb; ++r2)
        for (std::size_t c2 = 0; c2 < nb; ++c2)
          out(r1 * nb + r2, c1 * nb + c2) = arc * b(r2, c2);
    }
  return out;
}

CVec tensor(const CVec& a, const CVec& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  CVec out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) out[i * nb + j] = a[i] * b[j];
  return out;
}

CMat haar_unitary(std::size_t dim, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return haar_unitary(dim, rng);
}

CMat haar_unitary(std::size_t dim, SplitMix64& rng) {
  if (dim < 2) throw ValidationError("haar_unitary: dimension must be at least 2");
  std::vector<CVec> columns;
  columns.reserve(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    CVec col(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      const double re = rng.next_gaussian();
      const double im = rng.next_gaussian();
      col[r] = Complex(re, im);
    }
    columns.push_back(std::move(col));
  }
  std::vector<CVec> ortho = gram_schmidt(columns);
  CMat u(dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) u(r, c) = ortho[c][r];
  return u;
}

}  // namespace qri
