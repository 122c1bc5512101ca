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

#include <doctest.h>

#include <cmath>

#include "qri/state_json.hpp"
#include "qri/states.hpp"

using qri::CMat;
using qri::Complex;
using qri::CVec;
using qri::DensityMatrix;
using qri::ObservableBasis;

namespace {

constexpr double kPi = 3.14159265358979323846;

/** Structural checks every density matrix must satisfy. */
void check_density_invariants(const DensityMatrix& rho) {
  CHECK(rho.matrix().is_hermitian(1e-10));
  CHECK(std::abs(rho.matrix().trace() - Complex(1, 0)) <= 1e-10);
  const qri::EigResult eig = qri::hermitian_eig(rho.matrix());
  CHECK(eig.values.back() >= -1e-10);
}

}  // namespace

TEST_SUITE("states") {

TEST_CASE("pure_state normalizes amplitudes and rejects zero input") {
  const DensityMatrix rho = qri::pure_state(CVec{Complex(3, 0), Complex(0, 4)});
  check_density_invariants(rho);
  CHECK(std::abs(rho.matrix()(0, 0) - Complex(0.36, 0)) < 1e-12);
  CHECK(std::abs(rho.matrix()(1, 1) - Complex(0.64, 0)) < 1e-12);
  CHECK(rho.is_pure());

  CHECK_THROWS_AS((void)qri::pure_state(CVec{Complex(0, 0), Complex(0, 0)}),
                  qri::ValidationError);
}

TEST_CASE("bloch_pure hits the poles and the equator") {
  const DensityMatrix north = qri::bloch_pure(0.0, 0.0);
  CHECK(std::abs(north.matrix()(0, 0) - Complex(1, 0)) < 1e-14);

  const DensityMatrix south = qri::bloch_pure(kPi, 1.3);
  CHECK(std::abs(south.matrix()(1, 1) - Complex(1, 0)) < 1e-14);

  const DensityMatrix plus = qri::bloch_pure(kPi / 2, 0.0);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      CHECK(std::abs(plus.matrix()(r, c) - Complex(0.5, 0)) < 1e-12);

  CHECK_THROWS_AS((void)qri::bloch_pure(-0.1, 0.0), qri::ValidationError);
  CHECK_THROWS_AS((void)qri::bloch_pure(kPi + 0.1, 0.0), qri::ValidationError);
}

TEST_CASE("bloch_pure agrees with explicit amplitudes") {
  for (double theta : {0.3, 1.1, 2.7}) {
    for (double phi : {0.0, 0.9, 4.4}) {
      const DensityMatrix via_bloch = qri::bloch_pure(theta, phi);
      CVec amps(2);
      amps[0] = Complex(std::cos(theta / 2), 0);
      amps[1] = std::polar(std::sin(theta / 2), phi);
      CHECK(via_bloch.matrix().max_abs_diff(qri::pure_state(amps).matrix()) < 1e-14);
    }
  }
}

TEST_CASE("maximally_mixed is I/d") {
  for (std::size_t d : {2, 3, 5}) {
    const DensityMatrix rho = qri::maximally_mixed(d);
    check_density_invariants(rho);
    CHECK(std::abs(rho.matrix()(0, 0) - Complex(1.0 / d, 0)) < 1e-15);
    CHECK(std::abs(rho.matrix()(0, 1)) < 1e-15);
  }
  CHECK_THROWS_AS((void)qri::maximally_mixed(1), qri::ValidationError);
}

TEST_CASE("depolarized endpoints and spectrum") {
  const DensityMatrix psi = qri::bloch_pure(1.1, 0.4);
  CHECK(qri::depolarized(psi, 1.0).matrix().max_abs_diff(psi.matrix()) < 1e-14);
  CHECK(qri::depolarized(psi, 0.0).matrix().max_abs_diff(qri::maximally_mixed(2).matrix()) <
        1e-14);

  qri::SplitMix64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const double theta = rng.next_double() * kPi;
    const double phi = rng.next_double() * 2 * kPi;
    const double p = rng.next_double();
    const qri::EigResult eig =
        qri::hermitian_eig(qri::depolarized(qri::bloch_pure(theta, phi), p).matrix());
    CHECK(std::abs(eig.values[0] - (1 + p) / 2) <= 1e-12);
    CHECK(std::abs(eig.values[1] - (1 - p) / 2) <= 1e-12);
  }

  CHECK_THROWS_AS((void)qri::depolarized(psi, 1.5), qri::ValidationError);
  CHECK_THROWS_AS((void)qri::depolarized(qri::maximally_mixed(2), 0.5), qri::ValidationError);
}

TEST_CASE("mix blends states and validates weights") {
  const DensityMatrix plus = qri::bloch_pure(kPi / 2, 0.0);
  const DensityMatrix minus = qri::bloch_pure(kPi / 2, kPi);

  qri::MixtureSpec spec;
  spec.weights = {0.3, 0.7};
  spec.components = {plus, minus};
  const DensityMatrix blend = qri::mix(spec);
  check_density_invariants(blend);
  CHECK(std::abs(blend.matrix()(0, 0) - Complex(0.5, 0)) < 1e-12);
  CHECK(std::abs(blend.matrix()(0, 1) - Complex(-0.2, 0)) < 1e-12);

  spec.weights = {0.3, 0.6};
  CHECK_THROWS_AS((void)qri::mix(spec), qri::ValidationError);
  spec.weights = {-0.1, 1.1};
  CHECK_THROWS_AS((void)qri::mix(spec), qri::ValidationError);
  spec.weights = {0.5, 0.5};
  spec.components = {plus, qri::maximally_mixed(3)};
  CHECK_THROWS_AS((void)qri::mix(spec), qri::DimensionMismatch);
}

TEST_CASE("named_basis covers the documented names") {
  const ObservableBasis comp = qri::named_basis("computational", 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(std::abs(comp[i][i] - Complex(1, 0)) < 1e-15);

  const double r = 1.0 / std::sqrt(2.0);
  const ObservableBasis px = qri::named_basis("pauli-x", 2);
  CHECK(std::abs(px[0][1] - Complex(r, 0)) < 1e-14);
  CHECK(std::abs(px[1][1] - Complex(-r, 0)) < 1e-14);

  const ObservableBasis py = qri::named_basis("pauli-y", 2);
  CHECK(std::abs(py[0][1] - Complex(0, r)) < 1e-14);
  CHECK(std::abs(py[1][1] - Complex(0, -r)) < 1e-14);

  CHECK_THROWS_AS((void)qri::named_basis("pauli-z", 2), qri::ValidationError);
  CHECK_THROWS_AS((void)qri::named_basis("pauli-x", 3), qri::DimensionMismatch);
}

TEST_CASE("fourier basis is unbiased against the computational one") {
  for (std::size_t d : {2, 3, 4, 5}) {
    const ObservableBasis f = qri::named_basis("fourier", d);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j)
        CHECK(std::abs(std::norm(f[k][j]) - 1.0 / static_cast<double>(d)) < 1e-12);
  }
}

TEST_CASE("parametric qubit basis matches its defining formula") {
  const double beta = 1.2;
  const double gamma = 2.5;
  const ObservableBasis basis = qri::parametric_qubit_basis(beta, gamma);
  CHECK(std::abs(basis[0][0] - Complex(std::cos(beta / 2), 0)) < 1e-14);
  CHECK(std::abs(basis[0][1] - std::polar(std::sin(beta / 2), gamma)) < 1e-14);
  // The second vector is phase-normalized; compare projectors instead.
  const CVec raw_perp{-std::polar(std::sin(beta / 2), -gamma), Complex(std::cos(beta / 2), 0)};
  CHECK(outer(basis[1], basis[1]).max_abs_diff(outer(raw_perp, raw_perp)) < 1e-14);
  CHECK(basis[1][0].imag() == 0.0);
  CHECK(basis[1][0].real() >= 0.0);

  CHECK_THROWS_AS((void)qri::parametric_qubit_basis(-0.1, 0.0), qri::ValidationError);
  CHECK_THROWS_AS((void)qri::parametric_qubit_basis(0.5, 2 * kPi), qri::ValidationError);
}

TEST_CASE("real-parameter basis spans a at the endpoints") {
  const ObservableBasis comp_like = qri::real_parameter_basis(1.0);
  CHECK(std::abs(comp_like[0][0] - Complex(1, 0)) < 1e-14);
  CHECK(std::abs(comp_like[1][1] - Complex(1, 0)) < 1e-14);  // phase-normalized

  const ObservableBasis swapped = qri::real_parameter_basis(0.0);
  CHECK(std::abs(swapped[0][1] - Complex(1, 0)) < 1e-14);
  CHECK(std::abs(swapped[1][0] - Complex(1, 0)) < 1e-14);

  const double a = 0.6;
  const ObservableBasis mid = qri::real_parameter_basis(a);
  CHECK(std::abs(mid[0][0] - Complex(a, 0)) < 1e-14);
  CHECK(std::abs(mid[0][1] - Complex(0.8, 0)) < 1e-14);

  CHECK_THROWS_AS((void)qri::real_parameter_basis(1.2), qri::ValidationError);
}

TEST_CASE("ObservableBasis rejects non-orthonormal and incomplete sets") {
  std::vector<CVec> skewed{CVec{Complex(1, 0), Complex(0, 0)},
                           CVec{Complex(0.6, 0), Complex(0.8, 0)}};
  CHECK_THROWS_AS((void)ObservableBasis(std::move(skewed)), qri::ValidationError);

  std::vector<CVec> short_set{CVec{Complex(1, 0), Complex(0, 0), Complex(0, 0)},
                              CVec{Complex(0, 0), Complex(1, 0), Complex(0, 0)}};
  CHECK_THROWS_AS((void)ObservableBasis(std::move(short_set)), qri::ValidationError);
}

TEST_CASE("DensityMatrix::from_matrix rejects bad operators") {
  CMat not_hermitian(2);
  not_hermitian(0, 0) = Complex(0.5, 0);
  not_hermitian(1, 1) = Complex(0.5, 0);
  not_hermitian(0, 1) = Complex(0.1, 0.2);
  not_hermitian(1, 0) = Complex(0.1, 0.2);  // conjugate missing
  CHECK_THROWS_AS((void)DensityMatrix::from_matrix(not_hermitian), qri::ValidationError);

  CMat wrong_trace(2);
  wrong_trace(0, 0) = Complex(0.7, 0);
  wrong_trace(1, 1) = Complex(0.7, 0);
  CHECK_THROWS_AS((void)DensityMatrix::from_matrix(wrong_trace), qri::ValidationError);

  CMat negative(2);
  negative(0, 0) = Complex(1.2, 0);
  negative(1, 1) = Complex(-0.2, 0);
  CHECK_THROWS_AS((void)DensityMatrix::from_matrix(negative), qri::ValidationError);
}

TEST_CASE("tensor_product of states and bases keeps structure") {
  const DensityMatrix rho = qri::tensor_product(qri::bloch_pure(0, 0), qri::bloch_pure(kPi, 0));
  check_density_invariants(rho);
  CHECK(std::abs(rho.matrix()(1, 1) - Complex(1, 0)) < 1e-14);  // |0> (x) |1>

  const ObservableBasis comp4 =
      qri::tensor_product(qri::named_basis("computational", 2), qri::named_basis("computational", 2));
  CHECK(comp4.dim() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(comp4[i][i] - Complex(1, 0)) < 1e-14);
}

TEST_CASE("state JSON accepts all four kinds") {
  const DensityMatrix pure = qri::parse_state_json(R"({"kind":"pure","amps":[[1,0],[0,0]]})");
  CHECK(std::abs(pure.matrix()(0, 0) - Complex(1, 0)) < 1e-14);

  const DensityMatrix mixed = qri::parse_state_json(
      R"({"kind":"mixed","matrix":[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]})");
  CHECK(mixed.matrix().max_abs_diff(qri::maximally_mixed(2).matrix()) < 1e-14);

  const DensityMatrix bloch = qri::parse_state_json(R"({"kind":"bloch","theta":0.7,"phi":0.2})");
  CHECK(bloch.matrix().max_abs_diff(qri::bloch_pure(0.7, 0.2).matrix()) < 1e-14);

  const DensityMatrix dep =
      qri::parse_state_json(R"({"kind":"depolarized","theta":0.7,"phi":0.2,"p":0.4})");
  CHECK(dep.matrix().max_abs_diff(qri::depolarized(qri::bloch_pure(0.7, 0.2), 0.4).matrix()) <
        1e-14);
}

TEST_CASE("state JSON rejects malformed documents") {
  CHECK_THROWS_AS((void)qri::parse_state_json("not json"), qri::ValidationError);
  CHECK_THROWS_AS((void)qri::parse_state_json(R"({"kind":"pure"})"), qri::ValidationError);
  CHECK_THROWS_AS((void)qri::parse_state_json(R"({"kind":"wigner"})"), qri::ValidationError);
  CHECK_THROWS_AS((void)qri::parse_state_json(R"({"kind":"bloch","theta":9,"phi":0})"),
                  qri::ValidationError);
  // Valid JSON, invalid operator: the density check fires.
  CHECK_THROWS_AS((void)qri::parse_state_json(
                      R"({"kind":"mixed","matrix":[[[0.9,0],[0,0]],[[0,0],[0.9,0]]]})"),
                  qri::ValidationError);
}

TEST_CASE("observable JSON resolves names, parameters and explicit vectors") {
  const ObservableBasis py = qri::parse_observable_json(R"({"name":"pauli-y"})", 2);
  CHECK(py.label() == "pauli-y");

  const ObservableBasis param = qri::parse_observable_json(R"({"beta":1.2,"gamma":0.4})", 2);
  CHECK(std::abs(param[0][0] - Complex(std::cos(0.6), 0)) < 1e-14);

  const ObservableBasis real_param = qri::parse_observable_json(R"({"a":0.7})", 2);
  CHECK(std::abs(real_param[0][0] - Complex(0.7, 0)) < 1e-14);

  const double r = 1.0 / std::sqrt(2.0);
  const ObservableBasis listed = qri::parse_observable_json(
      R"({"vectors":[[[0.70710678118654752,0],[0.70710678118654752,0]],
                     [[0.70710678118654752,0],[-0.70710678118654752,0]]]})",
      2);
  CHECK(std::abs(listed[0][0] - Complex(r, 0)) < 1e-10);

  CHECK_THROWS_AS((void)qri::parse_observable_json(R"({"name":"pauli-y"})", 3),
                  qri::DimensionMismatch);
  CHECK_THROWS_AS((void)qri::parse_observable_json(R"({"beta":1.2,"gamma":0.4})", 3),
                  qri::DimensionMismatch);
  CHECK_THROWS_AS((void)qri::parse_observable_json(R"({"foo":1})", 2), qri::ValidationError);
  CHECK_THROWS_AS((void)qri::parse_observable_json(
                      R"({"vectors":[[[1,0],[0,0]],[[1,0],[0,0]]]})", 2),
                  qri::ValidationError);
}

}  // TEST_SUITE
