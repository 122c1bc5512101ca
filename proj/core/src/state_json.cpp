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

#include "qri/state_json.hpp"

#include <utility>
#include <vector>

#include <json.hpp>

namespace qri {

namespace {

using nlohmann::json;

json parse_document(const std::string& text, const char* what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw ValidationError(std::string(what) + ": not a JSON object");
  }
  return doc;
}

double number_field(const json& doc, const char* key, const char* what) {
  if (!doc.contains(key) || !doc[key].is_number()) {
    throw ValidationError(std::string(what) + ": missing numeric field '" + key + "'");
  }
  return doc[key].get<double>();
}

Complex complex_entry(const json& pair, const char* what) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
    throw ValidationError(std::string(what) + ": complex entries are [re, im] pairs");
  }
  return Complex(pair[0].get<double>(), pair[1].get<double>());
}

CVec complex_vector(const json& arr, const char* what) {
  if (!arr.is_array() || arr.empty()) {
    throw ValidationError(std::string(what) + ": expected a nonempty array");
  }
  CVec v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) v[i] = complex_entry(arr[i], what);
  return v;
}

}  // namespace

DensityMatrix parse_state_json(const std::string& text) {
  const json doc = parse_document(text, "state");
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw ValidationError("state: missing string field 'kind'");
  }
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "pure") {
    if (!doc.contains("amps")) throw ValidationError("state: pure needs 'amps'");
    return pure_state(complex_vector(doc["amps"], "state.amps"));
  }
  if (kind == "mixed") {
    if (!doc.contains("matrix") || !doc["matrix"].is_array() || doc["matrix"].empty()) {
      throw ValidationError("state: mixed needs a nonempty 'matrix'");
    }
    const json& rows = doc["matrix"];
    const std::size_t d = rows.size();
    CMat m(d);
    for (std::size_t r = 0; r < d; ++r) {
      if (!rows[r].is_array() || rows[r].size() != d) {
        throw ValidationError("state.matrix: must be square");
      }
      for (std::size_t c = 0; c < d; ++c) m(r, c) = complex_entry(rows[r][c], "state.matrix");
    }
    return DensityMatrix::from_matrix(m);
  }
  if (kind == "bloch") {
    return bloch_pure(number_field(doc, "theta", "state"), number_field(doc, "phi", "state"));
  }
  if (kind == "depolarized") {
    const DensityMatrix pure =
        bloch_pure(number_field(doc, "theta", "state"), number_field(doc, "phi", "state"));
    return depolarized(pure, number_field(doc, "p", "state"));
  }
  throw ValidationError("state: unknown kind '" + kind + "'");
}

ObservableBasis parse_observable_json(const std::string& text, std::size_t state_dim) {
  const json doc = parse_document(text, "observable");
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ValidationError("observable: 'name' must be a string");
    return named_basis(doc["name"].get<std::string>(), state_dim);
  }
  if (doc.contains("beta") || doc.contains("gamma")) {
    if (state_dim != 2) {
      throw DimensionMismatch("observable: parametric basis is two-dimensional");
    }
    return parametric_qubit_basis(number_field(doc, "beta", "observable"),
                                  number_field(doc, "gamma", "observable"));
  }
  if (doc.contains("a")) {
    if (state_dim != 2) {
      throw DimensionMismatch("observable: real-parameter basis is two-dimensional");
    }
    return real_parameter_basis(number_field(doc, "a", "observable"));
  }
  if (doc.contains("vectors")) {
    const json& arr = doc["vectors"];
    if (!arr.is_array() || arr.empty()) {
      throw ValidationError("observable: 'vectors' must be a nonempty array");
    }
    std::vector<CVec> vecs;
    vecs.reserve(arr.size());
    for (const json& item : arr) vecs.push_back(complex_vector(item, "observable.vectors"));
    ObservableBasis basis(std::move(vecs));
    if (basis.dim() != state_dim) {
      throw DimensionMismatch("observable: basis dimension does not match the state");
    }
    return basis;
  }
  throw ValidationError("observable: expected 'name', 'beta'/'gamma', 'a', or 'vectors'");
}

}  // namespace qri
