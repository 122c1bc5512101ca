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

#include "qri/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "qri/parallel.hpp"
#include "qri/version.hpp"

namespace qri {

namespace {

constexpr double kPi = 3.14159265358979323846;

double axis_value(const Axis& axis, int k) {
  if (axis.steps == 1) return axis.min;
  return axis.min + (axis.max - axis.min) * static_cast<double>(k) /
                        static_cast<double>(axis.steps - 1);
}

std::size_t total_rows(const std::vector<Axis>& axes) {
  std::size_t total = 1;
  for (const Axis& axis : axes) total *= static_cast<std::size_t>(axis.steps);
  return total;
}

/** Decompose a flat row index into per-axis indices, last axis fastest. */
std::vector<int> axis_indices(const std::vector<Axis>& axes, std::size_t row) {
  std::vector<int> idx(axes.size());
  for (std::size_t a = axes.size(); a-- > 0;) {
    const auto steps = static_cast<std::size_t>(axes[a].steps);
    idx[a] = static_cast<int>(row % steps);
    row /= steps;
  }
  return idx;
}

void check_steps(int steps, const char* where) {
  if (steps < 2) throw ValidationError(std::string(where) + ": need at least 2 steps per axis");
}

}  // namespace

std::string format_sig12(double v) {
  if (v == 0.0) return "0";  // merge the signed zeros
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

void write_csv(const SweepGrid& grid, std::ostream& out) {
  for (const auto& [key, value] : grid.meta) out << "# " << key << "=" << value << "\n";
  bool first = true;
  for (const Axis& axis : grid.axes) {
    out << (first ? "" : ",") << axis.name;
    first = false;
  }
  for (const std::string& name : grid.value_names) {
    out << (first ? "" : ",") << name;
    first = false;
  }
  out << "\n";
  for (const std::vector<double>& row : grid.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ",";
      out << format_sig12(row[i]);
    }
    out << "\n";
  }
}

void write_json(const SweepGrid& grid, std::ostream& out) {
  nlohmann::ordered_json doc;
  auto round12 = [](double v) { return std::stod(format_sig12(v)); };
  nlohmann::ordered_json meta;
  for (const auto& [key, value] : grid.meta) meta[key] = value;
  doc["meta"] = std::move(meta);
  doc["axes"] = nlohmann::ordered_json::array();
  for (const Axis& axis : grid.axes) {
    doc["axes"].push_back({{"name", axis.name},
                           {"min", round12(axis.min)},
                           {"max", round12(axis.max)},
                           {"steps", axis.steps}});
  }
  doc["columns"] = nlohmann::ordered_json::array();
  for (const Axis& axis : grid.axes) doc["columns"].push_back(axis.name);
  for (const std::string& name : grid.value_names) doc["columns"].push_back(name);
  doc["rows"] = nlohmann::ordered_json::array();
  for (const std::vector<double>& row : grid.rows) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
    for (double v : row) jrow.push_back(round12(v));
    doc["rows"].push_back(std::move(jrow));
  }
  out << doc.dump(2) << "\n";
}

SweepGrid fig1_sweep(int steps, int threads) {
  check_steps(steps, "fig1_sweep");
  SweepGrid grid;
  grid.axes = {Axis{"theta", 0.0, kPi, steps}};
  grid.value_names = {"q", "c"};
  grid.meta = {{"figure", "fig1"},
               {"version", kVersion},
               {"base", "2"},
               {"steps", std::to_string(steps)}};
  const ObservableBasis comp = named_basis("computational", 2);
  const ObservableBasis pauli_y = named_basis("pauli-y", 2);
  grid.rows.assign(total_rows(grid.axes), {});
  parallel_for(grid.rows.size(), threads, [&](std::size_t r) {
    const double theta = axis_value(grid.axes[0], static_cast<int>(r));
    const DensityMatrix rho = bloch_pure(theta, 0.0);
    const double q = quantumness(rho, comp, pauli_y);
    const double c = coherence_rel_ent(rho, comp);
    grid.rows[r] = {theta, q, c};
  });
  return grid;
}

double fig2_quantumness(double alpha, double a, double b) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ValidationError("fig2_quantumness: alpha must lie in [0, 1]");
  }
  CVec amps(2);
  amps[0] = Complex(alpha, 0.0);
  amps[1] = Complex(std::sqrt(std::max(0.0, 1.0 - alpha * alpha)), 0.0);
  const DensityMatrix rho = pure_state(amps);
  return quantumness(rho, real_parameter_basis(a), real_parameter_basis(b));
}

SweepGrid fig2_sweep(int steps, int threads) {
  check_steps(steps, "fig2_sweep");
  SweepGrid grid;
  grid.axes = {Axis{"alpha", 0.0, 1.0, steps}, Axis{"a", 0.0, 1.0, steps},
               Axis{"b", 0.0, 1.0, steps}};
  grid.value_names = {"q"};
  grid.meta = {{"figure", "fig2"},
               {"version", kVersion},
               {"base", "2"},
               {"steps", std::to_string(steps)}};
  grid.rows.assign(total_rows(grid.axes), {});
  parallel_for(grid.rows.size(), threads, [&](std::size_t r) {
    const std::vector<int> idx = axis_indices(grid.axes, r);
    const double alpha = axis_value(grid.axes[0], idx[0]);
    const double a = axis_value(grid.axes[1], idx[1]);
    const double b = axis_value(grid.axes[2], idx[2]);
    grid.rows[r] = {alpha, a, b, fig2_quantumness(alpha, a, b)};
  });
  return grid;
}

SweepGrid fig3_sweep(int theta_steps, int phi_steps, int grid_n, int refine_iters,
                     std::uint64_t seed, int threads) {
  check_steps(theta_steps, "fig3_sweep");
  check_steps(phi_steps, "fig3_sweep");
  SweepGrid grid;
  grid.axes = {Axis{"theta", 0.0, kPi, theta_steps}, Axis{"phi", 0.0, 2.0 * kPi, phi_steps}};
  grid.value_names = {"q_max"};
  grid.meta = {{"figure", "fig3"},
               {"version", kVersion},
               {"base", "2"},
               {"seed", std::to_string(seed)},
               {"theta_steps", std::to_string(theta_steps)},
               {"phi_steps", std::to_string(phi_steps)},
               {"grid_n", std::to_string(grid_n)},
               {"refine_iters", std::to_string(refine_iters)}};
  const ObservableBasis comp = named_basis("computational", 2);
  grid.rows.assign(total_rows(grid.axes), {});
  parallel_for(grid.rows.size(), threads, [&](std::size_t r) {
    const std::vector<int> idx = axis_indices(grid.axes, r);
    const double theta = axis_value(grid.axes[0], idx[0]);
    const double phi = axis_value(grid.axes[1], idx[1]);
    const DensityMatrix rho = bloch_pure(theta, phi);
    const MaxQResult res = max_q_over_b(rho, comp, grid_n, refine_iters, LogBase::two, seed, 1);
    grid.rows[r] = {theta, phi, res.q_max};
  });
  return grid;
}

SweepGrid fig4_sweep(int theta_steps, int p_steps, int grid_n, int refine_iters,
                     std::uint64_t seed, int threads) {
  check_steps(theta_steps, "fig4_sweep");
  check_steps(p_steps, "fig4_sweep");
  SweepGrid grid;
  grid.axes = {Axis{"theta", 0.0, kPi, theta_steps}, Axis{"p", 0.0, 1.0, p_steps}};
  grid.value_names = {"q_max"};
  grid.meta = {{"figure", "fig4"},
               {"version", kVersion},
               {"base", "2"},
               {"seed", std::to_string(seed)},
               {"theta_steps", std::to_string(theta_steps)},
               {"p_steps", std::to_string(p_steps)},
               {"grid_n", std::to_string(grid_n)},
               {"refine_iters", std::to_string(refine_iters)}};
  const ObservableBasis comp = named_basis("computational", 2);
  grid.rows.assign(total_rows(grid.axes), {});
  parallel_for(grid.rows.size(), threads, [&](std::size_t r) {
    const std::vector<int> idx = axis_indices(grid.axes, r);
    const double theta = axis_value(grid.axes[0], idx[0]);
    const double p = axis_value(grid.axes[1], idx[1]);
    const DensityMatrix rho = depolarized(bloch_pure(theta, 0.0), p);
    const MaxQResult res = max_q_over_b(rho, comp, grid_n, refine_iters, LogBase::two, seed, 1);
    grid.rows[r] = {theta, p, res.q_max};
  });
  return grid;
}

DensityMatrix random_pure(std::size_t dim, SplitMix64& rng) {
  CVec amps(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    amps[i] = Complex(rng.next_gaussian(), rng.next_gaussian());
  }
  return pure_state(amps);
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, SplitMix64& rng) {
  if (rank < 1 || rank > dim) throw ValidationError("random_density: rank out of range");
  CMat acc(dim);
  for (std::size_t k = 0; k < rank; ++k) {
    CVec col(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      col[i] = Complex(rng.next_gaussian(), rng.next_gaussian());
    }
    acc += outer(col, col);
  }
  const double tr = acc.trace().real();
  acc *= Complex(1.0 / tr, 0.0);
  // Hermitize: outer-product sums pick up eps-level asymmetry.
  CMat sym(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) sym(r, c) = 0.5 * (acc(r, c) + std::conj(acc(c, r)));
  for (std::size_t i = 0; i < dim; ++i) sym(i, i) = Complex(sym(i, i).real(), 0.0);
  return DensityMatrix::from_matrix(sym);
}

ObservableBasis random_basis(std::size_t dim, SplitMix64& rng) {
  const CMat u = haar_unitary(dim, rng);
  std::vector<CVec> cols;
  cols.reserve(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    CVec col(dim);
    for (std::size_t r = 0; r < dim; ++r) col[r] = u(r, c);
    cols.push_back(std::move(col));
  }
  return ObservableBasis(std::move(cols));
}

std::string axiom_name(AxiomId id) {
  switch (id) {
    case AxiomId::q1: return "Q1";
    case AxiomId::q2: return "Q2";
    case AxiomId::q3: return "Q3";
    case AxiomId::q4: return "Q4";
    case AxiomId::comp: return "COMP";
    case AxiomId::finite: return "FINITE";
    case AxiomId::marginal_note: return "MARGINAL-NOTE";
  }
  return "?";
}

std::optional<AxiomId> parse_axiom_id(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "q1") return AxiomId::q1;
  if (lower == "q2") return AxiomId::q2;
  if (lower == "q3") return AxiomId::q3;
  if (lower == "q4") return AxiomId::q4;
  if (lower == "comp") return AxiomId::comp;
  if (lower == "finite") return AxiomId::finite;
  if (lower == "marginal-note" || lower == "marginal_note") return AxiomId::marginal_note;
  return std::nullopt;
}

double default_axiom_tolerance(AxiomId id) {
  switch (id) {
    case AxiomId::q1: return 1e-10;
    case AxiomId::q2: return 1e-10;
    case AxiomId::q3: return 1e-10;
    case AxiomId::q4: return 1e-9;
    case AxiomId::comp: return 1e-9;
    case AxiomId::finite: return 0.0;
    case AxiomId::marginal_note: return 1e-12;
  }
  return 0.0;
}

namespace {

/** One randomized check; returns the measured violation (failure if > tol). */
double axiom_trial(AxiomId id, std::size_t d, SplitMix64& rng) {
  switch (id) {
    case AxiomId::q1: {
      const ObservableBasis a = random_basis(d, rng);
      const ObservableBasis b = random_basis(d, rng);
      return quantumness(maximally_mixed(d), a, b);
    }
    case AxiomId::q2: {
      const ObservableBasis a = random_basis(d, rng);
      const DensityMatrix rho = random_density(d, d, rng);
      // Reorder a's vectors and attach fresh phases: same projective
      // measurement, so the prior measurement is invisible.
      std::vector<std::size_t> perm(d);
      for (std::size_t i = 0; i < d; ++i) perm[i] = i;
      for (std::size_t i = d; i-- > 1;) {
        std::swap(perm[i], perm[rng.next_below(i + 1)]);
      }
      std::vector<CVec> relabeled;
      relabeled.reserve(d);
      for (std::size_t i = 0; i < d; ++i) {
        CVec v = a[perm[i]];
        v *= std::polar(1.0, 2.0 * kPi * rng.next_double());
        relabeled.push_back(std::move(v));
      }
      return quantumness(rho, a, ObservableBasis(std::move(relabeled)));
    }
    case AxiomId::q3: {
      const ObservableBasis a = random_basis(d, rng);
      const ObservableBasis b = random_basis(d, rng);
      const std::size_t parts = 2 + rng.next_below(3);
      MixtureSpec spec;
      double total = 0.0;
      for (std::size_t k = 0; k < parts; ++k) {
        spec.weights.push_back(rng.next_double() + 1e-3);
        total += spec.weights.back();
        spec.components.push_back(random_density(d, d, rng));
      }
      for (double& w : spec.weights) w /= total;
      double blend_of_q = 0.0;
      for (std::size_t k = 0; k < parts; ++k) {
        blend_of_q += spec.weights[k] * quantumness(spec.components[k], a, b);
      }
      return quantumness(mix(spec), a, b) - blend_of_q;
    }
    case AxiomId::q4: {
      const ObservableBasis a = random_basis(d, rng);
      const ObservableBasis b = random_basis(d, rng);
      const DensityMatrix rho1 = random_density(d, d, rng);
      const DensityMatrix rho2 = random_density(d, d, rng);
      const double sum = quantumness(rho1, a, b) + quantumness(rho2, a, b);
      const double product_form = quantumness_composite(rho1, rho2, a, b);
      const double direct = quantumness(tensor_product(rho1, rho2), tensor_product(a, a),
                                        tensor_product(b, b));
      return std::max(std::abs(product_form - sum), std::abs(direct - sum));
    }
    case AxiomId::comp: {
      const DensityMatrix rho = random_pure(2, rng);
      const ObservableBasis a = named_basis("computational", 2);
      const ObservableBasis b =
          named_basis(rng.next_below(2) == 0 ? "pauli-x" : "pauli-y", 2);
      const QReport report = complementarity_report(rho, a, b);
      return std::abs(report.q + report.coherence_c - 1.0);
    }
    case AxiomId::finite: {
      const std::size_t rank = 1 + rng.next_below(d - 1);
      const DensityMatrix rho = random_density(d, rank, rng);
      const ObservableBasis a = random_basis(d, rng);
      const ObservableBasis b = random_basis(d, rng);
      const double q = quantumness(rho, a, b);
      return std::isfinite(q) ? 0.0 : 1.0;
    }
    case AxiomId::marginal_note: {
      const DensityMatrix rho = random_density(d, d, rng);
      const ObservableBasis a = random_basis(d, rng);
      const ObservableBasis b = random_basis(d, rng);
      const ProbVector direct = marginal_first(rho, a);
      const ProbVector via_joint = joint_dist(rho, a, b).row_marginal();
      double worst = 0.0;
      for (std::size_t i = 0; i < direct.size(); ++i) {
        worst = std::max(worst, std::abs(direct[i] - via_joint[i]));
      }
      return worst;
    }
  }
  throw ValidationError("axiom_trial: unknown axiom");
}

}  // namespace

AxiomReport run_axiom_suite(AxiomId id, int trials, std::uint64_t seed, double tol,
                            int threads) {
  if (trials < 1) throw ValidationError("run_axiom_suite: trials must be positive");
  AxiomReport report;
  report.id = id;
  report.trials = trials;
  report.seed = seed;
  report.tolerance = tol;

  std::vector<double> violations(static_cast<std::size_t>(trials), 0.0);
  std::vector<char> failed(static_cast<std::size_t>(trials), 0);
  parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t t) {
    SplitMix64 rng = SplitMix64::derive(seed, t);
    const std::size_t d = (id == AxiomId::comp) ? 2 : 2 + t % 3;
    try {
      violations[t] = axiom_trial(id, d, rng);
      failed[t] = violations[t] > tol ? 1 : 0;
    } catch (const AbsoluteContinuityViolation&) {
      violations[t] = 1.0;
      failed[t] = 1;
    }
  });
  for (std::size_t t = 0; t < violations.size(); ++t) {
    report.failures += failed[t];
    report.max_violation = std::max(report.max_violation, violations[t]);
  }
  return report;
}

}  // namespace qri
