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

#include "qri/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "qri/parallel.hpp"

namespace qri {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double eval_params(const DensityMatrix& rho, const ObservableBasis& a, double beta,
                   double gamma, LogBase base) {
  const BasisParams p = canonical_params(beta, gamma);
  return quantumness(rho, a, parametric_qubit_basis(p.beta, p.gamma), base);
}

/** value descending, then beta, then gamma: the deterministic argmax order. */
bool better(double v1, const BasisParams& p1, double v2, const BasisParams& p2) {
  if (v1 != v2) return v1 > v2;
  if (p1.beta != p2.beta) return p1.beta < p2.beta;
  return p1.gamma < p2.gamma;
}

struct Vertex {
  double beta;
  double gamma;
  double value;  // of the objective Q, maximized
};

/**
 * Nelder-Mead ascent on (beta, gamma) from one grid cell. Coordinates roam
 * the whole plane; evaluation canonicalizes, so the objective is smooth and
 * periodic and no constraint handling is needed.
 */
std::vector<RefinePoint> refine_simplex(const DensityMatrix& rho, const ObservableBasis& a,
                                        LogBase base, double beta0, double gamma0,
                                        double h_beta, double h_gamma, int iters,
                                        Vertex& out_best) {
  auto eval = [&](double b, double g) { return eval_params(rho, a, b, g, base); };
  std::array<Vertex, 3> v{
      Vertex{beta0, gamma0, eval(beta0, gamma0)},
      Vertex{beta0 + h_beta, gamma0, eval(beta0 + h_beta, gamma0)},
      Vertex{beta0, gamma0 + h_gamma, eval(beta0, gamma0 + h_gamma)},
  };
  std::vector<RefinePoint> trace;
  auto order = [&v]() {
    std::stable_sort(v.begin(), v.end(),
                     [](const Vertex& x, const Vertex& y) { return x.value > y.value; });
  };
  order();
  trace.push_back({canonical_params(v[0].beta, v[0].gamma), v[0].value});

  for (int it = 0; it < iters; ++it) {
    const double diameter =
        std::max(std::hypot(v[1].beta - v[0].beta, v[1].gamma - v[0].gamma),
                 std::hypot(v[2].beta - v[0].beta, v[2].gamma - v[0].gamma));
    if (diameter < 1e-12) break;

    const double cb = (v[0].beta + v[1].beta) / 2.0;
    const double cg = (v[0].gamma + v[1].gamma) / 2.0;
    const double rb = cb + (cb - v[2].beta);
    const double rg = cg + (cg - v[2].gamma);
    const double fr = eval(rb, rg);

    if (fr > v[0].value) {
      const double eb = cb + 2.0 * (cb - v[2].beta);
      const double eg = cg + 2.0 * (cg - v[2].gamma);
      const double fe = eval(eb, eg);
      v[2] = (fe > fr) ? Vertex{eb, eg, fe} : Vertex{rb, rg, fr};
    } else if (fr > v[1].value) {
      v[2] = Vertex{rb, rg, fr};
    } else {
      const bool outside = fr > v[2].value;
      const double xb = outside ? cb + 0.5 * (rb - cb) : cb + 0.5 * (v[2].beta - cb);
      const double xg = outside ? cg + 0.5 * (rg - cg) : cg + 0.5 * (v[2].gamma - cg);
      const double fx = eval(xb, xg);
      if (fx > (outside ? fr : v[2].value)) {
        v[2] = Vertex{xb, xg, fx};
      } else {
        for (int k = 1; k < 3; ++k) {
          v[k].beta = v[0].beta + 0.5 * (v[k].beta - v[0].beta);
          v[k].gamma = v[0].gamma + 0.5 * (v[k].gamma - v[0].gamma);
          v[k].value = eval(v[k].beta, v[k].gamma);
        }
      }
    }
    order();
    if (v[0].value > trace.back().value) {
      trace.push_back({canonical_params(v[0].beta, v[0].gamma), v[0].value});
    }
  }
  out_best = v[0];
  return trace;
}

}  // namespace

BasisParams canonical_params(double beta, double gamma) {
  beta = std::fmod(beta, kTwoPi);
  if (beta < 0.0) beta += kTwoPi;
  if (beta >= kTwoPi) beta = 0.0;
  if (beta > kPi) {
    beta = kTwoPi - beta;
    gamma += kPi;
  }
  gamma = std::fmod(gamma, kTwoPi);
  if (gamma < 0.0) gamma += kTwoPi;
  if (gamma >= kTwoPi) gamma = 0.0;
  return BasisParams{beta, gamma};
}

MaxQResult max_q_over_b(const DensityMatrix& rho, const ObservableBasis& a, int grid_n,
                        int refine_iters, LogBase base, std::uint64_t seed, int threads) {
  (void)seed;  // the qubit path is deterministic without randomness
  if (rho.dim() != 2 || a.dim() != 2) {
    throw DimensionMismatch("max_q_over_b: the parametric search covers qubits only");
  }
  if (grid_n < 8) throw ValidationError("max_q_over_b: grid_n must be at least 8");
  if (refine_iters < 0) throw ValidationError("max_q_over_b: refine_iters must be nonnegative");

  const double beta_step = kPi / static_cast<double>(grid_n - 1);
  const double gamma_step = kTwoPi / static_cast<double>(grid_n);
  const std::size_t cells = static_cast<std::size_t>(grid_n) * static_cast<std::size_t>(grid_n);

  std::vector<double> values(cells);
  parallel_for(cells, threads, [&](std::size_t cell) {
    const int i = static_cast<int>(cell) / grid_n;
    const int j = static_cast<int>(cell) % grid_n;
    values[cell] = eval_params(rho, a, i * beta_step, j * gamma_step, base);
  });

  // Sequential reduction in a fixed order keeps the argmax deterministic.
  std::vector<std::size_t> ranked(cells);
  for (std::size_t c = 0; c < cells; ++c) ranked[c] = c;
  auto cell_params = [&](std::size_t cell) {
    return BasisParams{static_cast<double>(cell / grid_n) * beta_step,
                       static_cast<double>(cell % grid_n) * gamma_step};
  };
  std::stable_sort(ranked.begin(), ranked.end(), [&](std::size_t lhs, std::size_t rhs) {
    return better(values[lhs], cell_params(lhs), values[rhs], cell_params(rhs));
  });

  MaxQResult result;
  result.grid_resolution = grid_n;
  result.refine_iterations = refine_iters;
  result.q_max = values[ranked[0]];
  result.argmax = cell_params(ranked[0]);

  const int starts = static_cast<int>(std::min<std::size_t>(3, cells));
  for (int s = 0; s < starts; ++s) {
    const BasisParams start = cell_params(ranked[s]);
    Vertex best{};
    std::vector<RefinePoint> trace =
        refine_simplex(rho, a, base, start.beta, start.gamma, 0.5 * beta_step,
                       0.5 * gamma_step, refine_iters, best);
    const BasisParams canon = canonical_params(best.beta, best.gamma);
    if (better(best.value, canon, result.q_max, result.argmax)) {
      result.q_max = best.value;
      result.argmax = canon;
      result.trace = std::move(trace);
    }
  }
  if (result.trace.empty()) {
    result.trace.push_back({result.argmax, result.q_max});
  }
  result.best_basis = parametric_qubit_basis(result.argmax.beta, result.argmax.gamma);
  return result;
}

MaxQResult max_q_over_b_general(const DensityMatrix& rho, const ObservableBasis& a,
                                int samples, int refine_iters, LogBase base,
                                std::uint64_t seed) {
  if (rho.dim() != a.dim()) {
    throw DimensionMismatch("max_q_over_b_general: state and observable dimensions differ");
  }
  if (samples < 32) throw ValidationError("max_q_over_b_general: need at least 32 samples");
  if (refine_iters < 0) {
    throw ValidationError("max_q_over_b_general: refine_iters must be nonnegative");
  }
  const std::size_t d = rho.dim();
  SplitMix64 rng(seed);

  auto basis_from_unitary = [&](const CMat& u) {
    std::vector<CVec> cols;
    cols.reserve(d);
    for (std::size_t c = 0; c < d; ++c) {
      CVec col(d);
      for (std::size_t r = 0; r < d; ++r) col[r] = u(r, c);
      cols.push_back(std::move(col));
    }
    return ObservableBasis(std::move(cols));
  };

  CMat best_u = haar_unitary(d, rng);
  double best_q = quantumness(rho, a, basis_from_unitary(best_u), base);
  for (int s = 1; s < samples; ++s) {
    CMat u = haar_unitary(d, rng);
    const double q = quantumness(rho, a, basis_from_unitary(u), base);
    if (q > best_q) {
      best_q = q;
      best_u = u;
    }
  }

  MaxQResult result;
  result.grid_resolution = samples;
  result.refine_iterations = refine_iters;
  result.trace.push_back({BasisParams{}, best_q});

  double step = 0.3;
  int consecutive_rejects = 0;
  for (int it = 0; it < refine_iters && consecutive_rejects < 20; ++it) {
    std::vector<CVec> jittered;
    jittered.reserve(d);
    for (std::size_t c = 0; c < d; ++c) {
      CVec col(d);
      for (std::size_t r = 0; r < d; ++r) {
        col[r] = best_u(r, c) + Complex(step * rng.next_gaussian(), step * rng.next_gaussian());
      }
      jittered.push_back(std::move(col));
    }
    CMat u(d);
    // Perturbations this small cannot make Gaussian-seeded columns dependent,
    // so Gram-Schmidt always succeeds here.
    std::vector<CVec> ortho = gram_schmidt(jittered);
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t r = 0; r < d; ++r) u(r, c) = ortho[c][r];
    const double q = quantumness(rho, a, basis_from_unitary(u), base);
    if (q > best_q) {
      best_q = q;
      best_u = u;
      consecutive_rejects = 0;
      result.trace.push_back({BasisParams{}, q});
    } else {
      step *= 0.7;
      ++consecutive_rejects;
    }
  }

  result.q_max = best_q;
  result.best_basis = basis_from_unitary(best_u);
  if (d == 2) {
    // Read the two-parameter chart off the first basis vector.
    CVec b0(2);
    b0[0] = best_u(0, 0);
    b0[1] = best_u(1, 0);
    const double mag0 = std::abs(b0[0]);
    const double mag1 = std::abs(b0[1]);
    const double beta = 2.0 * std::atan2(mag1, mag0);
    double gamma = 0.0;
    if (mag1 > 1e-12 && mag0 > 1e-12) {
      gamma = std::arg(b0[1]) - std::arg(b0[0]);
    }
    result.argmax = canonical_params(beta, gamma);
  }
  return result;
}

}  // namespace qri
