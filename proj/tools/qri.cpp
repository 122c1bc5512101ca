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

// Command-line front end. Subcommands:
//   compute  one state / observable pair, JSON report on stdout
//   sweep    figure datasets (fig1..fig4) as CSV or JSON
//   maxq     largest q over the second observable
//   check    randomized structural test suites
// Exit codes: 0 success, 1 check suite failure, 2 usage or validation
// error, 3 dimension mismatch.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qri/experiments.hpp"
#include "qri/state_json.hpp"
#include "qri/version.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDimension = 3;

/** Round to the emitted precision so JSON numbers match the CSV contract. */
double sig12(double v) { return std::stod(qri::format_sig12(v)); }

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qri::ValidationError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/** `--state` and `--obs-*` take inline JSON or @file indirection. */
std::string resolve_json_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return slurp_file(arg.substr(1));
  return arg;
}

/** Replace-by-rename so a crash never leaves a truncated output file. */
void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw qri::ValidationError("cannot open output file: " + tmp);
    out << content;
    if (!out.flush()) throw qri::ValidationError("write failed: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

qri::LogBase parse_base(const std::string& base) {
  if (base == "2") return qri::LogBase::two;
  if (base == "e") return qri::LogBase::e;
  throw qri::ValidationError("--base must be 2 or e");
}

ordered_json prob_json(const qri::ProbVector& p) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < p.size(); ++i) arr.push_back(sig12(p[i]));
  return arr;
}

struct CommonArgs {
  std::string state;
  std::string obs_a;
  std::string obs_b;
  std::string base = "2";
  std::string out;
  std::uint64_t seed = 0;
  int threads = 0;
};

int cmd_compute(const CommonArgs& args) {
  const qri::DensityMatrix rho = qri::parse_state_json(resolve_json_arg(args.state));
  const qri::ObservableBasis a =
      qri::parse_observable_json(resolve_json_arg(args.obs_a), rho.dim());
  const qri::ObservableBasis b =
      qri::parse_observable_json(resolve_json_arg(args.obs_b), rho.dim());
  const qri::LogBase base = parse_base(args.base);

  ordered_json doc;
  doc["version"] = qri::kVersion;
  doc["base"] = args.base;
  if (rho.is_pure()) {
    const qri::QReport report = qri::complementarity_report(rho, a, b, base);
    doc["pure"] = true;
    doc["q"] = sig12(report.q);
    doc["coherence_c"] = sig12(report.coherence_c);
    doc["d_term"] = sig12(report.d_term);
    doc["p_first"] = prob_json(report.p_first);
    doc["p_after"] = prob_json(report.p_after);
  } else {
    doc["pure"] = false;
    doc["q"] = sig12(qri::quantumness(rho, a, b, base));
    doc["coherence_c"] = sig12(qri::coherence_rel_ent(rho, a, base));
    doc["p_first"] = prob_json(qri::marginal_first(rho, a));
    doc["p_after"] = prob_json(qri::marginal_after(rho, a, b));
  }
  write_output(args.out, doc.dump(2) + "\n");
  return kExitOk;
}

struct SweepArgs {
  std::string figure;
  int steps = 0;  // 0 = per-figure default
  int phi_steps = 0;
  int p_steps = 0;
  int grid_n = 32;
  int refine = 200;
  std::string format = "csv";
  CommonArgs common;
};

int cmd_sweep(const SweepArgs& args) {
  qri::SweepGrid grid;
  if (args.figure == "fig1") {
    grid = qri::fig1_sweep(args.steps > 0 ? args.steps : 181, args.common.threads);
  } else if (args.figure == "fig2") {
    grid = qri::fig2_sweep(args.steps > 0 ? args.steps : 41, args.common.threads);
  } else if (args.figure == "fig3") {
    grid = qri::fig3_sweep(args.steps > 0 ? args.steps : 61,
                           args.phi_steps > 0 ? args.phi_steps : 61, args.grid_n,
                           args.refine, args.common.seed, args.common.threads);
  } else if (args.figure == "fig4") {
    grid = qri::fig4_sweep(args.steps > 0 ? args.steps : 61,
                           args.p_steps > 0 ? args.p_steps : 51, args.grid_n, args.refine,
                           args.common.seed, args.common.threads);
  } else {
    throw qri::ValidationError("unknown figure '" + args.figure +
                               "' (expected fig1, fig2, fig3 or fig4)");
  }
  std::ostringstream out;
  if (args.format == "csv") {
    qri::write_csv(grid, out);
  } else if (args.format == "json") {
    qri::write_json(grid, out);
  } else {
    throw qri::ValidationError("--format must be csv or json");
  }
  write_output(args.common.out, out.str());
  return kExitOk;
}

struct MaxqArgs {
  int grid_n = 64;
  int refine = 200;
  int samples = 64;
  CommonArgs common;
};

int cmd_maxq(const MaxqArgs& args) {
  const qri::DensityMatrix rho = qri::parse_state_json(resolve_json_arg(args.common.state));
  const qri::ObservableBasis a =
      qri::parse_observable_json(resolve_json_arg(args.common.obs_a), rho.dim());
  const qri::LogBase base = parse_base(args.common.base);

  ordered_json doc;
  doc["version"] = qri::kVersion;
  doc["base"] = args.common.base;
  if (rho.dim() == 2) {
    const qri::MaxQResult res = qri::max_q_over_b(rho, a, args.grid_n, args.refine, base,
                                                  args.common.seed, args.common.threads);
    doc["method"] = "grid+simplex";
    doc["grid_n"] = res.grid_resolution;
    doc["refine_iters"] = res.refine_iterations;
    doc["q_max"] = sig12(res.q_max);
    doc["argmax"] = {{"beta", sig12(res.argmax.beta)}, {"gamma", sig12(res.argmax.gamma)}};
  } else {
    const qri::MaxQResult res = qri::max_q_over_b_general(rho, a, args.samples, args.refine,
                                                          base, args.common.seed);
    doc["method"] = "haar+perturb";
    doc["samples"] = res.grid_resolution;
    doc["refine_iters"] = res.refine_iterations;
    doc["seed"] = args.common.seed;
    doc["q_max"] = sig12(res.q_max);
    ordered_json basis = ordered_json::array();
    for (const qri::CVec& v : res.best_basis->vectors()) {
      ordered_json vec = ordered_json::array();
      for (std::size_t i = 0; i < v.dim(); ++i) {
        vec.push_back({sig12(v[i].real()), sig12(v[i].imag())});
      }
      basis.push_back(std::move(vec));
    }
    doc["argmax_basis"] = std::move(basis);
  }
  write_output(args.common.out, doc.dump(2) + "\n");
  return kExitOk;
}

struct CheckArgs {
  std::string axiom = "all";
  int trials = 1000;
  double tol = -1.0;  // negative = per-axiom default
  CommonArgs common;
};

int cmd_check(const CheckArgs& args) {
  std::vector<qri::AxiomId> ids;
  if (args.axiom == "all") {
    ids = {qri::AxiomId::q1,     qri::AxiomId::q2,     qri::AxiomId::q3,
           qri::AxiomId::q4,     qri::AxiomId::comp,   qri::AxiomId::finite,
           qri::AxiomId::marginal_note};
  } else if (auto id = qri::parse_axiom_id(args.axiom)) {
    ids = {*id};
  } else {
    throw qri::ValidationError("unknown axiom '" + args.axiom + "'");
  }
  ordered_json doc = ordered_json::array();
  bool any_failed = false;
  for (qri::AxiomId id : ids) {
    const double tol = args.tol >= 0.0 ? args.tol : qri::default_axiom_tolerance(id);
    const qri::AxiomReport report =
        qri::run_axiom_suite(id, args.trials, args.common.seed, tol, args.common.threads);
    any_failed = any_failed || report.failures > 0;
    doc.push_back({{"axiom", qri::axiom_name(id)},
                   {"trials", report.trials},
                   {"failures", report.failures},
                   {"max_violation", sig12(report.max_violation)},
                   {"tolerance", sig12(report.tolerance)},
                   {"seed", report.seed}});
  }
  write_output(args.common.out, doc.dump(2) + "\n");
  return any_failed ? kExitCheckFailed : kExitOk;
}

void add_common_output_options(CLI::App* cmd, CommonArgs& common) {
  cmd->add_option("--out", common.out, "Write output to this file (atomically)");
  cmd->add_option("--seed", common.seed, "Random seed")->envname("QRI_SEED");
  cmd->add_option("--threads", common.threads, "Worker threads (0 = hardware)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential-measurement incompatibility toolkit"};
  app.set_version_flag("--version", qri::kVersion);
  app.require_subcommand(1);

  CommonArgs compute_args;
  CLI::App* compute = app.add_subcommand("compute", "Evaluate one state / basis pair");
  compute->add_option("--state", compute_args.state, "State JSON (inline or @file)")->required();
  compute->add_option("--obs-a", compute_args.obs_a, "First observable JSON")->required();
  compute->add_option("--obs-b", compute_args.obs_b, "Second observable JSON")->required();
  compute->add_option("--base", compute_args.base, "Log base: 2 or e");
  add_common_output_options(compute, compute_args);

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Generate a figure dataset");
  sweep->add_option("figure", sweep_args.figure, "fig1, fig2, fig3 or fig4")->required();
  sweep->add_option("--steps", sweep_args.steps, "Steps for the leading axis");
  sweep->add_option("--phi-steps", sweep_args.phi_steps, "Azimuth steps (fig3)");
  sweep->add_option("--p-steps", sweep_args.p_steps, "Mixing-parameter steps (fig4)");
  sweep->add_option("--grid", sweep_args.grid_n, "Search grid side (fig3, fig4)");
  sweep->add_option("--refine", sweep_args.refine, "Refinement iterations (fig3, fig4)");
  sweep->add_option("--format", sweep_args.format, "csv or json");
  add_common_output_options(sweep, sweep_args.common);

  MaxqArgs maxq_args;
  CLI::App* maxq = app.add_subcommand("maxq", "Maximize q over the second observable");
  maxq->add_option("--state", maxq_args.common.state, "State JSON (inline or @file)")->required();
  maxq->add_option("--obs-a", maxq_args.common.obs_a, "First observable JSON")->required();
  maxq->add_option("--base", maxq_args.common.base, "Log base: 2 or e");
  maxq->add_option("--grid", maxq_args.grid_n, "Grid side for the qubit search");
  maxq->add_option("--refine", maxq_args.refine, "Refinement iterations");
  maxq->add_option("--samples", maxq_args.samples, "Random starts above dimension 2");
  add_common_output_options(maxq, maxq_args.common);

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "Run structural test suites");
  check->add_option("--axiom", check_args.axiom,
                    "q1, q2, q3, q4, comp, finite, marginal-note or all");
  check->add_option("--trials", check_args.trials, "Trials per suite");
  check->add_option("--tol", check_args.tol, "Override the per-suite tolerance");
  add_common_output_options(check, check_args.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(compute_args);
    if (sweep->parsed()) return cmd_sweep(sweep_args);
    if (maxq->parsed()) return cmd_maxq(maxq_args);
    if (check->parsed()) return cmd_check(check_args);
    std::cerr << "no subcommand given\n";
    return kExitUsage;
  } catch (const qri::DimensionMismatch& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
