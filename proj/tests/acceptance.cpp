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

// Integration gate: every release-blocking guarantee as one pass/fail line.
// Usage: acceptance <path-to-qri-cli>
// Exit code: number of failed criteria.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qri/experiments.hpp"
#include "qri/optimize.hpp"

namespace {

namespace fs = std::filesystem;

constexpr double kPi = 3.14159265358979323846;
// Analytic optimum for the equator state read in the computational basis.
constexpr double kPlusStateMax = 0.207518749639422;
constexpr double kLog2Of3 = 1.584962500721156;

std::string g_cli;
fs::path g_tmp;
int g_failures = 0;
int g_index = 0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

void run_criterion(const std::string& name, const std::function<Outcome()>& body) {
  ++g_index;
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.pass = false;
    outcome.detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!outcome.pass) ++g_failures;
  char line[512];
  std::snprintf(line, sizeof(line), "%s %2d. %-52s %s [%.2f s]",
                outcome.pass ? "PASS" : "FAIL", g_index, name.c_str(),
                outcome.detail.c_str(), seconds);
  std::cout << line << std::endl;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

/** Run the CLI through the shell; stdout captured, stderr dropped. */
CliResult run_cli(const std::string& args) {
  CliResult result;
  const std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const fs::path p = g_tmp / name;
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << content;
  return p.string();
}

qri::DensityMatrix random_pure_qubit(qri::SplitMix64& rng) {
  return qri::bloch_pure(rng.next_double() * kPi, rng.next_double() * 2 * kPi);
}

// ---------------------------------------------------------------------------

Outcome pure_qubit_sum_rule() {
  const qri::ObservableBasis a = qri::named_basis("computational", 2);
  const qri::ObservableBasis bx = qri::named_basis("pauli-x", 2);
  const qri::ObservableBasis by = qri::named_basis("pauli-y", 2);
  qri::SplitMix64 rng(1);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const qri::DensityMatrix rho = random_pure_qubit(rng);
    const qri::ObservableBasis& b = (t % 2 == 0) ? bx : by;
    const double q = qri::quantumness(rho, a, b);
    const double c = qri::coherence_rel_ent(rho, a);
    worst = std::max(worst, std::abs(q + c - 1.0));
  }
  return {worst <= 1e-9, "1000 states, max|q+c-1| = " + fmt(worst)};
}

Outcome log_d_sum_rule() {
  qri::SplitMix64 rng(2);
  double worst = 0.0;
  for (std::size_t d = 2; d <= 4; ++d) {
    const qri::ObservableBasis a = qri::named_basis("computational", d);
    const qri::ObservableBasis b = qri::named_basis("fourier", d);
    const double target = std::log2(static_cast<double>(d));
    for (int t = 0; t < 300; ++t) {
      const qri::DensityMatrix rho = qri::random_pure(d, rng);
      const double q = qri::quantumness(rho, a, b);
      const double c = qri::coherence_rel_ent(rho, a);
      worst = std::max(worst, std::abs(q + c - target));
    }
  }
  return {worst <= 1e-9, "900 states, max|q+c-log2(d)| = " + fmt(worst)};
}

Outcome fig1_curve() {
  const qri::SweepGrid grid = qri::fig1_sweep(181);
  if (grid.rows.size() != 181) return {false, "row count " + std::to_string(grid.rows.size())};
  double worst_form = 0.0;
  for (const auto& row : grid.rows) {
    const double cos2 = std::cos(row[0] / 2) * std::cos(row[0] / 2);
    double h = 0.0;
    if (cos2 > 0.0) h -= cos2 * std::log2(cos2);
    if (cos2 < 1.0) h -= (1 - cos2) * std::log2(1 - cos2);
    worst_form = std::max(worst_form, std::abs(row[1] - (1.0 - h)));
    worst_form = std::max(worst_form, std::abs(row[1] + row[2] - 1.0));
  }
  const double ends = std::max(
      std::max(std::abs(grid.rows.front()[1] - 1.0), std::abs(grid.rows.front()[2])),
      std::max(std::abs(grid.rows[90][1]), std::abs(grid.rows[90][2] - 1.0)));
  const bool pass = worst_form <= 1e-9 && ends <= 1e-9;
  return {pass, "endpoints " + fmt(ends) + ", closed-form gap " + fmt(worst_form)};
}

Outcome fig2_extremes() {
  const double r = 1.0 / std::sqrt(2.0);
  const double e1 = std::abs(qri::fig2_quantumness(r, r, 0.0) - 1.0);
  const double e2 = std::abs(qri::fig2_quantumness(1.0, 1.0, r) - 1.0);

  const qri::SweepGrid grid = qri::fig2_sweep(41);
  double diag_worst = 0.0;
  for (const auto& row : grid.rows) {
    if (row[1] == row[2]) diag_worst = std::max(diag_worst, std::abs(row[3]));
  }
  const bool pass = e1 <= 1e-9 && e2 <= 1e-9 && diag_worst <= 1e-12;
  return {pass, "peaks " + fmt(std::max(e1, e2)) + ", a=b residue " + fmt(diag_worst) +
                    ", 41^3 rows " + std::to_string(grid.rows.size())};
}

Outcome axiom_suites_q1_q4() {
  std::string detail;
  bool pass = true;
  for (qri::AxiomId id :
       {qri::AxiomId::q1, qri::AxiomId::q2, qri::AxiomId::q3, qri::AxiomId::q4}) {
    const qri::AxiomReport rep =
        qri::run_axiom_suite(id, 1000, 5, qri::default_axiom_tolerance(id));
    pass = pass && rep.failures == 0;
    if (!detail.empty()) detail += ", ";
    detail += qri::axiom_name(id) + (rep.failures == 0 ? " ok " : " FAIL ") +
              fmt(rep.max_violation);
  }
  return {pass, detail};
}

Outcome marginal_invariance() {
  const qri::AxiomReport rep = qri::run_axiom_suite(qri::AxiomId::marginal_note, 1000, 6, 1e-12);
  return {rep.failures == 0,
          "1000 trials, max deviation " + fmt(rep.max_violation)};
}

Outcome finite_on_rank_deficient() {
  const qri::AxiomReport rep = qri::run_axiom_suite(qri::AxiomId::finite, 1000, 7, 0.0);
  return {rep.failures == 0, "1000 rank-deficient states, failures " +
                                 std::to_string(rep.failures)};
}

Outcome fig3_surface() {
  const auto sweep_start = std::chrono::steady_clock::now();
  const qri::SweepGrid grid = qri::fig3_sweep(61, 61, 32, 200, 0);
  const double sweep_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - sweep_start).count();

  double pole_gap = 0.0, sym_gap = 0.0, min_slack = 0.0;
  for (std::size_t r = 0; r < grid.rows.size(); ++r) {
    const std::size_t ti = r / 61, pi_idx = r % 61;
    const double q = grid.rows[r][2];
    if (ti == 0 || ti == 60) pole_gap = std::max(pole_gap, std::abs(q - 1.0));
    sym_gap = std::max(sym_gap, std::abs(q - grid.rows[(60 - ti) * 61 + pi_idx][2]));
    min_slack = std::max(min_slack, grid.rows[30 * 61 + pi_idx][2] - q);
  }

  // Exhaustive reference for the equator state: 2048 x 2048 direct
  // evaluations, no optimizer code involved.
  const qri::DensityMatrix plus = qri::bloch_pure(kPi / 2, 0.0);
  const qri::ObservableBasis a = qri::named_basis("computational", 2);
  double oracle = 0.0;
  for (int ib = 0; ib < 2048; ++ib) {
    const double beta = kPi * ib / 2047.0;
    for (int ig = 0; ig < 2048; ++ig) {
      const double gamma = 2.0 * kPi * ig / 2048.0;
      oracle = std::max(
          oracle, qri::quantumness(plus, a, qri::parametric_qubit_basis(beta, gamma)));
    }
  }
  const double refined = qri::max_q_over_b(plus, a, 64, 200).q_max;

  const bool pass = pole_gap <= 1e-3 && sym_gap <= 2e-3 && min_slack <= 1e-6 &&
                    std::abs(refined - oracle) <= 1e-4 &&
                    std::abs(oracle - kPlusStateMax) <= 5e-6 && sweep_seconds < 60.0;
  return {pass, "poles " + fmt(pole_gap) + ", symmetry " + fmt(sym_gap) + ", equator-min " +
                    fmt(min_slack) + ", refined-vs-oracle " + fmt(std::abs(refined - oracle)) +
                    ", sweep " + fmt(sweep_seconds) + " s"};
}

Outcome fig4_surface() {
  const auto sweep_start = std::chrono::steady_clock::now();
  const qri::SweepGrid grid = qri::fig4_sweep(61, 51, 32, 200, 0);
  const double sweep_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - sweep_start).count();

  double mixed_residue = 0.0, mono_slack = 0.0;
  for (std::size_t r = 0; r < grid.rows.size(); ++r) {
    const std::size_t pi_idx = r % 51;
    const double q = grid.rows[r][2];
    if (pi_idx == 0) mixed_residue = std::max(mixed_residue, std::abs(q));
    if (pi_idx > 0) mono_slack = std::max(mono_slack, grid.rows[r - 1][2] - q);
  }
  const double pure_pole_gap = std::abs(grid.rows[50][2] - 1.0);  // theta=0, p=1

  const bool pass = mixed_residue <= 1e-6 && pure_pole_gap <= 1e-3 && mono_slack <= 2e-3 &&
                    sweep_seconds < 60.0;
  return {pass, "p=0 residue " + fmt(mixed_residue) + ", pure pole " + fmt(pure_pole_gap) +
                    ", monotonicity slack " + fmt(mono_slack) + ", sweep " +
                    fmt(sweep_seconds) + " s"};
}

Outcome cli_determinism() {
  const std::string state = write_temp("plus.json", R"({"kind":"bloch","theta":1.5707963267948966,"phi":0})");
  const std::string compute_args = "compute --state @" + state +
                                   " --obs-a '{\"name\":\"computational\"}'"
                                   " --obs-b '{\"beta\":0.7,\"gamma\":4.0}'";
  const CliResult c1 = run_cli(compute_args);
  const CliResult c2 = run_cli(compute_args);

  const std::string sweep_base =
      "sweep fig3 --steps 5 --phi-steps 4 --grid 12 --refine 40 --seed 9 --format csv";
  const CliResult s1 = run_cli(sweep_base + " --threads 1");
  const CliResult s4 = run_cli(sweep_base + " --threads 4");
  const CliResult s1b = run_cli(sweep_base + " --threads 1");

  const std::string check_args = "check --axiom q3 --trials 60 --seed 17";
  const CliResult k1 = run_cli(check_args + " --threads 1");
  const CliResult k4 = run_cli(check_args + " --threads 4");

  const std::string maxq_args = "maxq --state @" + state +
                                " --obs-a '{\"name\":\"computational\"}' --grid 32 --seed 3";
  const CliResult m1 = run_cli(maxq_args);
  const CliResult m2 = run_cli(maxq_args);

  const bool all_zero = c1.exit_code == 0 && c2.exit_code == 0 && s1.exit_code == 0 &&
                        s4.exit_code == 0 && s1b.exit_code == 0 && k1.exit_code == 0 &&
                        k4.exit_code == 0 && m1.exit_code == 0 && m2.exit_code == 0;
  const bool identical = c1.output == c2.output && s1.output == s4.output &&
                         s1.output == s1b.output && k1.output == k4.output &&
                         m1.output == m2.output;
  const bool nonempty = !c1.output.empty() && !s1.output.empty() && !k1.output.empty() &&
                        !m1.output.empty();
  std::string detail = std::string("exit codes ") + (all_zero ? "ok" : "BAD") +
                       ", byte-identical " + (identical ? "yes" : "NO");
  return {all_zero && identical && nonempty, detail};
}

Outcome cli_contract() {
  std::vector<std::string> problems;

  // Pure pole state against an unbiased pair: q is exactly one bit.
  const CliResult pole = run_cli(
      "compute --state '{\"kind\":\"bloch\",\"theta\":0,\"phi\":0}'"
      " --obs-a '{\"name\":\"computational\"}' --obs-b '{\"name\":\"pauli-y\"}'");
  if (pole.exit_code != 0) {
    problems.push_back("pole exit " + std::to_string(pole.exit_code));
  } else {
    const auto doc = nlohmann::json::parse(pole.output, nullptr, false);
    if (doc.is_discarded() || !doc["pure"].is_boolean() || doc["pure"] != true ||
        std::abs(doc["q"].get<double>() - 1.0) > 1e-9) {
      problems.push_back("pole report wrong");
    }
  }

  // Maximally mixed input: q = 0 through the mixed-state path.
  const CliResult mixed = run_cli(
      "compute --state '{\"kind\":\"mixed\",\"matrix\":[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]}'"
      " --obs-a '{\"name\":\"pauli-x\"}' --obs-b '{\"name\":\"pauli-y\"}'");
  if (mixed.exit_code != 0) {
    problems.push_back("mixed exit " + std::to_string(mixed.exit_code));
  } else {
    const auto doc = nlohmann::json::parse(mixed.output, nullptr, false);
    if (doc.is_discarded() || doc["pure"] != false || std::abs(doc["q"].get<double>()) > 1e-12) {
      problems.push_back("mixed report wrong");
    }
  }

  // Malformed JSON: exit 2 and no partial output file.
  const std::string bad = write_temp("bad.json", "{\"kind\":");
  const fs::path never_written = g_tmp / "never.json";
  const CliResult malformed = run_cli("compute --state @" + bad +
                                      " --obs-a '{\"name\":\"pauli-x\"}'"
                                      " --obs-b '{\"name\":\"pauli-y\"}' --out " +
                                      never_written.string());
  if (malformed.exit_code != 2) {
    problems.push_back("malformed exit " + std::to_string(malformed.exit_code));
  }
  if (fs::exists(never_written)) problems.push_back("partial output left behind");

  // Dimension mismatch: exit 3.
  const CliResult mismatch = run_cli(
      "compute --state '{\"kind\":\"pure\",\"amps\":[[1,0],[0,0],[0,0]]}'"
      " --obs-a '{\"name\":\"pauli-x\"}' --obs-b '{\"name\":\"pauli-y\"}'");
  if (mismatch.exit_code != 3) {
    problems.push_back("mismatch exit " + std::to_string(mismatch.exit_code));
  }

  // Structural suite through the CLI: exit 0 and failure-free report.
  const CliResult check = run_cli("check --axiom q2 --trials 100 --seed 11");
  if (check.exit_code != 0) {
    problems.push_back("check exit " + std::to_string(check.exit_code));
  } else {
    const auto doc = nlohmann::json::parse(check.output, nullptr, false);
    if (doc.is_discarded() || !doc.is_array() || doc.size() != 1 ||
        doc[0]["failures"].get<int>() != 0) {
      problems.push_back("check report wrong");
    }
  }

  // Unknown names are usage errors.
  if (run_cli("sweep fig9 --steps 4").exit_code != 2) problems.push_back("fig9 not exit 2");
  if (run_cli("check --axiom q9 --trials 5").exit_code != 2) problems.push_back("q9 not exit 2");
  if (run_cli("--version").exit_code != 0) problems.push_back("--version not exit 0");

  std::string detail;
  for (const std::string& p : problems) {
    if (!detail.empty()) detail += "; ";
    detail += p;
  }
  if (detail.empty()) detail = "all contract points hold";
  return {problems.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-qri-cli>\n";
    return 2;
  }
  g_cli = argv[1];
  if (!fs::exists(g_cli)) {
    std::cerr << "acceptance: CLI binary not found: " << g_cli << "\n";
    return 2;
  }
  g_tmp = fs::temp_directory_path() / ("qri-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(g_tmp);

  std::cout << "acceptance gate, CLI: " << g_cli << "\n";

  run_criterion("pure-qubit sum rule (q + c = 1)", pure_qubit_sum_rule);
  run_criterion("log-d sum rule at d = 2, 3, 4", log_d_sum_rule);
  run_criterion("fig1 endpoints and closed form", fig1_curve);
  run_criterion("fig2 extremal points at 41^3", fig2_extremes);
  run_criterion("randomized suites Q1-Q4, 1000 trials", axiom_suites_q1_q4);
  run_criterion("joint-marginal invariance, 1000 trials", marginal_invariance);
  run_criterion("finiteness on rank-deficient states", finite_on_rank_deficient);
  run_criterion("fig3 surface and dense-grid oracle", fig3_surface);
  run_criterion("fig4 mixing monotonicity", fig4_surface);
  run_criterion("byte-identical CLI reruns and thread counts", cli_determinism);
  run_criterion("CLI exit-code and output contract", cli_contract);

  std::error_code ec;
  fs::remove_all(g_tmp, ec);

  if (g_failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
  } else {
    std::cout << "acceptance: " << g_failures << " criterion(s) FAILED\n";
  }
  return g_failures;
}
