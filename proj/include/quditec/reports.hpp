// Copyright 2026 The quditec developers
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

#include <numbers>
#include <string>
#include <vector>

#include "quditec/discrimination.hpp"
#include "quditec/io.hpp"

// Experiment drivers shared by the CLI and the test suites. Every report is
// a pure function of its arguments (including the seed), so identical
// invocations serialize to identical bytes.

namespace quditec::reports {

inline constexpr std::int64_t kDefaultShots = 8192;

// Final-fidelity bar for a correction run to count as successful.
inline constexpr double kCorrectOkTol = 1e-9;

inline json check_to_json(const CheckOutcome& check) {
  json j;
  j["outcome"] = modal_outcome(check.distribution);
  json dist = json::array();
  for (Index o = 0; o < check.distribution.size(); ++o) dist.push_back(check.distribution[o]);
  j["distribution"] = std::move(dist);
  if (check.sampled) j["histogram"] = shot_result_to_json(*check.sampled);
  return j;
}

// ---- discrimination ------------------------------------------------------

struct DiscriminateReport {
  json doc;
  bool correct = false;
};

inline DiscriminateReport discriminate_report(const GBSLabel& label, std::int64_t shots,
                                              std::uint64_t seed) {
  const auto input = gbs(label);
  const auto result = discriminate(input, label.d, label.n, shots, seed);

  DiscriminateReport report;
  report.correct = result.label == label;
  report.doc = json{{"command", "discriminate"},
                    {"label", to_string(label)},
                    {"shots", shots},
                    {"seed", seed},
                    {"phase", check_to_json(result.phase)},
                    {"inferred", to_string(result.label)},
                    {"post_fidelity", fidelity(input, result.post_state)},
                    {"correct", report.correct}};
  json parity = json::array();
  for (const auto& check : result.parity) parity.push_back(check_to_json(check));
  report.doc["parity"] = std::move(parity);
  return report;
}

// ---- correction ----------------------------------------------------------

enum class CorrectionSteps { One, Two, All };

inline CorrectionSteps parse_steps(const std::string& text) {
  if (text == "1") return CorrectionSteps::One;
  if (text == "2") return CorrectionSteps::Two;
  if (text == "3" || text == "all") return CorrectionSteps::All;  // step 3 completes the pipeline
  throw ParseError("steps: expected 1, 2, 3 or all");
}

struct CorrectReport {
  json doc;
  bool ok = false;
};

inline CorrectReport correct_report(const GBSLabel& label, const ErrorSpec& err,
                                    CorrectionSteps steps, bool dump_states) {
  const auto err_state = inject(label, err);
  const auto target = gbs(label);

  CorrectReport report;
  report.doc = json{{"command", "correct"},
                    {"label", to_string(label)},
                    {"error", error_spec_to_json(err)},
                    {"steps", steps == CorrectionSteps::One   ? "1"
                              : steps == CorrectionSteps::Two ? "2"
                                                              : "all"}};
  json record = json::object();
  json states = json::object();
  if (dump_states) states["injected"] = state_to_json(err_state);

  auto [stage, ancilla] = step1_remove_phase(err_state);
  record["step1_ancilla"] = state_to_json(ancilla);
  if (dump_states) states["step1"] = state_to_json(stage);

  if (steps != CorrectionSteps::One) {
    stage = step2_correct_phase(stage, label.p);
    if (dump_states) states["step2"] = state_to_json(stage);
  }
  if (steps == CorrectionSteps::All) {
    auto [corrected, diag] = step3_correct_parity(stage, label.q);
    stage = std::move(corrected);
    record["parity_diag"] = diag;
    if (dump_states) states["step3"] = state_to_json(stage);
  }
  record["phase_diff"] = nullptr;

  const double f = fidelity(target, stage);
  report.ok = f >= 1.0 - kCorrectOkTol;
  report.doc["record"] = std::move(record);
  report.doc["final_fidelity"] = f;
  report.doc["ok"] = report.ok;
  if (dump_states) report.doc["states"] = std::move(states);
  return report;
}

// ---- tomography ----------------------------------------------------------

// Reduced exact matrix, its reconstruction, and the comparison metrics.
// `pure_ref` names the intended pure target; when absent it is recovered
// from the reduced matrix if that matrix is pure.
inline json tomography_report(const StateVector& state, const WireList& wires,
                              std::int64_t shots, std::uint64_t seed,
                              std::optional<StateVector> pure_ref = {}) {
  const DensityMatrix rho_t = partial_trace(density_of(state), wires, state.dim_per_wire,
                                            state.wire_count);
  const DensityMatrix rho_e = reconstruct(state, wires, shots, seed);

  if (!pure_ref) {
    const double purity = (rho_t * rho_t).trace().real();
    if (std::abs(purity - 1.0) < 1e-9) {
      Eigen::SelfAdjointEigenSolver<MatrixT<double>> es(rho_t);
      Index top;
      es.eigenvalues().maxCoeff(&top);
      pure_ref = StateVector{2, static_cast<int>(wires.size()),
                             es.eigenvectors().col(top)};
    }
  }

  const auto m = metrics(rho_t, rho_e, pure_ref);
  return json{{"command", "tomography"},
              {"wires", wires},
              {"shots", shots},
              {"seed", seed},
              {"rho_t", density_to_json(rho_t)},
              {"rho_e", density_to_json(rho_e)},
              {"metrics", metrics_to_json(m, shots)}};
}

// ---- qudit round-trip verification ----------------------------------------

// Desk-scale guard: the correction circuits extend the register by one
// ancilla wire, so d^(n+1) amplitudes must stay manageable.
inline constexpr Index kVerifyGuard = 1000000;

inline const std::vector<double>& delta_grid() {
  static const std::vector<double> grid{0.0, std::numbers::pi / 8, std::numbers::pi / 3,
                                        std::numbers::pi};
  return grid;
}

struct VerifyReport {
  json doc;
  bool all_passed = false;
};

namespace detail {

inline bool round_trip_once(const GBSLabel& stored, const ErrorSpec& err, json& failures) {
  const auto [recovered, record] = autocorrect(inject(stored, err), stored);
  const double f = fidelity(gbs(stored), recovered);
  if (f >= 1.0 - kSimTol) return true;
  if (failures.size() < 10)
    failures.push_back(json{{"label", to_string(stored)},
                            {"error", error_spec_to_json(err)},
                            {"fidelity", f}});
  return false;
}

}  // namespace detail

// Exhaustive mode: every stored label x every erroneous (p', q') x every
// delta assignment from the grid. Random mode: `trials` draws with child
// seeds derived from (seed, trial).
inline VerifyReport qudit_verify_report(int d, int n, std::int64_t trials, bool exhaustive,
                                        std::uint64_t seed) {
  if (d < 2 || n < 2) throw OutOfRange("qudit-verify: need d >= 2, n >= 2");
  if (pow_index(d, n + 1) > kVerifyGuard)
    throw OutOfRange("qudit-verify: d^(n+1) exceeds the desk-scale guard");

  std::int64_t passed = 0, failed = 0;
  json failures = json::array();

  if (exhaustive) {
    const auto grid = delta_grid();
    const Index grid_total = pow_index(static_cast<int>(grid.size()), d);
    for (const auto& stored : all_labels(d, n))
      for (const auto& err_label : all_labels(d, n))
        for (Index g = 0; g < grid_total; ++g) {
          ErrorSpec err;
          err.p_err = err_label.p;
          err.q_err = err_label.q;
          Index rest = g;
          for (int j = 0; j < d; ++j) {
            err.deltas.push_back(grid[rest % grid.size()]);
            rest /= static_cast<Index>(grid.size());
          }
          (detail::round_trip_once(stored, err, failures) ? passed : failed)++;
        }
  } else {
    if (trials < 1) throw OutOfRange("qudit-verify: trials must be >= 1");
    for (std::int64_t t = 0; t < trials; ++t) {
      Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(t)));
      auto rand_digit = [&] { return static_cast<int>(rng.next_u64() % d); };
      GBSLabel stored{d, n, rand_digit(), {}};
      ErrorSpec err;
      err.p_err = rand_digit();
      for (int i = 0; i < n - 1; ++i) {
        stored.q.push_back(rand_digit());
        err.q_err.push_back(rand_digit());
      }
      for (int j = 0; j < d; ++j)
        err.deltas.push_back(2.0 * std::numbers::pi * rng.uniform01());
      (detail::round_trip_once(stored, err, failures) ? passed : failed)++;
    }
  }

  VerifyReport report;
  report.all_passed = failed == 0;
  report.doc = json{{"command", "qudit-verify"},
                    {"d", d},
                    {"n", n},
                    {"mode", exhaustive ? "exhaustive" : "random"},
                    {"trials", passed + failed},
                    {"seed", seed},
                    {"passed", passed},
                    {"failed", failed},
                    {"failures", std::move(failures)}};
  return report;
}

// ---- named experiment presets ---------------------------------------------

struct PresetResult {
  json doc;
  bool ok = false;
};

inline const std::vector<std::pair<std::string, std::string>>& preset_list() {
  static const std::vector<std::pair<std::string, std::string>> presets{
      {"fig3", "phase check of the GHZ state 2:3:1:1,0"},
      {"fig4", "parity checks of the GHZ state 2:3:1:1,0"},
      {"fig8", "full Bell correction: (|00>+e^{i pi/8}|11>)/sqrt2 -> 2:2:1:1"},
      {"fig9", "GHZ arbitrary-phase removal (stage 1)"},
      {"fig10", "GHZ phase-flip correction (stage 2)"},
      {"fig11", "GHZ bit-flip correction (stage 3) with stored parity 11"},
      {"tomo-phase-ghz", "tomography of wires 0-2 after the GHZ phase check"},
      {"tomo-phase-ancilla", "tomography of the phase-check ancilla wire"},
      {"tomo-parity-ghz", "tomography of wires 0-2 after both GHZ parity checks"},
      {"tomo-parity-ancilla", "tomography of the two parity-check ancilla wires"},
      {"tomo-bell", "tomography of the corrected Bell state"},
      {"tomo-ghz", "tomography of the corrected GHZ state"}};
  return presets;
}

namespace detail {

inline const GBSLabel& ghz_label() {
  static const GBSLabel label{2, 3, 1, {1, 0}};  // (|010> - |101>)/sqrt2
  return label;
}

inline ErrorSpec pi8_error(int n) {
  ErrorSpec err;
  err.deltas = {0.0, std::numbers::pi / 8};
  err.p_err = 0;
  err.q_err.assign(n - 1, 0);
  return err;
}

// Both parity-check ancillas attached to one register, as in the hardware
// run: wire 3 checks wires 0-1, wire 4 checks wires 1-2.
inline StateVector double_parity_register(const StateVector& system) {
  auto ext = tensor(tensor(system, basis_state(2, 1, 0)), basis_state(2, 1, 0));
  ext = apply(ext, controlled_shift(2), {0, 3});
  ext = apply(ext, controlled_shift(2, true), {1, 3});
  ext = apply(ext, controlled_shift(2), {1, 4});
  return apply(ext, controlled_shift(2, true), {2, 4});
}

}  // namespace detail

inline PresetResult run_preset(const std::string& name, std::int64_t shots, std::uint64_t seed) {
  PresetResult result;
  json& doc = result.doc;
  doc["preset"] = name;
  doc["shots"] = shots;
  doc["seed"] = seed;

  const auto& ghz_label = detail::ghz_label();

  if (name == "fig3") {
    const auto input = gbs(ghz_label);
    const auto check = phase_check(input, shots, seed);
    doc["phase"] = check_to_json(check);
    doc["post_fidelity"] = fidelity(input, check.post_state);
    result.ok = modal_outcome(check.distribution) == 1;
  } else if (name == "fig4") {
    const auto input = gbs(ghz_label);
    auto first = parity_check(input, 1, shots, Rng::derive(seed, 0));
    auto second = parity_check(first.post_state, 2, shots, Rng::derive(seed, 1));
    doc["parity"] = json::array({check_to_json(first), check_to_json(second)});
    doc["post_fidelity"] = fidelity(input, second.post_state);
    result.ok = modal_outcome(first.distribution) == 1 && modal_outcome(second.distribution) == 1;
  } else if (name == "fig8") {
    const GBSLabel bell_label{2, 2, 1, {1}};
    auto report = correct_report(bell_label, detail::pi8_error(2), CorrectionSteps::All, false);
    doc["result"] = std::move(report.doc);
    result.ok = report.ok;
  } else if (name == "fig9") {
    auto [stage, ancilla] = step1_remove_phase(inject(ghz_label, detail::pi8_error(3)));
    doc["step1_ancilla"] = state_to_json(ancilla);
    doc["fidelity_vs_psi000_plus"] = fidelity(gbs(GBSLabel{2, 3, 0, {0, 0}}), stage);
    result.ok = doc["fidelity_vs_psi000_plus"].get<double>() >= 1.0 - kSimTol;
  } else if (name == "fig10") {
    const auto stage = step2_correct_phase(gbs(GBSLabel{2, 3, 0, {0, 0}}), 1);
    doc["fidelity_vs_psi000_minus"] = fidelity(gbs(GBSLabel{2, 3, 1, {0, 0}}), stage);
    result.ok = doc["fidelity_vs_psi000_minus"].get<double>() >= 1.0 - kSimTol;
  } else if (name == "fig11") {
    auto [stage, diag] = step3_correct_parity(gbs(GBSLabel{2, 3, 1, {0, 0}}), ghz_label.q);
    doc["parity_diag"] = diag;
    doc["fidelity_vs_psi010_minus"] = fidelity(gbs(ghz_label), stage);
    result.ok = doc["fidelity_vs_psi010_minus"].get<double>() >= 1.0 - kSimTol &&
                diag == std::vector<int>{1, 0};
  } else if (name == "tomo-phase-ghz" || name == "tomo-phase-ancilla") {
    const auto ext = phase_check_register(gbs(ghz_label));
    const WireList wires = name == "tomo-phase-ghz" ? WireList{0, 1, 2} : WireList{3};
    std::optional<StateVector> ref;
    if (name == "tomo-phase-ghz") ref = gbs(ghz_label);
    else ref = basis_state(2, 1, 1);
    doc["result"] = tomography_report(ext, wires, shots, seed, ref);
    result.ok = true;
  } else if (name == "tomo-parity-ghz" || name == "tomo-parity-ancilla") {
    const auto ext = detail::double_parity_register(gbs(ghz_label));
    const WireList wires = name == "tomo-parity-ghz" ? WireList{0, 1, 2} : WireList{3, 4};
    std::optional<StateVector> ref;
    if (name == "tomo-parity-ghz") ref = gbs(ghz_label);
    else ref = basis_state(2, 2, 3);  // |11>
    doc["result"] = tomography_report(ext, wires, shots, seed, ref);
    result.ok = true;
  } else if (name == "tomo-bell") {
    const GBSLabel bell_label{2, 2, 1, {1}};
    auto [corrected, record] = autocorrect(inject(bell_label, detail::pi8_error(2)), bell_label);
    doc["result"] = tomography_report(corrected, {0, 1}, shots, seed, gbs(bell_label));
    result.ok = true;
  } else if (name == "tomo-ghz") {
    auto [corrected, record] = autocorrect(inject(ghz_label, detail::pi8_error(3)), ghz_label);
    doc["result"] = tomography_report(corrected, {0, 1, 2}, shots, seed, gbs(ghz_label));
    result.ok = true;
  } else {
    throw ParseError("unknown preset '" + name + "'");
  }
  return result;
}

}  // namespace quditec::reports
