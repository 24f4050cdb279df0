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

// Experiment runner. Exit codes: 0 success, 1 bad input, 2 ambiguous
// discrimination outcome, 3 correction input failed to factorize.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "quditec/reports.hpp"

namespace {

using namespace quditec;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitAmbiguous = 2;
constexpr int kExitNotFactorizable = 3;

void print_histogram(const json& check, const std::string& name) {
  std::cout << name << ": modal outcome " << check["outcome"] << "\n";
  if (check.contains("histogram")) {
    for (const auto& [outcome, count] : check["histogram"]["counts"].items())
      std::cout << "  " << outcome << ": " << count << "\n";
  } else {
    const auto& dist = check["distribution"];
    for (std::size_t o = 0; o < dist.size(); ++o)
      if (dist[o].get<double>() > 1e-12)
        std::cout << "  p(" << o << ") = " << dist[o].get<double>() << "\n";
  }
}

WireList parse_wire_list(const std::string& text) {
  WireList wires;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw ParseError("wires: empty entry in '" + text + "'");
    wires.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') flush();
    else if (std::isdigit(static_cast<unsigned char>(ch))) cur += ch;
    else throw ParseError("wires: bad character in '" + text + "'");
  }
  flush();
  return wires;
}

int run_discriminate(const std::string& label_text, std::int64_t shots, std::uint64_t seed,
                     bool json_out) {
  const auto label = parse_label(label_text);
  const auto report = reports::discriminate_report(label, shots, seed);
  if (json_out) {
    std::cout << report.doc.dump(2) << "\n";
  } else {
    std::cout << "state:    " << label_text << "\n";
    print_histogram(report.doc["phase"], "phase");
    for (std::size_t i = 0; i < report.doc["parity"].size(); ++i)
      print_histogram(report.doc["parity"][i], "parity " + std::to_string(i + 1));
    std::cout << "inferred: " << report.doc["inferred"].get<std::string>() << "\n"
              << "post-state fidelity: " << report.doc["post_fidelity"].get<double>() << "\n";
  }
  return report.correct ? kExitOk : kExitBadInput;
}

int run_correct(const std::string& label_text, const std::string& error_file,
                const std::string& steps_text, bool dump_states, bool json_out) {
  const auto label = parse_label(label_text);
  std::ifstream in(error_file);
  if (!in) throw ParseError("cannot open error file '" + error_file + "'");
  json err_json;
  try {
    in >> err_json;
  } catch (const json::exception& e) {
    throw ParseError(std::string("error file: ") + e.what());
  }
  const auto err = error_spec_from_json(err_json);
  const auto steps = reports::parse_steps(steps_text);
  const auto report = reports::correct_report(label, err, steps, dump_states);
  if (json_out) {
    std::cout << report.doc.dump(2) << "\n";
  } else {
    std::cout << "target:  " << label_text << "\n"
              << "steps:   " << report.doc["steps"].get<std::string>() << "\n";
    if (report.doc["record"].contains("parity_diag"))
      std::cout << "parity diagnostic: " << report.doc["record"]["parity_diag"].dump() << "\n";
    std::cout << "final fidelity: " << report.doc["final_fidelity"].get<double>() << "\n";
  }
  return report.ok ? kExitOk : kExitBadInput;
}

int run_tomography(const std::string& label_text, const std::string& circuit_file,
                   std::string wires_text, std::int64_t shots, bool exact, std::uint64_t seed,
                   bool json_out) {
  StateVector state;
  if (!circuit_file.empty()) {
    std::ifstream in(circuit_file);
    if (!in) throw ParseError("cannot open circuit file '" + circuit_file + "'");
    const auto circuit = parse_circuit<double>(in);
    state = run(circuit, basis_state(circuit.dim_per_wire, circuit.wire_count, 0), 0, seed)
                .final_state;
  } else if (!label_text.empty()) {
    state = gbs(parse_label(label_text));
  } else {
    throw ParseError("tomography: give a label or --circuit FILE");
  }
  WireList wires;
  if (wires_text.empty()) {
    for (int w = 0; w < state.wire_count; ++w) wires.push_back(w);
  } else {
    wires = parse_wire_list(wires_text);
  }
  check_wires(wires, state.wire_count, "tomography");
  const auto doc = reports::tomography_report(state, wires, exact ? kExactShots : shots, seed);
  if (json_out) {
    std::cout << doc.dump(2) << "\n";
  } else {
    const auto& m = doc["metrics"];
    std::cout << "wires: " << doc["wires"].dump() << "\n";
    if (m.contains("fidelity_pure"))
      std::cout << "fidelity (pure):    " << m["fidelity_pure"].get<double>() << "\n";
    std::cout << "fidelity (general): " << m["fidelity_general"].get<double>() << "\n"
              << "avg |dev|: " << m["avg_abs_dev"]["abs"].get<double>() << "\n"
              << "max |dev|: " << m["max_abs_dev"]["abs"].get<double>() << "\n";
  }
  return kExitOk;
}

int run_verify(int d, int n, const std::string& trials_text, std::uint64_t seed, bool json_out) {
  const bool exhaustive = trials_text == "all";
  std::int64_t trials = 0;
  if (!exhaustive) {
    try {
      trials = std::stoll(trials_text);
    } catch (...) {
      throw ParseError("trials: expected a count or 'all'");
    }
  }
  const auto report = reports::qudit_verify_report(d, n, trials, exhaustive, seed);
  if (json_out) {
    std::cout << report.doc.dump(2) << "\n";
  } else {
    std::cout << report.doc["passed"].get<std::int64_t>() << "/"
              << report.doc["trials"].get<std::int64_t>() << " round trips passed\n";
  }
  return report.all_passed ? kExitOk : kExitBadInput;
}

// Presets emit their full JSON document either way; --json only suppresses
// the trailing status line.
int run_named_preset(const std::string& name, std::int64_t shots, std::uint64_t seed,
                     bool json_out) {
  const auto result = reports::run_preset(name, shots, seed);
  std::cout << result.doc.dump(2) << "\n";
  if (!json_out) std::cerr << "preset " << name << (result.ok ? ": ok" : ": FAILED") << "\n";
  return result.ok ? kExitOk : kExitBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qudit entanglement discrimination, correction and tomography experiments"};
  app.require_subcommand(0, 1);

  std::string preset_name;
  std::int64_t shots = reports::kDefaultShots;
  std::uint64_t seed = 0;
  bool json_out = false;

  std::string preset_help = "named experiment preset; one of:";
  for (const auto& [name, desc] : reports::preset_list())
    preset_help += "\n  " + name + ": " + desc;
  app.add_option("--preset", preset_name, preset_help);
  app.add_option("--shots", shots, "shots per measurement (0 = exact mode)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "base RNG seed");
  app.add_flag("--json", json_out, "machine-readable JSON on stdout");

  // discriminate
  auto* disc = app.add_subcommand("discriminate", "identify a generalized Bell state");
  std::string disc_label;
  std::int64_t disc_shots = reports::kDefaultShots;
  std::uint64_t disc_seed = 0;
  bool disc_json = false;
  disc->add_option("label", disc_label, "state label d:n:p:q1,q2,...")->required();
  disc->add_option("--shots", disc_shots, "shots per check (0 = exact mode)")->check(CLI::NonNegativeNumber);
  disc->add_option("--seed", disc_seed, "base RNG seed");
  disc->add_flag("--json", disc_json, "JSON output");

  // correct
  auto* corr = app.add_subcommand("correct", "inject an error and run the correction pipeline");
  std::string corr_label, corr_error, corr_steps = "all";
  bool corr_dump = false, corr_json = false;
  corr->add_option("label", corr_label, "stored (intended) label")->required();
  corr->add_option("--error", corr_error, "ErrorSpec JSON file")->required();
  corr->add_option("--steps", corr_steps, "run through step 1|2|3|all (default all)");
  corr->add_flag("--dump-states", corr_dump, "include per-step states in the report");
  corr->add_flag("--json", corr_json, "JSON output");

  // tomography
  auto* tomo = app.add_subcommand("tomography", "reconstruct a density matrix from shots");
  std::string tomo_label, tomo_circuit, tomo_wires;
  std::int64_t tomo_shots = reports::kDefaultShots;
  std::uint64_t tomo_seed = 0;
  bool tomo_exact = false, tomo_json = false;
  tomo->add_option("label", tomo_label, "state label d:n:p:q1,q2,...");
  tomo->add_option("--circuit", tomo_circuit, "circuit file (REGISTER/GATE/MEASURE grammar)");
  tomo->add_option("--wires", tomo_wires, "comma-separated wires to tomograph (default all)");
  tomo->add_option("--shots", tomo_shots, "shots per Pauli setting")->check(CLI::NonNegativeNumber);
  tomo->add_option("--seed", tomo_seed, "base RNG seed");
  tomo->add_flag("--exact", tomo_exact, "Born-exact expectations instead of sampling");
  tomo->add_flag("--json", tomo_json, "JSON output");

  // qudit-verify
  auto* verify = app.add_subcommand("qudit-verify", "randomized/exhaustive correction round trips");
  int verify_d = 2, verify_n = 2;
  std::string verify_trials = "200";
  std::uint64_t verify_seed = 0;
  bool verify_json = false;
  verify->add_option("--d", verify_d, "qudit dimension")->required();
  verify->add_option("--n", verify_n, "wire count")->required();
  verify->add_option("--trials", verify_trials, "trial count, or 'all' for exhaustive");
  verify->add_option("--seed", verify_seed, "base RNG seed");
  verify->add_flag("--json", verify_json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (disc->parsed()) return run_discriminate(disc_label, disc_shots, disc_seed, disc_json);
    if (corr->parsed()) return run_correct(corr_label, corr_error, corr_steps, corr_dump, corr_json);
    if (tomo->parsed())
      return run_tomography(tomo_label, tomo_circuit, tomo_wires, tomo_shots, tomo_exact,
                            tomo_seed, tomo_json);
    if (verify->parsed()) return run_verify(verify_d, verify_n, verify_trials, verify_seed,
                                            verify_json);
    if (!preset_name.empty()) return run_named_preset(preset_name, shots, seed, json_out);
    std::cerr << app.help() << "\n";
    return kExitBadInput;
  } catch (const quditec::AmbiguousOutcome& e) {
    std::cerr << "ambiguous outcome: " << e.what() << "\n";
    return kExitAmbiguous;
  } catch (const quditec::NotFactorizable& e) {
    std::cerr << "not factorizable: " << e.what() << "\n";
    return kExitNotFactorizable;
  } catch (const quditec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
