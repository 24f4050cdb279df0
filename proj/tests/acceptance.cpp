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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "quditec/reports.hpp"

using namespace quditec;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Table1Row {
  GBSLabel label;
  int phase;                // the |phi> column
  std::vector<int> parity;  // the |p> column, one digit per check
};

// Frozen discrimination table for the four Bell and eight GHZ states.
std::vector<Table1Row> table1() {
  std::vector<Table1Row> rows;
  for (int p : {0, 1})
    for (int q : {0, 1}) rows.push_back({GBSLabel{2, 2, p, {q}}, p, {q}});
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> ghz_rows = {
      {{0, 0}, {0, 0}},  // |Psi_000>: parity 00
      {{0, 1}, {0, 1}},  // |Psi_001>: parity 01
      {{1, 0}, {1, 1}},  // |Psi_010>: parity 11
      {{1, 1}, {1, 0}},  // |Psi_011>: parity 10
  };
  for (const auto& [q, parity] : ghz_rows)
    for (int p : {0, 1}) rows.push_back({GBSLabel{2, 3, p, q}, p, parity});
  return rows;
}

ErrorSpec pi8_error(int n) {
  ErrorSpec err;
  err.deltas = {0.0, std::numbers::pi / 8};
  err.p_err = 0;
  err.q_err.assign(n - 1, 0);
  return err;
}

// The five tomography configurations of the hardware runs: (register,
// tomographed wires, pure reference).
struct TomoTarget {
  std::string name;
  StateVector state;
  WireList wires;
  StateVector ref;
};

std::vector<TomoTarget> tomo_targets() {
  const GBSLabel ghz_label{2, 3, 1, {1, 0}};
  const auto ghz_state = gbs(ghz_label);

  const auto phase_ctx = phase_check_register(ghz_state);

  auto parity_ctx = tensor(tensor(ghz_state, basis_state(2, 1, 0)), basis_state(2, 1, 0));
  parity_ctx = apply(parity_ctx, controlled_shift(2), {0, 3});
  parity_ctx = apply(parity_ctx, controlled_shift(2, true), {1, 3});
  parity_ctx = apply(parity_ctx, controlled_shift(2), {1, 4});
  parity_ctx = apply(parity_ctx, controlled_shift(2, true), {2, 4});

  const GBSLabel bell_label{2, 2, 1, {1}};
  const auto bell_fixed = autocorrect(inject(bell_label, pi8_error(2)), bell_label).first;

  return {{"ghz-phase-check", phase_ctx, {0, 1, 2}, ghz_state},
          {"ghz-parity-check", parity_ctx, {0, 1, 2}, ghz_state},
          {"phase-ancilla", phase_ctx, {3}, basis_state(2, 1, 1)},
          {"parity-ancilla", parity_ctx, {3, 4}, basis_state(2, 2, 3)},
          {"bell-corrected", bell_fixed, {0, 1}, gbs(bell_label)}};
}

void criterion_1_and_2() {
  const auto t0 = std::chrono::steady_clock::now();
  bool identified = true, nondestructive = true;
  std::string first_bad;
  for (const auto& row : table1()) {
    const auto input = gbs(row.label);

    // exact mode: outcomes must match the frozen table
    const auto exact = discriminate(input, row.label.d, row.label.n, 0, 0);
    bool row_ok = exact.label == row.label && modal_outcome(exact.phase.distribution) == row.phase;
    for (std::size_t i = 0; i < exact.parity.size(); ++i)
      row_ok = row_ok && modal_outcome(exact.parity[i].distribution) == row.parity[i];

    // sampled mode: modal share at least 99% on every check
    const auto sampled = discriminate(input, row.label.d, row.label.n, 8192, 7);
    row_ok = row_ok && sampled.label == row.label;
    auto share_ok = [](const CheckOutcome& c) {
      const Index o = modal_outcome(*c.sampled, c.dim_per_wire, 1);
      return c.sampled->counts.at(outcome_string(o, c.dim_per_wire, 1)) >= 8192 * 99 / 100;
    };
    row_ok = row_ok && share_ok(sampled.phase);
    for (const auto& check : sampled.parity) row_ok = row_ok && share_ok(check);

    if (!row_ok && first_bad.empty()) first_bad = to_string(row.label);
    identified = identified && row_ok;

    nondestructive = nondestructive && fidelity(input, exact.post_state) >= 1.0 - kSimTol &&
                     fidelity(input, sampled.post_state) >= 1.0 - kSimTol;
  }
  const double dt = seconds_since(t0);
  report(1, identified && dt < 1.0,
         "Table-1 discrimination, exact + 8192-shot (" +
             (identified ? "all 12 states" : "mismatch at " + first_bad) + ", " +
             std::to_string(dt) + " s)");
  report(2, nondestructive, "post-check fidelity 1 within 1e-10 for all 12 states");
}

void criterion_3() {
  const GBSLabel stored{2, 2, 1, {1}};
  const auto [fixed, record] = autocorrect(inject(stored, pi8_error(2)), stored);
  const double f = fidelity(fixed, bell(1, 1));
  report(3, f >= 1.0 - 1e-10,
         "Bell correction to (|01>-|10>)/sqrt2, fidelity " + std::to_string(f));
}

void criterion_4() {
  const auto [stage1, anc] = step1_remove_phase(inject(GBSLabel{2, 3, 1, {1, 0}}, pi8_error(3)));
  const double f1 = fidelity(stage1, ghz('+', 0, 0));
  const auto stage2 = step2_correct_phase(stage1, 1);
  const double f2 = fidelity(stage2, ghz('-', 0, 0));
  const auto [stage3, diag] = step3_correct_parity(stage2, {1, 0});
  const double f3 = fidelity(stage3, ghz('-', 1, 0));
  const bool ok = f1 >= 1.0 - 1e-10 && f2 >= 1.0 - 1e-10 && f3 >= 1.0 - 1e-10 &&
                  diag == std::vector<int>{1, 0};
  report(4, ok,
         "GHZ three-stage pipeline, stage fidelities " + std::to_string(f1) + "/" +
             std::to_string(f2) + "/" + std::to_string(f3) + ", final parity ancilla \"" +
             std::to_string(diag[0]) + std::to_string(diag[1]) + "\"");
}

void criterion_5() {
  // final-parity diagnostic table: rows by erroneous offsets, columns by
  // prepared (relative) parities
  const int table[4][4][2] = {
      {{0, 0}, {0, 1}, {1, 1}, {1, 0}},  // state 000
      {{0, 1}, {0, 0}, {1, 0}, {1, 1}},  // state 001
      {{1, 0}, {1, 1}, {0, 1}, {0, 0}},  // state 010
      {{1, 1}, {1, 0}, {0, 0}, {0, 1}},  // state 011
  };
  const std::vector<std::vector<int>> q_errs = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  bool ok = true;
  for (int row = 0; row < 4; ++row)
    for (int s1 : {0, 1})
      for (int s2 : {0, 1}) {
        const std::vector<int> stored_q{s1, (s1 + s2) % 2};
        const auto [state, diag] =
            step3_correct_parity(gbs(GBSLabel{2, 3, 0, q_errs[row]}), stored_q);
        const int col = s1 * 2 + s2;
        ok = ok && diag[0] == table[row][col][0] && diag[1] == table[row][col][1] &&
             fidelity(state, gbs(GBSLabel{2, 3, 0, stored_q})) >= 1.0 - kSimTol;
      }
  report(5, ok, "all 16 cells of the final-parity diagnostic table");
}

void criterion_6() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto ex22 = reports::qudit_verify_report(2, 2, 0, true, 0);
  const auto ex23 = reports::qudit_verify_report(2, 3, 0, true, 0);
  const auto r32 = reports::qudit_verify_report(3, 2, 200, false, 5);
  const auto r33 = reports::qudit_verify_report(3, 3, 200, false, 6);
  const auto r52 = reports::qudit_verify_report(5, 2, 200, false, 7);
  const double dt = seconds_since(t0);
  const bool ok = ex22.all_passed && ex23.all_passed && r32.all_passed && r33.all_passed &&
                  r52.all_passed && dt < 30.0;
  const auto count = [](const reports::VerifyReport& r) {
    return r.doc["trials"].get<std::int64_t>();
  };
  report(6, ok,
         "round trips: exhaustive d=2 (" + std::to_string(count(ex22)) + "+" +
             std::to_string(count(ex23)) + " cases), 200 random each for (3,2),(3,3),(5,2) (" +
             std::to_string(dt) + " s)");
}

void criterion_7() {
  bool ok = true;
  for (int d : {2, 3, 4, 5, 7}) {
    const auto z = gen_z(d), x = gen_x(d), h = gen_h(d);
    const MatrixT<double> id = MatrixT<double>::Identity(d, d);
    ok = ok && (h.u * z.u * h.u.adjoint() - x.u).cwiseAbs().maxCoeff() < 1e-10;
    MatrixT<double> zp = id, xp = id;
    for (int k = 0; k < d; ++k) {
      zp *= z.u;
      xp *= x.u;
    }
    ok = ok && (zp - id).cwiseAbs().maxCoeff() < 1e-10 &&
         (xp - id).cwiseAbs().maxCoeff() < 1e-10;
    for (const auto& g :
         {z, x, h, controlled_shift(d), controlled_shift(d, true), controlled_zpow(d)}) {
      const MatrixT<double> gid = MatrixT<double>::Identity(g.u.rows(), g.u.cols());
      ok = ok && (g.u * g.u.adjoint() - gid).cwiseAbs().maxCoeff() < 1e-10;
    }
  }
  report(7, ok, "X_d = H_d Z_d H_d^dag, (Z_d)^d = (X_d)^d = I, unitarity for d in {2,3,4,5,7}");
}

void criterion_8() {
  bool ok = true;
  std::string bad;
  for (const auto& target : tomo_targets()) {
    const auto rho = reconstruct(target.state, target.wires, kExactShots, 0);
    const auto oracle =
        partial_trace(density_of(target.state), target.wires, 2, target.state.wire_count);
    const double dev_oracle = (rho - oracle).cwiseAbs().maxCoeff();
    const double dev_ref = (rho - density_of(target.ref)).cwiseAbs().maxCoeff();
    if (dev_oracle >= 1e-10 || dev_ref >= 1e-10) {
      ok = false;
      if (bad.empty()) bad = target.name;
    }
  }
  report(8, ok,
         ok ? "exact reconstruction matches the outer-product oracle on all five targets"
            : "exact reconstruction mismatch at " + bad);
}

void criterion_9() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (const auto& target : tomo_targets()) {
    const auto rho_t =
        partial_trace(density_of(target.state), target.wires, 2, target.state.wire_count);
    int passes = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto rho_e = reconstruct(target.state, target.wires, 8192, seed);
      const auto m = metrics(rho_t, rho_e, std::optional<StateVector>(target.ref));
      if (*m.fidelity_pure >= 0.99 && m.avg_abs_dev.abs <= 0.01) ++passes;
    }
    detail += target.name + " " + std::to_string(passes) + "/100 ";
    ok = ok && passes >= 99;
  }
  report(9, ok,
         "sampled tomography at 8192 shots/setting: " + detail + "(" +
             std::to_string(seconds_since(t0)) + " s)");
}

void criterion_10() {
  const auto label = parse_label("2:3:1:1,0");
  const auto d1 = reports::discriminate_report(label, 8192, 7).doc.dump();
  const auto d2 = reports::discriminate_report(label, 8192, 7).doc.dump();

  const auto c1 =
      reports::correct_report(label, pi8_error(3), reports::CorrectionSteps::All, true).doc.dump();
  const auto c2 =
      reports::correct_report(label, pi8_error(3), reports::CorrectionSteps::All, true).doc.dump();

  const auto targets = tomo_targets();
  const auto t1 =
      reports::tomography_report(targets[4].state, targets[4].wires, 8192, 5, targets[4].ref)
          .dump();
  const auto t2 =
      reports::tomography_report(targets[4].state, targets[4].wires, 8192, 5, targets[4].ref)
          .dump();

  report(10, d1 == d2 && c1 == c2 && t1 == t2,
         "byte-identical JSON for repeated discriminate/correct/tomography runs");
}

}  // namespace

int main() {
  criterion_1_and_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
