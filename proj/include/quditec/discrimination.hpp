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

#include "quditec/circuit.hpp"
#include "quditec/gbs.hpp"

namespace quditec {

// A sampled histogram must put at least this share on one outcome before a
// check commits to it. The exact simulator yields point masses for states
// in the GBS family, so this only matters for sampling flukes and inputs
// outside the family.
inline constexpr double kDecisionThreshold = 0.90;

namespace detail {

// Modal outcome and its share, from counts when sampled, else from the
// exact distribution.
template <typename Real>
std::pair<Index, double> modal_share(const BasicCheckOutcome<Real>& out) {
  if (out.sampled && out.sampled->shots > 0) {
    const Index o = modal_outcome(*out.sampled, out.dim_per_wire,
                                  static_cast<int>(out.wires.size()));
    const auto it = out.sampled->counts.find(
        outcome_string(o, out.dim_per_wire, static_cast<int>(out.wires.size())));
    const std::int64_t c = it == out.sampled->counts.end() ? 0 : it->second;
    return {o, static_cast<double>(c) / static_cast<double>(out.sampled->shots)};
  }
  const Index o = modal_outcome(out.distribution);
  return {o, static_cast<double>(out.distribution[o])};
}

// Measures the last wire (the ancilla), records distribution/histogram,
// and leaves post_state with the ancilla collapsed on the modal outcome
// and removed.
template <typename Real>
BasicCheckOutcome<Real> read_ancilla(const BasicStateVector<Real>& ext, std::int64_t shots,
                                     std::uint64_t seed) {
  const int anc = ext.wire_count - 1;
  BasicCheckOutcome<Real> out = measure_exact(ext, {anc});
  if (shots > 0) out.sampled = sample(ext, {anc}, shots, seed);
  const Index modal = modal_share(out).first;
  out.post_state = slice_wire(project_outcome(ext, {anc}, modal), anc, static_cast<int>(modal));
  return out;
}

}  // namespace detail

// System ⊗ |0_A> after the phase-check gates: H_d on the ancilla,
// controlled shifts from the ancilla onto every system wire, H_d† on the
// ancilla. The ancilla is the last wire.
template <typename Real>
BasicStateVector<Real> phase_check_register(const BasicStateVector<Real>& system) {
  const int d = system.dim_per_wire, n = system.wire_count;
  auto ext = tensor(system, basis_state<Real>(d, 1, 0));
  ext = apply(ext, gen_h<Real>(d), {n});
  const auto cshift = controlled_shift<Real>(d);
  for (int m = 0; m < n; ++m) ext = apply(ext, cshift, {n, m});
  return apply(ext, gen_h_dag<Real>(d), {n});
}

// System ⊗ |0_{A_i}> after the parity-check gates for wire i: shift the
// ancilla by wire i-1, unshift it by wire i (adjoint).
template <typename Real>
BasicStateVector<Real> parity_check_register(const BasicStateVector<Real>& system, int i) {
  const int d = system.dim_per_wire, n = system.wire_count;
  if (i < 1 || i > n - 1) throw InvalidWires("parity_check: i must be in [1, n-1]");
  auto ext = tensor(system, basis_state<Real>(d, 1, 0));
  ext = apply(ext, controlled_shift<Real>(d), {i - 1, n});
  return apply(ext, controlled_shift<Real>(d, /*adjoint=*/true), {i, n});
}

// Phase check: for a GBS input the ancilla reads the phase index p with
// certainty and the system survives untouched.
template <typename Real>
BasicCheckOutcome<Real> phase_check(const BasicStateVector<Real>& system, std::int64_t shots,
                                    std::uint64_t seed) {
  return detail::read_ancilla(phase_check_register(system), shots, seed);
}

// Parity check for wire i (1 <= i <= n-1): the ancilla reads the relative
// parity q_i - q_{i-1} mod d.
template <typename Real>
BasicCheckOutcome<Real> parity_check(const BasicStateVector<Real>& system, int i,
                                     std::int64_t shots, std::uint64_t seed) {
  return detail::read_ancilla(parity_check_register(system, i), shots, seed);
}

template <typename Real = double>
struct DiscriminationResult {
  GBSLabel label;
  BasicStateVector<Real> post_state;
  BasicCheckOutcome<Real> phase;
  std::vector<BasicCheckOutcome<Real>> parity;
};

// Runs the phase check and then every parity check sequentially on the
// surviving state; classifies the outcomes. Check k uses the child seed
// derived from (seed, k). Throws AmbiguousOutcome when any check's modal
// share falls below the decision threshold.
template <typename Real>
DiscriminationResult<Real> discriminate(const BasicStateVector<Real>& system, int d, int n,
                                        std::int64_t shots, std::uint64_t seed) {
  if (system.dim_per_wire != d || system.wire_count != n)
    throw DimensionMismatch("discriminate: state does not match (d, n)");
  if (n < 2) throw InvalidWires("discriminate: need at least two wires");

  DiscriminationResult<Real> result;
  result.phase = phase_check(system, shots, Rng::derive(seed, 0));
  auto [phase_outcome, phase_share] = detail::modal_share(result.phase);
  if (phase_share < kDecisionThreshold)
    throw AmbiguousOutcome("discriminate: phase outcome share " + std::to_string(phase_share) +
                           " below threshold");

  BasicStateVector<Real> current = result.phase.post_state;
  std::vector<int> parity_outcomes;
  for (int i = 1; i <= n - 1; ++i) {
    auto check = parity_check(current, i, shots, Rng::derive(seed, static_cast<std::uint64_t>(i)));
    auto [outcome, share] = detail::modal_share(check);
    if (share < kDecisionThreshold)
      throw AmbiguousOutcome("discriminate: parity " + std::to_string(i) + " outcome share " +
                             std::to_string(share) + " below threshold");
    parity_outcomes.push_back(static_cast<int>(outcome));
    current = check.post_state;
    result.parity.push_back(std::move(check));
  }

  result.label = classify(static_cast<int>(phase_outcome), parity_outcomes, d, n);
  result.post_state = std::move(current);
  return result;
}

}  // namespace quditec
