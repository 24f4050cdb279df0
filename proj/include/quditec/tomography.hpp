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

#include <Eigen/Eigenvalues>
#include <optional>
#include <string>
#include <vector>

#include "quditec/circuit.hpp"

namespace quditec {

enum class Pauli { I, X, Y, Z };

// One operator per tomographed wire.
using PauliString = std::vector<Pauli>;

// shots value requesting Born-exact expectations instead of sampling.
inline constexpr std::int64_t kExactShots = 0;

inline char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

inline std::string to_string(const PauliString& ops) {
  std::string s;
  for (Pauli p : ops) s += pauli_char(p);
  return s;
}

// All 4^k strings over k wires, in base-4 order (I=0, X=1, Y=2, Z=3);
// the string's index doubles as its seed-derivation index.
inline std::vector<PauliString> all_pauli_strings(int k) {
  std::vector<PauliString> strings;
  for (Index code = 0; code < pow_index(4, k); ++code) {
    PauliString ops(k);
    Index rest = code;
    for (int i = k - 1; i >= 0; --i) {
      ops[i] = static_cast<Pauli>(rest % 4);
      rest /= 4;
    }
    strings.push_back(std::move(ops));
  }
  return strings;
}

template <typename Real = double>
MatrixT<Real> pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::I: return MatrixT<Real>::Identity(2, 2);
    case Pauli::X: return pauli_x<Real>().u;
    case Pauli::Y: return pauli_y<Real>().u;
    case Pauli::Z: return pauli_z<Real>().u;
  }
  throw UnknownGate("pauli_matrix: bad operator");
}

namespace detail {

template <typename Real>
void require_qubits(const BasicStateVector<Real>& s, const char* who) {
  if (s.dim_per_wire != 2)
    throw UnsupportedDimension(std::string(who) + ": tomography is defined for d = 2 only");
}

// Rotates each non-trivial wire into the measurement basis: H for X,
// S† then H for Y, nothing for Z/I.
template <typename Real>
BasicStateVector<Real> rotate_for(const BasicStateVector<Real>& s, const PauliString& ops,
                                  const WireList& wires) {
  BasicStateVector<Real> rotated = s;
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (ops[i] == Pauli::X) {
      rotated = apply(rotated, hadamard<Real>(), {wires[i]});
    } else if (ops[i] == Pauli::Y) {
      rotated = apply(rotated, sdg_gate<Real>(), {wires[i]});
      rotated = apply(rotated, hadamard<Real>(), {wires[i]});
    }
  }
  return rotated;
}

// (-1)^(sum of outcome bits on non-identity positions)
inline int outcome_sign(Index outcome, const PauliString& ops) {
  auto digits = outcome_digits(outcome, 2, static_cast<int>(ops.size()));
  int parity = 0;
  for (std::size_t i = 0; i < ops.size(); ++i)
    if (ops[i] != Pauli::I) parity ^= digits[i];
  return parity ? -1 : 1;
}

}  // namespace detail

// <Ψ|σ_{i1} ⊗ ... ⊗ σ_{ik}|Ψ> over the given wires. With shots == 0 the
// value is computed directly from the state; otherwise it is estimated
// from `shots` computational-basis samples after the basis rotations.
template <typename Real>
Real expectation(const BasicStateVector<Real>& state, const PauliString& ops,
                 const WireList& wires, std::int64_t shots, std::uint64_t seed) {
  detail::require_qubits(state, "expectation");
  if (ops.size() != wires.size())
    throw LengthMismatch("expectation: one operator per wire required");
  check_wires(wires, state.wire_count, "expectation");

  if (shots == kExactShots) {
    BasicStateVector<Real> transformed = state;
    for (std::size_t i = 0; i < wires.size(); ++i)
      if (ops[i] != Pauli::I)
        transformed = apply(transformed,
                            BasicGateMatrix<Real>{2, 1, pauli_matrix<Real>(ops[i])}, {wires[i]});
    return overlap(state, transformed).real();
  }

  const auto rotated = detail::rotate_for(state, ops, wires);
  const auto histogram = sample(rotated, wires, shots, seed);
  Real value = 0;
  for (const auto& [digits, count] : histogram.counts) {
    Index outcome = 0;
    for (char ch : digits) outcome = outcome * 2 + (ch - '0');
    value += Real(detail::outcome_sign(outcome, ops)) * Real(count);
  }
  return value / Real(shots);
}

// Linear-inversion density matrix over the tomographed wires:
//   ρ = (1/2^k) Σ_P <P> P
// summed over all 4^k Pauli strings. The identity string contributes
// exactly 1; every other string is estimated from its own fresh `shots`
// budget with the child seed (seed, string index). No positivity or
// Hermiticity repair is applied.
template <typename Real>
BasicDensityMatrix<Real> reconstruct(const BasicStateVector<Real>& state, const WireList& wires,
                                     std::int64_t shots, std::uint64_t seed) {
  detail::require_qubits(state, "reconstruct");
  check_wires(wires, state.wire_count, "reconstruct");
  const int k = static_cast<int>(wires.size());
  if (k > 3) throw InvalidWires("reconstruct: at most three wires");

  const Index dim = pow_index(2, k);
  BasicDensityMatrix<Real> rho = BasicDensityMatrix<Real>::Zero(dim, dim);
  const auto strings = all_pauli_strings(k);
  for (std::size_t idx = 0; idx < strings.size(); ++idx) {
    const auto& ops = strings[idx];
    // op = σ_{i1} ⊗ ... ⊗ σ_{ik}, built right to left so position 0 is the
    // leftmost (most significant) factor
    MatrixT<Real> op = MatrixT<Real>::Identity(1, 1);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
      const auto pm = pauli_matrix<Real>(*it);
      MatrixT<Real> next(op.rows() * 2, op.cols() * 2);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          next.block(r * op.rows(), c * op.cols(), op.rows(), op.cols()) = pm(r, c) * op;
      op = std::move(next);
    }
    const bool trivial = idx == 0;  // the all-identity string
    const Real ev = trivial ? Real(1)
                            : expectation(state, ops, wires, shots,
                                          Rng::derive(seed, static_cast<std::uint64_t>(idx)));
    rho += (ev / Real(dim)) * op;
  }
  return rho;
}

// Element-wise deviation statistics in three views: modulus of the complex
// difference, real parts only, imaginary parts only.
template <typename Real = double>
struct DeviationStats {
  Real abs = 0;
  Real re = 0;
  Real im = 0;
};

template <typename Real = double>
struct BasicMetrics {
  std::optional<Real> fidelity_pure;  // √(<Ψ|ρ^E|Ψ>), when a pure reference is given
  Real fidelity_general = 0;          // Tr √(√ρ^T ρ^E √ρ^T)
  DeviationStats<Real> avg_abs_dev;
  DeviationStats<Real> max_abs_dev;
};

using Metrics = BasicMetrics<double>;

// √(<Ψ|ρ|Ψ>), clamped below at 0; finite-shot matrices may push the
// quadratic form slightly past 1 and are left there.
template <typename Real>
Real fidelity_pure_of(const BasicDensityMatrix<Real>& rho, const BasicStateVector<Real>& ref) {
  if (rho.rows() != ref.size())
    throw DimensionMismatch("fidelity_pure_of: dimension mismatch");
  const ComplexT<Real> q = (ref.amplitudes.adjoint() * rho * ref.amplitudes)(0, 0);
  return std::sqrt(std::max(q.real(), Real(0)));
}

// Tr √(√ρ^T ρ^E √ρ^T) via the eigenvalues of the product; ρ^T must be
// Hermitian PSD (true for theoretical matrices), ρ^E may be raw.
template <typename Real>
Real fidelity_general_of(const BasicDensityMatrix<Real>& rho_t,
                         const BasicDensityMatrix<Real>& rho_e) {
  if (rho_t.rows() != rho_e.rows() || rho_t.cols() != rho_e.cols())
    throw DimensionMismatch("fidelity_general_of: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<MatrixT<Real>> es(rho_t);
  MatrixT<Real> sqrt_t = MatrixT<Real>::Zero(rho_t.rows(), rho_t.cols());
  for (Index i = 0; i < es.eigenvalues().size(); ++i) {
    const Real lam = std::max(es.eigenvalues()[i], Real(0));
    sqrt_t += std::sqrt(lam) * es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  }
  const MatrixT<Real> m = sqrt_t * rho_e * sqrt_t;
  Eigen::ComplexEigenSolver<MatrixT<Real>> ces(m, /*computeEigenvectors=*/false);
  Real f = 0;
  for (Index i = 0; i < ces.eigenvalues().size(); ++i)
    f += std::sqrt(std::max(ces.eigenvalues()[i].real(), Real(0)));
  return f;
}

template <typename Real>
BasicMetrics<Real> metrics(const BasicDensityMatrix<Real>& rho_t,
                           const BasicDensityMatrix<Real>& rho_e,
                           const std::optional<BasicStateVector<Real>>& pure_ref = {}) {
  if (rho_t.rows() != rho_e.rows() || rho_t.cols() != rho_e.cols())
    throw DimensionMismatch("metrics: dimension mismatch");
  BasicMetrics<Real> m;
  const Real cells = Real(rho_t.rows()) * Real(rho_t.cols());
  for (Index r = 0; r < rho_t.rows(); ++r)
    for (Index c = 0; c < rho_t.cols(); ++c) {
      const ComplexT<Real> diff = rho_t(r, c) - rho_e(r, c);
      const Real da = std::abs(diff);
      const Real dr = std::abs(diff.real());
      const Real di = std::abs(diff.imag());
      m.avg_abs_dev.abs += da / cells;
      m.avg_abs_dev.re += dr / cells;
      m.avg_abs_dev.im += di / cells;
      m.max_abs_dev.abs = std::max(m.max_abs_dev.abs, da);
      m.max_abs_dev.re = std::max(m.max_abs_dev.re, dr);
      m.max_abs_dev.im = std::max(m.max_abs_dev.im, di);
    }
  m.fidelity_general = fidelity_general_of(rho_t, rho_e);
  if (pure_ref) m.fidelity_pure = fidelity_pure_of(rho_e, *pure_ref);
  return m;
}

}  // namespace quditec
