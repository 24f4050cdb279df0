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

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "quditec/state.hpp"

namespace quditec {

// Explicit unitary on 1 or 2 wires of a d-level register. Two-wire gates
// are stored in (control ⊗ target) order; arbitrary wire placement is the
// circuit engine's job.
template <typename Real = double>
struct BasicGateMatrix {
  int dim_per_wire = 2;
  int arity = 1;
  MatrixT<Real> u;
};

using GateMatrix = BasicGateMatrix<double>;

// e^{2πi·power/d}
template <typename Real = double>
ComplexT<Real> root_of_unity(int d, long long power) {
  const Real angle = Real(2) * std::numbers::pi_v<Real> * Real(power) / Real(d);
  return std::polar(Real(1), angle);
}

namespace detail {
inline void require_dim(int d, const char* who) {
  if (d < 2) throw InvalidDimension(std::string(who) + ": d must be >= 2");
}
}  // namespace detail

// Z_d|j> = e^{2πij/d}|j>
template <typename Real = double>
BasicGateMatrix<Real> gen_z(int d) {
  detail::require_dim(d, "gen_z");
  MatrixT<Real> u = MatrixT<Real>::Zero(d, d);
  for (int j = 0; j < d; ++j) u(j, j) = root_of_unity<Real>(d, j);
  return {d, 1, std::move(u)};
}

// X_d|j> = |j-1 mod d>
template <typename Real = double>
BasicGateMatrix<Real> gen_x(int d) {
  detail::require_dim(d, "gen_x");
  MatrixT<Real> u = MatrixT<Real>::Zero(d, d);
  for (int j = 0; j < d; ++j) u(mod_d(j - 1, d), j) = ComplexT<Real>(1, 0);
  return {d, 1, std::move(u)};
}

// H_d|j> = (1/√d) Σ_k e^{2πijk/d}|k>   (the d-point Fourier kernel;
// Hermitian only for d = 2)
template <typename Real = double>
BasicGateMatrix<Real> gen_h(int d) {
  detail::require_dim(d, "gen_h");
  const Real scale = Real(1) / std::sqrt(Real(d));
  MatrixT<Real> u(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) u(k, j) = scale * root_of_unity<Real>(d, 1LL * j * k);
  return {d, 1, std::move(u)};
}

template <typename Real = double>
BasicGateMatrix<Real> dagger(const BasicGateMatrix<Real>& g) {
  return {g.dim_per_wire, g.arity, g.u.adjoint()};
}

template <typename Real = double>
BasicGateMatrix<Real> gen_z_dag(int d) { return dagger(gen_z<Real>(d)); }

// X_d†|j> = |j+1 mod d>
template <typename Real = double>
BasicGateMatrix<Real> gen_x_dag(int d) { return dagger(gen_x<Real>(d)); }

// H_d†|j> = (1/√d) Σ_k e^{-2πijk/d}|k>
template <typename Real = double>
BasicGateMatrix<Real> gen_h_dag(int d) { return dagger(gen_h<Real>(d)); }

// C_{X_d}|i>|j> = |i>|j-i mod d>; the adjoint sends |j> to |j+i mod d>.
// Reduces to CNOT at d = 2.
template <typename Real = double>
BasicGateMatrix<Real> controlled_shift(int d, bool adjoint = false) {
  detail::require_dim(d, "controlled_shift");
  MatrixT<Real> u = MatrixT<Real>::Zero(Index(d) * d, Index(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const int jj = adjoint ? mod_d(j + i, d) : mod_d(j - i, d);
      u(Index(i) * d + jj, Index(i) * d + j) = ComplexT<Real>(1, 0);
    }
  return {d, 2, std::move(u)};
}

// C_{Z_d}-power: |k>|j> -> e^{2πijk/d}|k>|j>, i.e. control value k applies
// (Z_d)^k to the target. Reduces to CZ at d = 2.
template <typename Real = double>
BasicGateMatrix<Real> controlled_zpow(int d) {
  detail::require_dim(d, "controlled_zpow");
  MatrixT<Real> u = MatrixT<Real>::Zero(Index(d) * d, Index(d) * d);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j)
      u(Index(k) * d + j, Index(k) * d + j) = root_of_unity<Real>(d, 1LL * j * k);
  return {d, 2, std::move(u)};
}

// ---- qubit gates --------------------------------------------------------

template <typename Real = double>
BasicGateMatrix<Real> hadamard() { return gen_h<Real>(2); }

template <typename Real = double>
BasicGateMatrix<Real> pauli_x() { return gen_x<Real>(2); }

template <typename Real = double>
BasicGateMatrix<Real> pauli_y() {
  MatrixT<Real> u(2, 2);
  u << ComplexT<Real>(0, 0), ComplexT<Real>(0, -1), ComplexT<Real>(0, 1), ComplexT<Real>(0, 0);
  return {2, 1, std::move(u)};
}

template <typename Real = double>
BasicGateMatrix<Real> pauli_z() { return gen_z<Real>(2); }

// P(θ) = diag(1, e^{iθ})
template <typename Real = double>
BasicGateMatrix<Real> phase_gate(Real theta) {
  MatrixT<Real> u = MatrixT<Real>::Zero(2, 2);
  u(0, 0) = ComplexT<Real>(1, 0);
  u(1, 1) = std::polar(Real(1), theta);
  return {2, 1, std::move(u)};
}

template <typename Real = double>
BasicGateMatrix<Real> s_gate() { return phase_gate<Real>(std::numbers::pi_v<Real> / 2); }

template <typename Real = double>
BasicGateMatrix<Real> sdg_gate() { return phase_gate<Real>(-std::numbers::pi_v<Real> / 2); }

template <typename Real = double>
BasicGateMatrix<Real> cnot() { return controlled_shift<Real>(2); }

template <typename Real = double>
BasicGateMatrix<Real> cz() { return controlled_zpow<Real>(2); }

// Name-based factory backing the circuit text format. P takes θ in radians.
template <typename Real = double>
BasicGateMatrix<Real> qubit_gate(const std::string& name, std::optional<Real> theta = {}) {
  if (name == "H") return hadamard<Real>();
  if (name == "X") return pauli_x<Real>();
  if (name == "Y") return pauli_y<Real>();
  if (name == "Z") return pauli_z<Real>();
  if (name == "S") return s_gate<Real>();
  if (name == "SDG") return sdg_gate<Real>();
  if (name == "P") {
    if (!theta) throw UnknownGate("qubit_gate: P requires a theta argument");
    return phase_gate<Real>(*theta);
  }
  if (name == "CNOT") return cnot<Real>();
  if (name == "CZ") return cz<Real>();
  throw UnknownGate("qubit_gate: unknown gate '" + name + "'");
}

}  // namespace quditec
