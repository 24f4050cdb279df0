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

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <complex>
#include <utility>

#include "quditec/errors.hpp"
#include "quditec/indexing.hpp"

namespace quditec {

template <typename Real = double>
using ComplexT = std::complex<Real>;

template <typename Real = double>
using VectorT = Eigen::Vector<std::complex<Real>, Eigen::Dynamic>;

template <typename Real = double>
using MatrixT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

// Exact-simulation assertion tolerance vs. user-input validation tolerance.
inline constexpr double kSimTol = 1e-10;
inline constexpr double kInputTol = 1e-6;

// Density matrices are plain dense matrices. Outer products of pure states
// are Hermitian with unit trace by construction; tomographic reconstructions
// are kept raw (finite-shot artifacts are not projected away).
template <typename Real = double>
using BasicDensityMatrix = MatrixT<Real>;

using DensityMatrix = BasicDensityMatrix<double>;

// Dense amplitude vector over an n-wire register of d-level systems.
// Index k holds the basis ket whose base-d digits, most significant first,
// are the wire values: wire 0 is the leftmost ket factor.
template <typename Real = double>
struct BasicStateVector {
  int dim_per_wire = 2;
  int wire_count = 1;
  VectorT<Real> amplitudes;

  Index size() const { return amplitudes.size(); }
  Real norm() const { return amplitudes.norm(); }
};

using StateVector = BasicStateVector<double>;

template <typename Real = double>
BasicStateVector<Real> basis_state(int d, int n, Index k) {
  if (d < 2) throw InvalidDimension("basis_state: d must be >= 2");
  BasicStateVector<Real> s{d, n, VectorT<Real>::Zero(pow_index(d, n))};
  s.amplitudes[k] = ComplexT<Real>(1, 0);
  return s;
}

template <typename Real = double>
BasicStateVector<Real> make_state(int d, int n, VectorT<Real> amplitudes,
                                  bool renormalize = false) {
  if (d < 2) throw InvalidDimension("make_state: d must be >= 2");
  if (n < 1) throw InvalidDimension("make_state: n must be >= 1");
  if (amplitudes.size() != pow_index(d, n))
    throw LengthMismatch("make_state: expected " + std::to_string(pow_index(d, n)) +
                         " amplitudes, got " + std::to_string(amplitudes.size()));
  const Real nrm = amplitudes.norm();
  if (!renormalize && std::abs(nrm - Real(1)) > Real(kInputTol))
    throw NotNormalized("make_state: norm " + std::to_string(static_cast<double>(nrm)));
  if (nrm == Real(0)) throw NotNormalized("make_state: zero vector");
  amplitudes /= nrm;
  return BasicStateVector<Real>{d, n, std::move(amplitudes)};
}

// a ⊗ b; a occupies the leading (most significant) wires.
template <typename Real>
BasicStateVector<Real> tensor(const BasicStateVector<Real>& a, const BasicStateVector<Real>& b) {
  if (a.dim_per_wire != b.dim_per_wire)
    throw DimensionMismatch("tensor: factors have different per-wire dimensions");
  BasicStateVector<Real> out{a.dim_per_wire, a.wire_count + b.wire_count,
                             VectorT<Real>(a.size() * b.size())};
  for (Index ka = 0; ka < a.size(); ++ka)
    out.amplitudes.segment(ka * b.size(), b.size()) = a.amplitudes[ka] * b.amplitudes;
  return out;
}

// rho[i][j] = a_i * conj(a_j)
template <typename Real>
BasicDensityMatrix<Real> density_of(const BasicStateVector<Real>& s) {
  return s.amplitudes * s.amplitudes.adjoint();
}

// Standard partial trace over the wires not listed in `keep`. The kept
// wires appear in the output in the order given.
template <typename Real>
BasicDensityMatrix<Real> partial_trace(const BasicDensityMatrix<Real>& rho,
                                       const WireList& keep, int d, int n) {
  if (rho.rows() != rho.cols() || rho.rows() != pow_index(d, n))
    throw DimensionMismatch("partial_trace: matrix is not d^n x d^n");
  check_wires(keep, n, "partial_trace");

  WireList traced;
  for (int w = 0; w < n; ++w)
    if (std::find(keep.begin(), keep.end(), w) == keep.end()) traced.push_back(w);

  const Index dim_keep = pow_index(d, static_cast<int>(keep.size()));
  const Index dim_tr = pow_index(d, static_cast<int>(traced.size()));
  BasicDensityMatrix<Real> out = BasicDensityMatrix<Real>::Zero(dim_keep, dim_keep);

  auto full_index = [&](Index kept_part, Index traced_part) {
    Index k = 0;
    auto kd = outcome_digits(kept_part, d, static_cast<int>(keep.size()));
    auto td = outcome_digits(traced_part, d, static_cast<int>(traced.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) k += kd[i] * wire_stride(keep[i], d, n);
    for (std::size_t i = 0; i < traced.size(); ++i) k += td[i] * wire_stride(traced[i], d, n);
    return k;
  };

  for (Index r = 0; r < dim_keep; ++r)
    for (Index c = 0; c < dim_keep; ++c) {
      ComplexT<Real> sum(0, 0);
      for (Index t = 0; t < dim_tr; ++t) sum += rho(full_index(r, t), full_index(c, t));
      out(r, c) = sum;
    }
  return out;
}

template <typename Real>
ComplexT<Real> overlap(const BasicStateVector<Real>& a, const BasicStateVector<Real>& b) {
  if (a.dim_per_wire != b.dim_per_wire || a.wire_count != b.wire_count)
    throw DimensionMismatch("overlap: states live on different registers");
  return a.amplitudes.dot(b.amplitudes);  // Eigen dot conjugates the left factor
}

// |<a|b>|: state agreement up to global phase.
template <typename Real>
Real fidelity(const BasicStateVector<Real>& a, const BasicStateVector<Real>& b) {
  return std::abs(overlap(a, b));
}

// Removes a wire that is (after projection) in the basis state |digit>.
template <typename Real>
BasicStateVector<Real> slice_wire(const BasicStateVector<Real>& s, int wire, int digit) {
  const int d = s.dim_per_wire, n = s.wire_count;
  check_wires({wire}, n, "slice_wire");
  if (n < 2) throw InvalidWires("slice_wire: cannot slice the last wire");
  BasicStateVector<Real> out{d, n - 1, VectorT<Real>(s.size() / d)};
  Index j = 0;
  for (Index k = 0; k < s.size(); ++k)
    if (digit_at(k, wire, d, n) == digit) out.amplitudes[j++] = s.amplitudes[k];
  const Real nrm = out.norm();
  if (nrm == Real(0)) throw Error("slice_wire: projection annihilates the state");
  out.amplitudes /= nrm;
  return out;
}

template <typename Real>
struct SchmidtSplit {
  BasicStateVector<Real> left;
  BasicStateVector<Real> right;
  Real leading_weight;  // largest Schmidt coefficient; 1 iff the cut factorizes
};

// Schmidt decomposition across the cut after `left_wires` leading wires,
// keeping only the leading term.
template <typename Real>
SchmidtSplit<Real> schmidt_split(const BasicStateVector<Real>& s, int left_wires) {
  const int d = s.dim_per_wire, n = s.wire_count;
  if (left_wires < 1 || left_wires >= n)
    throw InvalidWires("schmidt_split: cut must leave wires on both sides");
  const Index rows = pow_index(d, left_wires);
  const Index cols = pow_index(d, n - left_wires);
  MatrixT<Real> m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = s.amplitudes[r * cols + c];
  Eigen::JacobiSVD<MatrixT<Real>> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  BasicStateVector<Real> left{d, left_wires, svd.matrixU().col(0)};
  BasicStateVector<Real> right{d, n - left_wires, svd.matrixV().col(0).conjugate()};
  return {std::move(left), std::move(right), svd.singularValues()[0]};
}

}  // namespace quditec
