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

#include <string>
#include <vector>

#include "quditec/gates.hpp"

namespace quditec {

// Discrete identity of a generalized maximally entangled n-qudit state:
// phase index p and parity offsets q_1..q_{n-1} of wires 1..n-1 relative
// to wire 0. For d = 2 this covers the four Bell and eight GHZ states,
// where p is the ± sign and (0, q) spells the first ket branch.
struct GBSLabel {
  int d = 2;
  int n = 2;
  int p = 0;
  std::vector<int> q;  // length n-1, each in [0, d)

  bool operator==(const GBSLabel&) const = default;
};

inline void validate_label(const GBSLabel& label) {
  if (label.d < 2) throw InvalidLabel("label: d must be >= 2");
  if (label.n < 2) throw InvalidLabel("label: n must be >= 2");
  if (static_cast<int>(label.q.size()) != label.n - 1)
    throw InvalidLabel("label: expected " + std::to_string(label.n - 1) + " parity offsets");
  if (label.p < 0 || label.p >= label.d) throw InvalidLabel("label: phase index out of range");
  for (int qi : label.q)
    if (qi < 0 || qi >= label.d) throw InvalidLabel("label: parity offset out of range");
}

// |Ψ_{p,q}> = (1/√d) Σ_j e^{2πijp/d} |j>|j+q_1>...|j+q_{n-1}>, sums mod d.
template <typename Real = double>
BasicStateVector<Real> gbs(const GBSLabel& label) {
  validate_label(label);
  const int d = label.d, n = label.n;
  VectorT<Real> amps = VectorT<Real>::Zero(pow_index(d, n));
  const Real scale = Real(1) / std::sqrt(Real(d));
  for (int j = 0; j < d; ++j) {
    Index k = 0;
    for (int w = 0; w < n; ++w) {
      const int digit = w == 0 ? j : mod_d(j + label.q[w - 1], d);
      k = k * d + digit;
    }
    amps[k] = scale * root_of_unity<Real>(d, 1LL * j * label.p);
  }
  return BasicStateVector<Real>{d, n, std::move(amps)};
}

// First ket branch of the superposition (the j = 0 term), e.g. "010" for
// the GHZ state (|010> - |101>)/√2. This is the subscript convention used
// for the named qubit states.
inline std::string branch_string(const GBSLabel& label) {
  validate_label(label);
  std::string s = "0";
  for (int qi : label.q) {
    if (label.d > 10) s += ',';
    s += std::to_string(qi);
  }
  return s;
}

// The four Bell states: phase bit 0/1 = +/-, parity bit = second-wire offset.
template <typename Real = double>
BasicStateVector<Real> bell(int phase_bit, int parity_bit) {
  if ((phase_bit | parity_bit) & ~1)
    throw InvalidLabel("bell: bits must be 0 or 1");
  return gbs<Real>(GBSLabel{2, 2, phase_bit, {parity_bit}});
}

// The eight GHZ states (|0 b1 b2> ± |1 ~b1 ~b2>)/√2, sign ∈ {'+', '-'}.
template <typename Real = double>
BasicStateVector<Real> ghz(char sign, int b1, int b2) {
  if (sign != '+' && sign != '-') throw InvalidLabel("ghz: sign must be '+' or '-'");
  if ((b1 | b2) & ~1) throw InvalidLabel("ghz: bits must be 0 or 1");
  return gbs<Real>(GBSLabel{2, 3, sign == '+' ? 0 : 1, {b1, b2}});
}

// Inverts the discrimination map: the phase outcome is p; parity outcomes
// are relative (q_i - q_{i-1} mod d, with q_0 = 0) and integrate to the
// absolute offsets.
inline GBSLabel classify(int phase_outcome, const std::vector<int>& parity_outcomes, int d,
                         int n) {
  if (d < 2 || n < 2) throw OutOfRange("classify: need d >= 2, n >= 2");
  if (static_cast<int>(parity_outcomes.size()) != n - 1)
    throw OutOfRange("classify: expected " + std::to_string(n - 1) + " parity outcomes");
  if (phase_outcome < 0 || phase_outcome >= d)
    throw OutOfRange("classify: phase outcome out of range");
  GBSLabel label{d, n, phase_outcome, {}};
  int q_prev = 0;
  for (int rel : parity_outcomes) {
    if (rel < 0 || rel >= d) throw OutOfRange("classify: parity outcome out of range");
    q_prev = mod_d(q_prev + rel, d);
    label.q.push_back(q_prev);
  }
  return label;
}

// Relative parities (q_i - q_{i-1} mod d) of a label; what the parity
// checks report and what the correction ancillas are prepared in.
inline std::vector<int> relative_parities(const GBSLabel& label) {
  validate_label(label);
  std::vector<int> rel;
  int q_prev = 0;
  for (int qi : label.q) {
    rel.push_back(mod_d(qi - q_prev, label.d));
    q_prev = qi;
  }
  return rel;
}

// ---- label text form: "d:n:p:q1,q2,..." ----------------------------------

inline std::string to_string(const GBSLabel& label) {
  std::string s = std::to_string(label.d) + ":" + std::to_string(label.n) + ":" +
                  std::to_string(label.p) + ":";
  for (std::size_t i = 0; i < label.q.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(label.q[i]);
  }
  return s;
}

inline GBSLabel parse_label(const std::string& text) {
  GBSLabel label;
  label.q.clear();
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ':') { parts.push_back(cur); cur.clear(); }
    else cur += ch;
  }
  parts.push_back(cur);
  if (parts.size() != 4) throw InvalidLabel("label '" + text + "': expected d:n:p:q1,q2,...");
  auto to_int = [&](const std::string& f) {
    std::size_t pos = 0;
    int v = 0;
    try { v = std::stoi(f, &pos); } catch (...) { pos = std::string::npos; }
    if (pos != f.size() || f.empty())
      throw InvalidLabel("label '" + text + "': bad integer field '" + f + "'");
    return v;
  };
  label.d = to_int(parts[0]);
  label.n = to_int(parts[1]);
  label.p = to_int(parts[2]);
  std::string qfield = parts[3];
  cur.clear();
  for (char ch : qfield) {
    if (ch == ',') { label.q.push_back(to_int(cur)); cur.clear(); }
    else cur += ch;
  }
  if (!cur.empty() || label.q.empty()) {
    if (cur.empty()) throw InvalidLabel("label '" + text + "': empty parity field");
    label.q.push_back(to_int(cur));
  }
  validate_label(label);
  return label;
}

// Enumerates all d^n labels for a register, phase-major then offsets.
inline std::vector<GBSLabel> all_labels(int d, int n) {
  std::vector<GBSLabel> labels;
  const Index total = pow_index(d, n);
  for (Index code = 0; code < total; ++code) {
    auto digits = outcome_digits(code, d, n);
    GBSLabel label{d, n, digits[0], {digits.begin() + 1, digits.end()}};
    labels.push_back(std::move(label));
  }
  return labels;
}

}  // namespace quditec
