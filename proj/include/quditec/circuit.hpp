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

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "quditec/gates.hpp"
#include "quditec/rng.hpp"
#include "quditec/state.hpp"

namespace quditec {

// Applies `gate` on the given wires (identity elsewhere). For a two-wire
// gate the list is (control, target) matching the canonical matrix order.
template <typename Real>
BasicStateVector<Real> apply(const BasicStateVector<Real>& s, const BasicGateMatrix<Real>& g,
                             const WireList& wires) {
  const int d = s.dim_per_wire, n = s.wire_count;
  if (g.dim_per_wire != d)
    throw DimensionMismatch("apply: gate dimension " + std::to_string(g.dim_per_wire) +
                            " vs register dimension " + std::to_string(d));
  if (static_cast<int>(wires.size()) != g.arity)
    throw InvalidWires("apply: gate arity " + std::to_string(g.arity) + " but " +
                       std::to_string(wires.size()) + " wires given");
  check_wires(wires, n, "apply");

  const int a = g.arity;
  const Index block = pow_index(d, a);
  std::vector<Index> strides(a);
  for (int i = 0; i < a; ++i) strides[i] = wire_stride(wires[i], d, n);

  // offset of the digit combination c (base-d digits over the gate's wires)
  std::vector<Index> offsets(block);
  for (Index c = 0; c < block; ++c) {
    Index off = 0, rest = c;
    for (int i = a - 1; i >= 0; --i) {
      off += (rest % d) * strides[i];
      rest /= d;
    }
    offsets[c] = off;
  }

  BasicStateVector<Real> out{d, n, VectorT<Real>(s.size())};
  VectorT<Real> in_block(block);
  for (Index k = 0; k < s.size(); ++k) {
    bool is_base = true;
    for (int i = 0; i < a; ++i)
      if (digit_at(k, wires[i], d, n) != 0) { is_base = false; break; }
    if (!is_base) continue;
    for (Index c = 0; c < block; ++c) in_block[c] = s.amplitudes[k + offsets[c]];
    VectorT<Real> out_block = g.u * in_block;
    for (Index c = 0; c < block; ++c) out.amplitudes[k + offsets[c]] = out_block[c];
  }
  return out;
}

struct ShotResult {
  std::map<std::string, std::int64_t> counts;
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
};

// Outcome record of measuring `wires`: the exact Born distribution, an
// optional sampled histogram, and the register collapsed on the modal
// outcome.
template <typename Real = double>
struct BasicCheckOutcome {
  int dim_per_wire = 2;
  WireList wires;
  Eigen::Vector<Real, Eigen::Dynamic> distribution;  // indexed by composed outcome
  std::optional<ShotResult> sampled;
  BasicStateVector<Real> post_state;
};

using CheckOutcome = BasicCheckOutcome<double>;

template <typename Real>
Eigen::Vector<Real, Eigen::Dynamic> born_distribution(const BasicStateVector<Real>& s,
                                                      const WireList& wires) {
  check_wires(wires, s.wire_count, "born_distribution");
  Eigen::Vector<Real, Eigen::Dynamic> p =
      Eigen::Vector<Real, Eigen::Dynamic>::Zero(pow_index(s.dim_per_wire, static_cast<int>(wires.size())));
  for (Index k = 0; k < s.size(); ++k)
    p[compose_outcome(k, wires, s.dim_per_wire, s.wire_count)] += std::norm(s.amplitudes[k]);
  return p;
}

template <typename Real>
Index modal_outcome(const Eigen::Vector<Real, Eigen::Dynamic>& distribution) {
  Index best = 0;
  for (Index o = 1; o < distribution.size(); ++o)
    if (distribution[o] > distribution[best]) best = o;
  return best;
}

inline Index modal_outcome(const ShotResult& r, int d, int digit_count) {
  Index best = -1;
  std::int64_t best_count = -1;
  for (Index o = 0; o < pow_index(d, digit_count); ++o) {
    auto it = r.counts.find(outcome_string(o, d, digit_count));
    const std::int64_t c = it == r.counts.end() ? 0 : it->second;
    if (c > best_count) { best = o; best_count = c; }
  }
  return best;
}

// Projects `wires` onto the digits of `outcome` and renormalizes.
template <typename Real>
BasicStateVector<Real> project_outcome(const BasicStateVector<Real>& s, const WireList& wires,
                                       Index outcome) {
  BasicStateVector<Real> out = s;
  for (Index k = 0; k < s.size(); ++k)
    if (compose_outcome(k, wires, s.dim_per_wire, s.wire_count) != outcome)
      out.amplitudes[k] = ComplexT<Real>(0, 0);
  const Real nrm = out.norm();
  if (nrm == Real(0)) throw Error("project_outcome: outcome has zero probability");
  out.amplitudes /= nrm;
  return out;
}

// Born-rule distribution plus the register projected on the modal outcome.
template <typename Real>
BasicCheckOutcome<Real> measure_exact(const BasicStateVector<Real>& s, const WireList& wires) {
  BasicCheckOutcome<Real> out;
  out.dim_per_wire = s.dim_per_wire;
  out.wires = wires;
  out.distribution = born_distribution(s, wires);
  out.post_state = project_outcome(s, wires, modal_outcome(out.distribution));
  return out;
}

// Multinomial draw from the exact distribution; deterministic per seed.
template <typename Real>
ShotResult sample(const BasicStateVector<Real>& s, const WireList& wires, std::int64_t shots,
                  std::uint64_t seed) {
  if (shots < 1) throw OutOfRange("sample: shots must be >= 1");
  const auto p = born_distribution(s, wires);
  std::vector<double> cdf(p.size());
  double acc = 0;
  for (Index o = 0; o < p.size(); ++o) { acc += static_cast<double>(p[o]); cdf[o] = acc; }
  cdf.back() = 1.0;

  std::vector<std::int64_t> counts(p.size(), 0);
  Rng rng(seed);
  for (std::int64_t t = 0; t < shots; ++t) {
    const double u = rng.uniform01();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    ++counts[it - cdf.begin()];
  }

  ShotResult result;
  result.shots = shots;
  result.seed = seed;
  const int digit_count = static_cast<int>(wires.size());
  for (Index o = 0; o < p.size(); ++o)
    if (counts[o] > 0)
      result.counts[outcome_string(o, s.dim_per_wire, digit_count)] = counts[o];
  return result;
}

template <typename Real = double>
struct GateStep {
  BasicGateMatrix<Real> gate;
  WireList wires;
};

struct MeasureStep {
  WireList wires;
};

// Ordered gate applications and measurement markers on a (d, n) register.
template <typename Real = double>
struct BasicCircuit {
  int dim_per_wire = 2;
  int wire_count = 1;
  std::vector<std::variant<GateStep<Real>, MeasureStep>> steps;

  BasicCircuit& add(BasicGateMatrix<Real> gate, WireList wires) {
    if (gate.dim_per_wire != dim_per_wire)
      throw DimensionMismatch("Circuit::add: gate dimension mismatch");
    if (static_cast<int>(wires.size()) != gate.arity)
      throw InvalidWires("Circuit::add: wire count does not match gate arity");
    check_wires(wires, wire_count, "Circuit::add");
    steps.emplace_back(GateStep<Real>{std::move(gate), std::move(wires)});
    return *this;
  }

  BasicCircuit& measure(WireList wires) {
    check_wires(wires, wire_count, "Circuit::measure");
    steps.emplace_back(MeasureStep{std::move(wires)});
    return *this;
  }
};

using Circuit = BasicCircuit<double>;

template <typename Real = double>
struct RunResult {
  BasicStateVector<Real> final_state;
  std::vector<ShotResult> measurements;  // one per MeasureStep, in order
};

// Runs the circuit. Measurement markers sample the Born distribution
// without disturbing the exact state (the non-destructive default); with
// `collapse` set, each marker also projects the state onto the modal
// outcome of its histogram (exact-modal when shots == 0). Marker i uses the
// child seed derived from (seed, i). shots == 0 skips sampling.
template <typename Real>
RunResult<Real> run(const BasicCircuit<Real>& circuit, const BasicStateVector<Real>& initial,
                    std::int64_t shots, std::uint64_t seed, bool collapse = false) {
  if (initial.dim_per_wire != circuit.dim_per_wire || initial.wire_count != circuit.wire_count)
    throw DimensionMismatch("run: initial state does not match circuit register");
  RunResult<Real> result{initial, {}};
  std::uint64_t marker = 0;
  for (const auto& step : circuit.steps) {
    if (std::holds_alternative<GateStep<Real>>(step)) {
      const auto& gs = std::get<GateStep<Real>>(step);
      result.final_state = apply(result.final_state, gs.gate, gs.wires);
    } else {
      const auto& ms = std::get<MeasureStep>(step);
      ShotResult sr;
      if (shots > 0) sr = sample(result.final_state, ms.wires, shots, Rng::derive(seed, marker));
      sr.seed = Rng::derive(seed, marker);
      sr.shots = shots;
      if (collapse) {
        const Index o = shots > 0
                            ? modal_outcome(sr, circuit.dim_per_wire, static_cast<int>(ms.wires.size()))
                            : modal_outcome(born_distribution(result.final_state, ms.wires));
        result.final_state = project_outcome(result.final_state, ms.wires, o);
      }
      result.measurements.push_back(std::move(sr));
      ++marker;
    }
  }
  return result;
}

// ---- circuit text format -------------------------------------------------
//
//   # comment
//   REGISTER d n
//   H w | X w | Y w | Z w | S w | SDG w | P w theta      (d = 2 only)
//   GZ w | GZDG w | GX w | GXDG w | GH w | GHDG w        (any d)
//   CNOT c t | CZ c t                                    (d = 2 only)
//   CSHIFT c t | CSHIFTDG c t | CZPOW c t                (any d)
//   MEASURE w [w ...]
//
// One statement per line; REGISTER must come first.
template <typename Real = double>
BasicCircuit<Real> parse_circuit(std::istream& in) {
  BasicCircuit<Real> circuit;
  bool have_register = false;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("circuit line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    for (auto& ch : op) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));

    if (op == "REGISTER") {
      if (have_register) fail("duplicate REGISTER");
      int d = 0, n = 0;
      if (!(ls >> d >> n)) fail("REGISTER expects d and n");
      if (d < 2 || n < 1) fail("REGISTER needs d >= 2, n >= 1");
      circuit.dim_per_wire = d;
      circuit.wire_count = n;
      have_register = true;
      continue;
    }
    if (!have_register) fail("REGISTER must come first");

    try {
      if (op == "MEASURE") {
        WireList wires;
        int w;
        while (ls >> w) wires.push_back(w);
        if (wires.empty()) fail("MEASURE expects at least one wire");
        circuit.measure(std::move(wires));
      } else if (op == "P") {
        int w;
        Real theta;
        if (!(ls >> w >> theta)) fail("P expects wire and theta");
        if (circuit.dim_per_wire != 2) fail("P is a qubit gate; register has d != 2");
        circuit.add(phase_gate<Real>(theta), {w});
      } else if (op == "H" || op == "X" || op == "Y" || op == "Z" || op == "S" || op == "SDG") {
        int w;
        if (!(ls >> w)) fail(op + " expects a wire");
        if (circuit.dim_per_wire != 2) fail(op + " is a qubit gate; register has d != 2");
        circuit.add(qubit_gate<Real>(op), {w});
      } else if (op == "CNOT" || op == "CZ") {
        int c, t;
        if (!(ls >> c >> t)) fail(op + " expects control and target");
        if (circuit.dim_per_wire != 2) fail(op + " is a qubit gate; register has d != 2");
        circuit.add(qubit_gate<Real>(op), {c, t});
      } else if (op == "GZ" || op == "GZDG" || op == "GX" || op == "GXDG" || op == "GH" ||
                 op == "GHDG") {
        int w;
        if (!(ls >> w)) fail(op + " expects a wire");
        const int d = circuit.dim_per_wire;
        BasicGateMatrix<Real> g = op == "GZ"     ? gen_z<Real>(d)
                                  : op == "GZDG" ? gen_z_dag<Real>(d)
                                  : op == "GX"   ? gen_x<Real>(d)
                                  : op == "GXDG" ? gen_x_dag<Real>(d)
                                  : op == "GH"   ? gen_h<Real>(d)
                                                 : gen_h_dag<Real>(d);
        circuit.add(std::move(g), {w});
      } else if (op == "CSHIFT" || op == "CSHIFTDG" || op == "CZPOW") {
        int c, t;
        if (!(ls >> c >> t)) fail(op + " expects control and target");
        const int d = circuit.dim_per_wire;
        BasicGateMatrix<Real> g = op == "CZPOW" ? controlled_zpow<Real>(d)
                                                : controlled_shift<Real>(d, op == "CSHIFTDG");
        circuit.add(std::move(g), {c, t});
      } else {
        fail("unknown statement '" + op + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  if (!have_register) throw ParseError("circuit: missing REGISTER statement");
  return circuit;
}

template <typename Real = double>
BasicCircuit<Real> parse_circuit(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit<Real>(in);
}

}  // namespace quditec
