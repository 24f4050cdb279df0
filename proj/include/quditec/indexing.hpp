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

#include <cstdint>
#include <string>
#include <vector>

#include "quditec/errors.hpp"

namespace quditec {

using Index = std::int64_t;

// Ordered wire positions, 0-based. Wire 0 is the leftmost ket factor and
// the most significant base-d digit of a register index.
using WireList = std::vector<int>;

inline Index pow_index(int base, int exp) {
  Index r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Stride of wire `w` in an n-wire, base-d register.
inline Index wire_stride(int w, int d, int n) { return pow_index(d, n - 1 - w); }

inline int digit_at(Index k, int wire, int d, int n) {
  return static_cast<int>((k / wire_stride(wire, d, n)) % d);
}

// Composes the digits read at `wires` (in list order) into one base-d value.
inline Index compose_outcome(Index k, const WireList& wires, int d, int n) {
  Index o = 0;
  for (int w : wires) o = o * d + digit_at(k, w, d, n);
  return o;
}

inline std::vector<int> outcome_digits(Index outcome, int d, int count) {
  std::vector<int> digits(count);
  for (int i = count - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(outcome % d);
    outcome /= d;
  }
  return digits;
}

// Digit-string form of an outcome, e.g. "11"; digits are comma-separated
// once d needs more than one character per digit.
inline std::string outcome_string(Index outcome, int d, int count) {
  const auto digits = outcome_digits(outcome, d, count);
  std::string s;
  for (int i = 0; i < count; ++i) {
    if (d > 10 && i > 0) s += ',';
    s += std::to_string(digits[i]);
  }
  return s;
}

inline void check_wires(const WireList& wires, int n, const char* who) {
  if (wires.empty())
    throw InvalidWires(std::string(who) + ": empty wire list");
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] < 0 || wires[i] >= n)
      throw InvalidWires(std::string(who) + ": wire " + std::to_string(wires[i]) +
                         " out of range for " + std::to_string(n) + " wires");
    for (std::size_t j = i + 1; j < wires.size(); ++j)
      if (wires[i] == wires[j])
        throw InvalidWires(std::string(who) + ": duplicate wire " + std::to_string(wires[i]));
  }
}

inline int mod_d(int value, int d) {
  int m = value % d;
  return m < 0 ? m + d : m;
}

}  // namespace quditec
