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

#include <doctest.h>

#include "quditec/discrimination.hpp"

using namespace quditec;

TEST_CASE("phase check reads the phase index") {
  // phase of (|010> - |101>)/sqrt2 is |1>
  const auto minus = ghz('-', 1, 0);
  const auto check = phase_check(minus, 0, 0);
  CHECK(check.distribution[1] == doctest::Approx(1.0));
  CHECK(fidelity(check.post_state, minus) == doctest::Approx(1.0).epsilon(1e-10));

  // every + state reads |0>, every - state |1>
  for (int b1 : {0, 1})
    for (int b2 : {0, 1}) {
      CHECK(modal_outcome(phase_check(ghz('+', b1, b2), 0, 0).distribution) == 0);
      CHECK(modal_outcome(phase_check(ghz('-', b1, b2), 0, 0).distribution) == 1);
    }

  // d=3: phase index 2 reads |2>
  const auto qutrit = gbs(GBSLabel{3, 2, 2, {1}});
  const auto q_check = phase_check(qutrit, 0, 0);
  CHECK(q_check.distribution[2] == doctest::Approx(1.0));
}

TEST_CASE("parity checks read relative offsets") {
  const auto minus = ghz('-', 1, 0);
  const auto first = parity_check(minus, 1, 0, 0);
  CHECK(first.distribution[1] == doctest::Approx(1.0));
  const auto second = parity_check(first.post_state, 2, 0, 0);
  CHECK(second.distribution[1] == doctest::Approx(1.0));  // parity "11"

  for (char sign : {'+', '-'}) {
    const auto g = ghz(sign, 0, 0);
    CHECK(modal_outcome(parity_check(g, 1, 0, 0).distribution) == 0);
    CHECK(modal_outcome(parity_check(g, 2, 0, 0).distribution) == 0);
  }

  // d=3, q=(2,2): relative parities 2 then 0
  const auto qutrit = gbs(GBSLabel{3, 3, 0, {2, 2}});
  CHECK(modal_outcome(parity_check(qutrit, 1, 0, 0).distribution) == 2);
  CHECK(modal_outcome(parity_check(qutrit, 2, 0, 0).distribution) == 0);

  CHECK_THROWS_AS(parity_check(minus, 0, 0, 0), InvalidWires);
  CHECK_THROWS_AS(parity_check(minus, 3, 0, 0), InvalidWires);
}

TEST_CASE("checks are non-destructive and deterministic on the family") {
  for (auto [d, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    for (const auto& label : all_labels(d, n)) {
      const auto input = gbs(label);
      const auto pc = phase_check(input, 0, 0);
      CHECK(pc.distribution[label.p] == doctest::Approx(1.0));
      CHECK(fidelity(pc.post_state, input) == doctest::Approx(1.0).epsilon(1e-10));

      auto current = input;
      const auto rel = relative_parities(label);
      for (int i = 1; i <= n - 1; ++i) {
        const auto check = parity_check(current, i, 0, 0);
        CHECK(check.distribution[rel[i - 1]] == doctest::Approx(1.0));
        current = check.post_state;
      }
      CHECK(fidelity(current, input) == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("discriminate recovers every label") {
  // the worked GHZ example, sampled
  const auto label = parse_label("2:3:1:1,0");
  const auto input = gbs(label);
  const auto result = discriminate(input, 2, 3, 8192, 7);
  CHECK(result.label == label);
  CHECK(fidelity(result.post_state, input) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(result.phase.sampled->counts.at("1") == 8192);

  // all four Bell states, exact
  for (int p : {0, 1})
    for (int q : {0, 1}) {
      const auto r = discriminate(bell(p, q), 2, 2, 0, 0);
      CHECK(r.label == GBSLabel{2, 2, p, {q}});
    }

  // exhaustive completeness
  for (auto [d, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}})
    for (const auto& l : all_labels(d, n))
      CHECK(discriminate(gbs(l), d, n, 0, 0).label == l);
}

TEST_CASE("non-GBS input is ambiguous") {
  // |00> splits the phase ancilla 50/50
  CHECK_THROWS_AS(discriminate(basis_state(2, 2, 0), 2, 2, 0, 0), AmbiguousOutcome);
  CHECK_THROWS_AS(discriminate(basis_state(2, 2, 0), 2, 2, 8192, 3), AmbiguousOutcome);
  CHECK_THROWS_AS(discriminate(bell(0, 0), 2, 3, 0, 0), DimensionMismatch);
}
