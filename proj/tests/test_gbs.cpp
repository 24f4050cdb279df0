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

#include <numbers>

#include "quditec/gbs.hpp"

using namespace quditec;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);
}  // namespace

TEST_CASE("gbs expansion") {
  // d=2, n=2, p=0, q=(0): (|00> + |11>)/sqrt2
  const auto psi_plus = gbs(GBSLabel{2, 2, 0, {0}});
  CHECK(psi_plus.amplitudes[0].real() == doctest::Approx(kInvSqrt2));
  CHECK(psi_plus.amplitudes[3].real() == doctest::Approx(kInvSqrt2));

  // d=2, n=3, p=1, q=(1,0): (|010> - |101>)/sqrt2
  const auto ghz_minus = gbs(GBSLabel{2, 3, 1, {1, 0}});
  CHECK(ghz_minus.amplitudes[2].real() == doctest::Approx(kInvSqrt2));
  CHECK(ghz_minus.amplitudes[5].real() == doctest::Approx(-kInvSqrt2));

  // d=3, n=2, p=1, q=(2): (|02> + w|10> + w^2|21>)/sqrt3, w = e^{2 pi i/3}
  const auto qutrit = gbs(GBSLabel{3, 2, 1, {2}});
  const auto w = std::polar(1.0, 2 * std::numbers::pi / 3);
  CHECK(std::abs(qutrit.amplitudes[2] - kInvSqrt3) < kSimTol);
  CHECK(std::abs(qutrit.amplitudes[3] - kInvSqrt3 * w) < kSimTol);
  CHECK(std::abs(qutrit.amplitudes[7] - kInvSqrt3 * w * w) < kSimTol);

  CHECK_THROWS_AS(gbs(GBSLabel{2, 2, 5, {0}}), InvalidLabel);
  CHECK_THROWS_AS(gbs(GBSLabel{2, 3, 0, {0}}), InvalidLabel);  // wrong offset count
}

TEST_CASE("named qubit states match their labels") {
  // Bell: subscript spells the first branch, superscript the sign
  CHECK(fidelity(bell(1, 1), gbs(GBSLabel{2, 2, 1, {1}})) == doctest::Approx(1.0));
  const auto singlet = bell(1, 1);  // (|01> - |10>)/sqrt2
  CHECK(singlet.amplitudes[1].real() == doctest::Approx(kInvSqrt2));
  CHECK(singlet.amplitudes[2].real() == doctest::Approx(-kInvSqrt2));

  const auto g = ghz('-', 1, 0);  // (|010> - |101>)/sqrt2
  CHECK(fidelity(g, gbs(GBSLabel{2, 3, 1, {1, 0}})) == doctest::Approx(1.0));

  const auto g000 = ghz('+', 0, 0);
  CHECK(g000.amplitudes[0].real() == doctest::Approx(kInvSqrt2));
  CHECK(g000.amplitudes[7].real() == doctest::Approx(kInvSqrt2));

  CHECK_THROWS_AS(bell(2, 0), InvalidLabel);
  CHECK_THROWS_AS(ghz('x', 0, 0), InvalidLabel);
}

TEST_CASE("classify integrates relative parities") {
  // phase 1, parity (1,1): ket string 010, minus sign
  const auto label = classify(1, {1, 1}, 2, 3);
  CHECK(label == GBSLabel{2, 3, 1, {1, 0}});
  CHECK(branch_string(label) == "010");

  CHECK(classify(0, {0}, 2, 2) == GBSLabel{2, 2, 0, {0}});

  // d=3: offsets accumulate mod 3
  CHECK(classify(2, {2, 2}, 3, 3) == GBSLabel{3, 3, 2, {2, 1}});

  CHECK_THROWS_AS(classify(2, {0}, 2, 2), OutOfRange);
  CHECK_THROWS_AS(classify(0, {0, 0}, 2, 2), OutOfRange);
}

TEST_CASE("relative parities invert classify") {
  for (int d : {2, 3}) {
    for (int n : {2, 3}) {
      for (const auto& label : all_labels(d, n)) {
        const auto rel = relative_parities(label);
        CHECK(classify(label.p, rel, d, n) == label);
      }
    }
  }
}

TEST_CASE("GBS family is an orthonormal basis") {
  for (auto [d, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const auto labels = all_labels(d, n);
    CHECK(static_cast<Index>(labels.size()) == pow_index(d, n));
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i; j < labels.size(); ++j) {
        const auto ov = std::abs(overlap(gbs(labels[i]), gbs(labels[j])));
        if (i == j) CHECK(std::abs(ov - 1.0) < kSimTol);
        else CHECK(ov < kSimTol);
      }
  }
}

TEST_CASE("every GBS is maximally entangled") {
  for (auto [d, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    for (const auto& label : all_labels(d, n)) {
      const auto rho = density_of(gbs(label));
      for (int w = 0; w < n; ++w) {
        const auto reduced = partial_trace(rho, {w}, d, n);
        const auto target = MatrixT<double>::Identity(d, d) / double(d);
        CHECK((reduced - target).cwiseAbs().maxCoeff() < kSimTol);
      }
    }
  }
}

TEST_CASE("label strings round-trip") {
  const GBSLabel label{2, 3, 1, {1, 0}};
  CHECK(to_string(label) == "2:3:1:1,0");
  CHECK(parse_label("2:3:1:1,0") == label);
  CHECK(parse_label("2:2:0:0") == GBSLabel{2, 2, 0, {0}});
  CHECK(parse_label("3:2:1:2") == GBSLabel{3, 2, 1, {2}});

  CHECK_THROWS_AS(parse_label("2:3:9:0,0"), InvalidLabel);  // phase out of range
  CHECK_THROWS_AS(parse_label("2:3:1:1"), InvalidLabel);    // missing offset
  CHECK_THROWS_AS(parse_label("junk"), InvalidLabel);
  CHECK_THROWS_AS(parse_label("2:3:1:1,x"), InvalidLabel);
}
