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

#include <json.hpp>

#include "quditec/autocorrect.hpp"
#include "quditec/circuit.hpp"
#include "quditec/tomography.hpp"

namespace quditec {

using json = nlohmann::json;

// {"dim": N, "re": [[...]], "im": [[...]]}, row-major.
inline json density_to_json(const DensityMatrix& rho) {
  json re = json::array(), im = json::array();
  for (Index r = 0; r < rho.rows(); ++r) {
    json re_row = json::array(), im_row = json::array();
    for (Index c = 0; c < rho.cols(); ++c) {
      re_row.push_back(rho(r, c).real());
      im_row.push_back(rho(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"dim", rho.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

inline DensityMatrix density_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("re") || !j.contains("im"))
    throw ParseError("density matrix JSON: need dim, re, im");
  const Index dim = j.at("dim").get<Index>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<Index>(re.size()) != dim || static_cast<Index>(im.size()) != dim)
    throw ParseError("density matrix JSON: row count does not match dim");
  DensityMatrix rho(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    if (static_cast<Index>(re[r].size()) != dim || static_cast<Index>(im[r].size()) != dim)
      throw ParseError("density matrix JSON: column count does not match dim");
    for (Index c = 0; c < dim; ++c)
      rho(r, c) = std::complex<double>(re[r][c].get<double>(), im[r][c].get<double>());
  }
  return rho;
}

// {"deltas": [...radians...], "p_err": k, "q_err": [...]}
inline json error_spec_to_json(const ErrorSpec& err) {
  return json{{"deltas", err.deltas}, {"p_err", err.p_err}, {"q_err", err.q_err}};
}

inline ErrorSpec error_spec_from_json(const json& j) {
  if (!j.contains("deltas") || !j.contains("p_err") || !j.contains("q_err"))
    throw ParseError("error spec JSON: need deltas, p_err, q_err");
  ErrorSpec err;
  try {
    err.deltas = j.at("deltas").get<std::vector<double>>();
    err.p_err = j.at("p_err").get<int>();
    err.q_err = j.at("q_err").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("error spec JSON: ") + e.what());
  }
  return err;
}

inline json metrics_to_json(const Metrics& m, std::int64_t shots) {
  json j{{"fidelity_general", m.fidelity_general},
         {"avg_abs_dev", {{"abs", m.avg_abs_dev.abs}, {"re", m.avg_abs_dev.re}, {"im", m.avg_abs_dev.im}}},
         {"max_abs_dev", {{"abs", m.max_abs_dev.abs}, {"re", m.max_abs_dev.re}, {"im", m.max_abs_dev.im}}},
         {"shots", shots}};
  if (m.fidelity_pure) j["fidelity_pure"] = *m.fidelity_pure;
  return j;
}

inline json shot_result_to_json(const ShotResult& r) {
  json counts = json::object();
  for (const auto& [outcome, count] : r.counts) counts[outcome] = count;
  return json{{"counts", std::move(counts)}, {"shots", r.shots}, {"seed", r.seed}};
}

inline json state_to_json(const StateVector& s) {
  json re = json::array(), im = json::array();
  for (Index k = 0; k < s.size(); ++k) {
    re.push_back(s.amplitudes[k].real());
    im.push_back(s.amplitudes[k].imag());
  }
  return json{{"d", s.dim_per_wire}, {"n", s.wire_count}, {"re", std::move(re)},
              {"im", std::move(im)}};
}

}  // namespace quditec
