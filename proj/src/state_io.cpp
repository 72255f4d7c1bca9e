// Copyright 2026 The qcohere Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcohere/state_io.hpp"

#include <fstream>

namespace qcohere {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::vector<std::vector<double>> real_rows(const json& j, const char* key) {
  if (!j.contains(key)) parse_fail(std::string("missing '") + key + "'");
  const json& a = j.at(key);
  if (!a.is_array()) parse_fail(std::string("'") + key + "' must be an array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& row : a) {
    if (!row.is_array()) parse_fail(std::string("'") + key + "' rows must be arrays");
    std::vector<double> r;
    for (const auto& x : row) {
      if (!x.is_number()) parse_fail(std::string("'") + key + "' entries must be numbers");
      r.push_back(x.get<double>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

json matrix_to_json(const CMatrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ii = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ii.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) parse_fail("matrix must be a JSON object");
  const auto re = real_rows(j, "re");
  const std::size_t n = re.size();
  if (n == 0) parse_fail("matrix is empty");
  std::vector<std::vector<double>> im;
  if (j.contains("im")) {
    im = real_rows(j, "im");
  } else {
    im.assign(n, std::vector<double>(n, 0.0));
  }
  if (im.size() != n) parse_fail("'re' and 'im' have different row counts");
  CMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (re[r].size() != n || im[r].size() != n) parse_fail("matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = cplx(re[r][c], im[r][c]);
  }
  return m;
}

json density_to_json(const DensityMatrix& rho) {
  json j = matrix_to_json(rho.matrix());
  j["dims"] = rho.dims();
  return j;
}

DensityMatrix density_from_json(const json& j) {
  const CMatrix m = matrix_from_json(j);
  Dims dims;
  if (j.contains("dims")) {
    if (!j["dims"].is_array()) parse_fail("'dims' must be an array");
    for (const auto& x : j["dims"]) {
      if (!x.is_number_integer()) parse_fail("'dims' entries must be integers");
      dims.push_back(x.get<int>());
    }
  } else {
    dims = {static_cast<int>(m.rows())};
  }
  return validate(m, dims);
}

BasisSpec basis_from_json(const json& j, const Dims& dims) {
  if (j.is_string()) return BasisSpec::named(j.get<std::string>(), dims);
  const CMatrix u = matrix_from_json(j);
  if (u.rows() != product(dims)) throw Error(ErrorCode::DimensionMismatch, "basis dimension does not match state");
  return BasisSpec(UnitaryMatrix(u), j.value("label", std::string("custom")));
}

StateRecipe recipe_from_json(const json& j) {
  if (!j.is_object()) parse_fail("recipe must be a JSON object");
  if (!j.contains("kind") || !j["kind"].is_string()) parse_fail("recipe needs a string 'kind'");
  StateRecipe r;
  r.kind = parse_recipe_kind(j["kind"].get<std::string>());
  auto num = [&](const char* key, std::optional<double>& dst) {
    if (!j.contains(key)) return;
    if (!j[key].is_number()) parse_fail(std::string("'") + key + "' must be a number");
    dst = j[key].get<double>();
  };
  num("theta", r.theta);
  num("phi", r.phi);
  num("xi", r.xi);
  num("mu", r.mu);
  if (j.contains("qubits")) {
    if (!j["qubits"].is_number_integer()) parse_fail("'qubits' must be an integer");
    r.qubits = j["qubits"].get<int>();
  }
  if (j.contains("dims")) {
    if (!j["dims"].is_array()) parse_fail("'dims' must be an array");
    r.dims = j["dims"].get<Dims>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) parse_fail("'seed' must be a non-negative integer");
    r.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("inner")) r.inner = std::make_shared<const StateRecipe>(recipe_from_json(j["inner"]));
  if (j.contains("matrix")) r.matrix = density_from_json(j["matrix"]);
  return r;
}

json recipe_to_json(const StateRecipe& r) {
  json j{{"kind", to_string(r.kind)}};
  if (r.theta) j["theta"] = *r.theta;
  if (r.phi) j["phi"] = *r.phi;
  if (r.xi) j["xi"] = *r.xi;
  if (r.mu) j["mu"] = *r.mu;
  if (r.qubits) j["qubits"] = *r.qubits;
  if (r.dims) j["dims"] = *r.dims;
  if (r.seed) j["seed"] = *r.seed;
  if (r.inner) j["inner"] = recipe_to_json(*r.inner);
  if (r.matrix) j["matrix"] = density_to_json(*r.matrix);
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    parse_fail("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace qcohere
