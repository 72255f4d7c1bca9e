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

#ifndef QCOHERE_STATE_IO_HPP
#define QCOHERE_STATE_IO_HPP

#include <string>

#include <json.hpp>

#include "qcohere/basis.hpp"
#include "qcohere/recipes.hpp"

namespace qcohere {

using json = nlohmann::json;

/// {"dims":[...], "re":[[...]], "im":[[...]]}, row-major. "im" may be
/// omitted for real matrices.
json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const json& j);

/// Either a built-in name ("computational", "hadamard") or an object with
/// "re"/"im" columns of a unitary and an optional "label".
BasisSpec basis_from_json(const json& j, const Dims& dims);

/// {"kind": "werner_mix", "mu": 0.5, "inner": {"kind": "ghz", ...}}
StateRecipe recipe_from_json(const json& j);
json recipe_to_json(const StateRecipe& r);

json read_json_file(const std::string& path);

}  // namespace qcohere

#endif  // QCOHERE_STATE_IO_HPP
