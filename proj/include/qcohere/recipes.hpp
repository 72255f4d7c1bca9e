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

#ifndef QCOHERE_RECIPES_HPP
#define QCOHERE_RECIPES_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "qcohere/qstate.hpp"

namespace qcohere {

enum class RecipeKind {
  ghz,
  w,
  bell,
  ising_ground,
  plus_product,
  werner_mix,
  random_pure,
  random_mixed,
  explicit_matrix,
};

std::string to_string(RecipeKind kind);
RecipeKind parse_recipe_kind(const std::string& name);

/// Description of a named state. Only the parameters used by `kind` need to
/// be present; angles are in radians.
struct StateRecipe {
  RecipeKind kind = RecipeKind::bell;
  std::optional<double> theta;
  std::optional<double> phi;
  std::optional<double> xi;
  std::optional<double> mu;
  std::optional<int> qubits;
  std::optional<Dims> dims;
  std::optional<std::uint64_t> seed;
  std::shared_ptr<const StateRecipe> inner;  // werner_mix only
  std::optional<DensityMatrix> matrix;       // explicit_matrix only

  /// Sets a sweepable parameter ("theta", "phi", "xi", "mu"). When this
  /// recipe does not use the parameter it is forwarded to the inner recipe.
  StateRecipe with_param(const std::string& name, double value) const;
  bool uses_param(const std::string& name) const;
};

/// cos(theta)|0...0> + sin(theta)|1...1>.
PureState ghz_state(double theta, int qubits);
/// sin(theta)sin(phi)|001> + sin(theta)cos(phi)|010> + cos(theta)|100>.
PureState w_state(double theta, double phi);
PureState bell_state();
/// Ground state of -2 sin(xi) Z1 Z2 - cos(xi) (X1 + X2).
PureState ising_ground_state(double xi);
PureState plus_product_state(int qubits);
/// (1 - mu) I/d + mu rho.
DensityMatrix werner_mix(double mu, const DensityMatrix& rho);

DensityMatrix make_state(const StateRecipe& r);

}  // namespace qcohere

#endif  // QCOHERE_RECIPES_HPP
