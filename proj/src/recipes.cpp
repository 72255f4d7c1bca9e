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

#include "qcohere/recipes.hpp"

#include <cmath>

#include "qcohere/random.hpp"

namespace qcohere {

namespace {

constexpr struct {
  RecipeKind kind;
  const char* name;
} kKindNames[] = {
    {RecipeKind::ghz, "ghz"},
    {RecipeKind::w, "w"},
    {RecipeKind::bell, "bell"},
    {RecipeKind::ising_ground, "ising_ground"},
    {RecipeKind::plus_product, "plus_product"},
    {RecipeKind::werner_mix, "werner_mix"},
    {RecipeKind::random_pure, "random_pure"},
    {RecipeKind::random_mixed, "random_mixed"},
    {RecipeKind::explicit_matrix, "explicit"},
};

Dims qubit_dims(int n) { return Dims(static_cast<std::size_t>(n), 2); }

template <typename T>
const T& require(const std::optional<T>& v, const char* what, RecipeKind kind) {
  if (!v) throw Error(ErrorCode::BadRecipe, to_string(kind) + " recipe needs '" + what + "'");
  return *v;
}

double require_angle(const std::optional<double>& v, const char* what, RecipeKind kind) {
  const double x = require(v, what, kind);
  if (!std::isfinite(x)) throw Error(ErrorCode::BadRecipe, std::string(what) + " must be finite");
  return x;
}

int require_qubits(const std::optional<int>& v, RecipeKind kind) {
  const int n = require(v, "qubits", kind);
  if (n < 1 || n > 12) throw Error(ErrorCode::BadRecipe, "qubits must be in [1, 12]");
  return n;
}

}  // namespace

std::string to_string(RecipeKind kind) {
  for (const auto& e : kKindNames) {
    if (e.kind == kind) return e.name;
  }
  return "unknown";
}

RecipeKind parse_recipe_kind(const std::string& name) {
  for (const auto& e : kKindNames) {
    if (name == e.name) return e.kind;
  }
  if (name == "werner") return RecipeKind::werner_mix;
  if (name == "ising") return RecipeKind::ising_ground;
  throw Error(ErrorCode::BadRecipe, "unknown recipe kind '" + name + "'");
}

bool StateRecipe::uses_param(const std::string& name) const {
  switch (kind) {
    case RecipeKind::ghz: return name == "theta";
    case RecipeKind::w: return name == "theta" || name == "phi";
    case RecipeKind::ising_ground: return name == "xi";
    case RecipeKind::werner_mix: return name == "mu" || (inner && inner->uses_param(name));
    default: return false;
  }
}

StateRecipe StateRecipe::with_param(const std::string& name, double value) const {
  StateRecipe out = *this;
  const bool own = (name == "mu" && kind == RecipeKind::werner_mix) ||
                   (name == "theta" && (kind == RecipeKind::ghz || kind == RecipeKind::w)) ||
                   (name == "phi" && kind == RecipeKind::w) || (name == "xi" && kind == RecipeKind::ising_ground);
  if (own) {
    if (name == "theta") out.theta = value;
    if (name == "phi") out.phi = value;
    if (name == "xi") out.xi = value;
    if (name == "mu") out.mu = value;
    return out;
  }
  if (kind == RecipeKind::werner_mix && inner && inner->uses_param(name)) {
    out.inner = std::make_shared<const StateRecipe>(inner->with_param(name, value));
    return out;
  }
  throw Error(ErrorCode::BadRecipe, "parameter '" + name + "' is not used by a " + to_string(kind) + " recipe");
}

PureState ghz_state(double theta, int qubits) {
  const int d = 1 << qubits;
  CVector a = CVector::Zero(d);
  a(0) = std::cos(theta);
  a(d - 1) += std::sin(theta);
  return PureState::normalized(std::move(a), qubit_dims(qubits));
}

PureState w_state(double theta, double phi) {
  CVector a = CVector::Zero(8);
  a(1) = std::sin(theta) * std::sin(phi);  // |001>
  a(2) = std::sin(theta) * std::cos(phi);  // |010>
  a(4) = std::cos(theta);                  // |100>
  return PureState::normalized(std::move(a), qubit_dims(3));
}

PureState bell_state() {
  CVector a = CVector::Zero(4);
  a(0) = a(3) = 1.0 / std::sqrt(2.0);
  return PureState::normalized(std::move(a), qubit_dims(2));
}

PureState ising_ground_state(double xi) {
  // (1 - sin xi) and cos xi share the factor cos(xi/2) - sin(xi/2); dividing
  // it out keeps the xi -> pi/2 limit (the Bell state) well defined.
  const double c = std::cos(0.5 * xi);
  const double s = std::sin(0.5 * xi);
  CVector a(4);
  a(0) = a(3) = 0.5 * (c + s);  // |00>, |11>
  a(1) = a(2) = 0.5 * (c - s);  // |01>, |10>
  return PureState::normalized(std::move(a), qubit_dims(2));
}

PureState plus_product_state(int qubits) {
  const int d = 1 << qubits;
  return PureState::normalized(CVector::Constant(d, 1.0), qubit_dims(qubits));
}

DensityMatrix werner_mix(double mu, const DensityMatrix& rho) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw Error(ErrorCode::BadRecipe, "mu must lie in [0, 1]");
  const int d = rho.dim();
  CMatrix m = mu * rho.matrix();
  m.diagonal().array() += (1.0 - mu) / d;
  return DensityMatrix::trusted(std::move(m), rho.dims());
}

DensityMatrix make_state(const StateRecipe& r) {
  switch (r.kind) {
    case RecipeKind::ghz:
      return ghz_state(require_angle(r.theta, "theta", r.kind), require_qubits(r.qubits, r.kind)).density();
    case RecipeKind::w:
      return w_state(require_angle(r.theta, "theta", r.kind), require_angle(r.phi, "phi", r.kind)).density();
    case RecipeKind::bell:
      return bell_state().density();
    case RecipeKind::ising_ground:
      return ising_ground_state(require_angle(r.xi, "xi", r.kind)).density();
    case RecipeKind::plus_product:
      return plus_product_state(require_qubits(r.qubits, r.kind)).density();
    case RecipeKind::werner_mix: {
      if (!r.inner) throw Error(ErrorCode::BadRecipe, "werner_mix recipe needs an inner recipe");
      return werner_mix(require_angle(r.mu, "mu", r.kind), make_state(*r.inner));
    }
    case RecipeKind::random_pure:
    case RecipeKind::random_mixed: {
      const Dims& dims = require(r.dims, "dims", r.kind);
      if (dims.empty() || product(dims) < 1 || product(dims) > 4096) throw Error(ErrorCode::BadRecipe, "bad dims");
      for (int k : dims) {
        if (k < 1) throw Error(ErrorCode::BadRecipe, "bad dims");
      }
      Rng rng(require(r.seed, "seed", r.kind));
      return r.kind == RecipeKind::random_pure ? haar_pure(dims, rng).density() : hilbert_schmidt(dims, rng);
    }
    case RecipeKind::explicit_matrix:
      return require(r.matrix, "matrix", r.kind);
  }
  throw Error(ErrorCode::BadRecipe, "unhandled recipe kind");
}

}  // namespace qcohere
