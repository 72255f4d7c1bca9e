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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcohere/coherence.hpp"
#include "qcohere/divergence.hpp"
#include "qcohere/random.hpp"
#include "qcohere/recipes.hpp"

using namespace qcohere;

namespace {

DensityMatrix ket0() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  return validate(m, {2});
}

}  // namespace

TEST_CASE("total coherence reference values") {
  CHECK(total_coherence(ket0()) == doctest::Approx(0.557923).epsilon(1e-6));
  CHECK(total_coherence(maximally_mixed(5)) == 0.0);
  CHECK(total_coherence(bell_state().density()) == doctest::Approx(0.740807).epsilon(1e-6));
}

TEST_CASE("pure-state closed form") {
  CHECK(pure_coherence_closed_form(2) == doctest::Approx(0.557923).epsilon(1e-6));
  CHECK(pure_coherence_closed_form(4) == doctest::Approx(0.740807).epsilon(1e-6));
  CHECK(pure_coherence_closed_form(8) == doctest::Approx(0.846710).epsilon(1e-6));
  CHECK_THROWS_AS(pure_coherence_closed_form(1), Error);
  Rng rng(31);
  for (int d : {2, 3, 6}) {
    for (int i = 0; i < 20; ++i) {
      CHECK(std::abs(total_coherence(haar_pure({d}, rng).density()) - pure_coherence_closed_form(d)) < 1e-12);
    }
  }
}

TEST_CASE("Werner closed form matches direct evaluation") {
  Rng rng(8);
  for (int d : {2, 3, 4, 8}) {
    const DensityMatrix psi = haar_pure({d}, rng).density();
    for (int i = 0; i <= 10; ++i) {
      const double mu = i / 10.0;
      CHECK(std::abs(werner_coherence_closed_form(mu, d) - total_coherence(werner_mix(mu, psi))) < 1e-12);
    }
    CHECK(werner_coherence_closed_form(0.0, d) == 0.0);
    CHECK(werner_coherence_closed_form(1.0, d) == doctest::Approx(pure_coherence_closed_form(d)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(werner_coherence_closed_form(-0.1, 2), Error);
  CHECK_THROWS_AS(werner_coherence_closed_form(0.5, 1), Error);
}

TEST_CASE("pure states maximize total coherence") {
  Rng rng(19);
  for (int d : {2, 3, 4}) {
    for (int i = 0; i < 1000; ++i) {
      const double c = total_coherence(hilbert_schmidt({d}, rng));
      CHECK(c >= 0.0);
      CHECK(c <= pure_coherence_closed_form(d) + 1e-12);
    }
  }
}

TEST_CASE("basis coherence") {
  const BasisSpec z = BasisSpec::computational(2);
  const DensityMatrix plus = plus_product_state(1).density();

  SUBCASE("incoherent states give zero and are their own minimizer") {
    CMatrix m = CMatrix::Zero(3, 3);
    m(0, 0) = 0.2;
    m(1, 1) = 0.3;
    m(2, 2) = 0.5;
    const DensityMatrix r = validate(m, {3});
    const BasisCoherence bc = basis_coherence(r, BasisSpec::computational(3));
    CHECK(bc.value < 1e-9);
    CHECK(max_abs_diff(bc.argmin.matrix(), r.matrix()) < 1e-9);
    CHECK(basis_coherence(maximally_mixed(4), BasisSpec::computational(4)).value < 1e-9);
  }
  SUBCASE("|+> against the z basis sits at distance D(|+>, I/2)") {
    const BasisCoherence bc = basis_coherence(plus, z);
    CHECK(bc.value == doctest::Approx(0.557923).epsilon(1e-6));
    CHECK(bc.diagnostics.converged);
    CHECK(basis_coherence(plus, BasisSpec::hadamard({2})).value < 1e-9);
  }
  SUBCASE("never above the dephased candidate, triangle with delta C") {
    Rng rng(2);
    for (int i = 0; i < 30; ++i) {
      const DensityMatrix r = hilbert_schmidt({4}, rng);
      const BasisSpec b = BasisSpec::computational(4);
      const BasisCoherence bc = basis_coherence(r, b);
      CHECK(bc.value <= metric(r, dephase(r, b)) + 1e-12);
      const double dc = delta_coherence(r, b, bc, DephasingConvention::optimizer_argmin).value;
      CHECK(bc.value + dc - total_coherence(r) >= -1e-9);
    }
  }
  SUBCASE("convergence can be required") {
    CoherenceOptions o;
    o.optimizer.max_evals = 1;
    o.require_convergence = true;
    Rng rng(3);
    try {
      basis_coherence(hilbert_schmidt({3}, rng), BasisSpec::computational(3), o);
      FAIL("expected OptimizerFailure");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::OptimizerFailure);
    }
  }
  CHECK_THROWS_AS(basis_coherence(plus, BasisSpec::computational(3)), Error);
}

TEST_CASE("delta coherence") {
  const BasisSpec z = BasisSpec::computational(3);
  CHECK(delta_coherence(maximally_mixed(3), z).value < 1e-9);
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = 0.5;
  m(1, 1) = 0.3;
  m(2, 2) = 0.2;
  const DensityMatrix r = validate(m, {3});
  CHECK(delta_coherence(r, z).value == doctest::Approx(total_coherence(r)).epsilon(1e-8));

  CoherenceOptions o;
  o.delta_convention = DephasingConvention::dephased;
  const DensityMatrix plus = plus_product_state(1).density();
  const DeltaCoherence dc = delta_coherence(plus, BasisSpec::computational(2), o);
  CHECK(dc.convention == DephasingConvention::dephased);
  CHECK(dc.value == 0.0);
  CHECK(parse_dephasing_convention(to_string(DephasingConvention::dephased)) == DephasingConvention::dephased);
}

TEST_CASE("unitary invariance") {
  Rng rng(6);
  for (int d : {2, 4, 8}) {
    const DensityMatrix r = hilbert_schmidt({d}, rng);
    CHECK(unitary_invariance_check(r, UnitaryMatrix::identity(d)) == 0.0);
    CHECK(unitary_invariance_check(r, haar_unitary(d, rng)) < 1e-12);
  }
}
