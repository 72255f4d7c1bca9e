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
#include <numbers>

#include "qcohere/decompose.hpp"
#include "qcohere/divergence.hpp"
#include "qcohere/random.hpp"
#include "qcohere/recipes.hpp"

using namespace qcohere;

namespace {

// Candidate separable state for the Bell state: equal mixture of |00> and |11>.
constexpr double kBellCandidate = 0.557923;

DensityMatrix random_product(const Dims& dims, Rng& rng) {
  std::vector<DensityMatrix> f;
  for (int d : dims) f.push_back(hilbert_schmidt({d}, rng));
  return tensor(std::span<const DensityMatrix>(f));
}

}  // namespace

TEST_CASE("product of marginals") {
  const DensityMatrix bell = bell_state().density();
  CHECK(max_abs_diff(product_of_marginals(bell).matrix(), maximally_mixed(4).matrix()) < 1e-15);
  Rng rng(1);
  const DensityMatrix p = random_product({2, 3}, rng);
  CHECK(max_abs_diff(product_of_marginals(p).matrix(), p.matrix()) < 1e-14);
  CHECK_THROWS_AS(product_of_marginals(maximally_mixed(4)), Error);
}

TEST_CASE("collective and localized coherence") {
  const DensityMatrix bell = bell_state().density();
  CHECK(collective_coherence(bell) == doctest::Approx(0.740807).epsilon(1e-6));
  CHECK(localized_coherence(bell) == 0.0);

  const DensityMatrix plus = plus_product_state(2).density();
  CHECK(collective_coherence(plus) == 0.0);
  CHECK(localized_coherence(plus) == doctest::Approx(total_coherence(plus)));
}

TEST_CASE("separable ansatz") {
  SeparableAnsatz a;
  a.dims = {2, 2};
  a.weights = {0.5, 0.5};
  CVector z0(2), z1(2);
  z0 << 1, 0;
  z1 << 0, 1;
  a.factors = {{z0, z0}, {z1, z1}};
  a.check();
  const DensityMatrix s = a.density();
  CHECK(s(0, 0).real() == doctest::Approx(0.5));
  CHECK(s(3, 3).real() == doctest::Approx(0.5));
  CHECK(metric(bell_state().density(), s) == doctest::Approx(kBellCandidate).epsilon(1e-6));

  a.weights = {0.7, 0.5};
  CHECK_THROWS_AS(a.check(), Error);
}

TEST_CASE("intrinsic coherence of the Bell state") {
  const IntrinsicCoherence ic = intrinsic_coherence(bell_state().density());
  CHECK(ic.value <= kBellCandidate + 1e-4);
  CHECK(ic.value == doctest::Approx(0.5579230).epsilon(1e-6));
  CHECK(ic.value <= collective_coherence(bell_state().density()));
  CHECK(ic.argmin.terms() == 8);
  CHECK(std::abs(metric(bell_state().density(), ic.sigma) - ic.value) < 1e-15);
}

TEST_CASE("separable states have zero intrinsic coherence") {
  Rng rng(5);
  SUBCASE("products") {
    for (int i = 0; i < 3; ++i) CHECK(intrinsic_coherence(random_product({2, 2}, rng)).value == 0.0);
  }
  SUBCASE("mixtures of products") {
    const DensityMatrix a = random_product({2, 2}, rng), b = random_product({2, 2}, rng);
    const DensityMatrix mix = DensityMatrix::trusted(0.3 * a.matrix() + 0.7 * b.matrix(), {2, 2});
    CHECK(intrinsic_coherence(mix).value == 0.0);
  }
  SUBCASE("noisy Bell states below the separability threshold") {
    CHECK(intrinsic_coherence(werner_mix(0.3, bell_state().density())).value == 0.0);
    CHECK(intrinsic_coherence(werner_mix(0.6, bell_state().density())).value > 0.05);
  }
}

TEST_CASE("inequality slacks on random states") {
  Rng rng(44);
  for (int i = 0; i < 10; ++i) {
    const DensityMatrix r = hilbert_schmidt({2, 2}, rng);
    const DecompositionReport rep = check_inequalities(r, BasisSpec::computational(4));
    CHECK(rep.min_slack() >= -kSlackTolerance);
    CHECK_FALSE(rep.violation());
    CHECK(rep.intrinsic <= rep.collective + 1e-12);
    CHECK(rep.converged);
    CHECK(rep.basis_label == "computational");
  }
  CHECK_THROWS_AS(check_inequalities(maximally_mixed(4), BasisSpec::computational(4)), Error);
}

TEST_CASE("ansatz size limits") {
  DecompositionOptions o;
  o.terms = 17;
  CHECK_THROWS_AS(intrinsic_coherence(bell_state().density(), o), Error);
  o.terms = 2;
  CHECK(intrinsic_coherence(bell_state().density(), o).value <= kBellCandidate + 1e-4);
}

TEST_CASE("closest product state search") {
  Rng rng(9);
  SUBCASE("product inputs are never beaten") {
    CHECK(verify_closest_product(random_product({2, 2}, rng), 100, 1).worst_violation <= 0.0);
    CHECK(verify_closest_product(random_product({2, 3}, rng), 100, 2).worst_violation <= 0.0);
  }
  SUBCASE("generic mixed states have closer product states than the marginal product") {
    // Frozen counterexample: under the QJSD the product of marginals is not
    // the minimizer over product states for this state.
    const DensityMatrix rho = hilbert_schmidt({2, 2}, rng);
    const ClosestProductCheck c = verify_closest_product(rho, 200, 3);
    CHECK(c.trials == 200);
    CHECK(c.worst_violation > 1e-5);
    CHECK(c.worst_trial % 2 == 1);  // found next to the marginals
    CHECK(verify_closest_product(rho, 200, 3).worst_violation == c.worst_violation);
  }
  CHECK_THROWS_AS(verify_closest_product(bell_state().density(), 0, 1), Error);
}

TEST_CASE("local unitary invariance") {
  Rng rng(12);
  const DensityMatrix r = hilbert_schmidt({2, 2}, rng);
  const std::vector<UnitaryMatrix> u{haar_unitary(2, rng), haar_unitary(2, rng)};
  const LocalInvarianceSlacks s = local_unitary_invariance_check(r, u);
  CHECK(s.collective <= 1e-9);
  CHECK(s.localized <= 1e-9);
  CHECK(s.intrinsic <= 1e-4);
  CHECK(s.local_bi <= 1e-4);
  CHECK_THROWS_AS(local_unitary_invariance_check(r, {u[0]}), Error);
}

TEST_CASE("Ising ground state splits coherence between the two parts") {
  const DensityMatrix a = ising_ground_state(0.0).density();
  const DensityMatrix b = ising_ground_state(std::numbers::pi / 2).density();
  CHECK(collective_coherence(a) < 1e-6);
  CHECK(localized_coherence(a) == doctest::Approx(total_coherence(a)));
  CHECK(localized_coherence(b) < 1e-6);
  CHECK(collective_coherence(b) == doctest::Approx(total_coherence(b)));
}
