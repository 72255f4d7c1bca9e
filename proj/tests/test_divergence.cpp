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

#include "qcohere/divergence.hpp"
#include "qcohere/random.hpp"
#include "qcohere/recipes.hpp"

using namespace qcohere;

namespace {

DensityMatrix diag_state(std::vector<double> p) {
  CMatrix m = CMatrix::Zero(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(i, i) = p[i];
  return validate(m, {static_cast<int>(p.size())});
}

}  // namespace

TEST_CASE("classical divergences") {
  const ProbDist p({1.0, 0.0}), q({0.5, 0.5}), r({0.25, 0.75});
  CHECK(lp_distance(p, q, 1) == doctest::Approx(1.0));
  CHECK(lp_distance(p, q, 2) == doctest::Approx(std::sqrt(0.5)));
  CHECK(shannon_entropy(q) == doctest::Approx(1.0));
  CHECK(shannon_entropy(p) == 0.0);
  CHECK(relative_entropy(p, q) == doctest::Approx(1.0));
  CHECK_THROWS_AS(relative_entropy(q, p), Error);
  CHECK_THROWS_AS(j_divergence(p, q), Error);
  CHECK(j_divergence(q, r) == doctest::Approx(0.5 * (relative_entropy(q, r) + relative_entropy(r, q))));
  CHECK(classical_jsd(p, q) == doctest::Approx(0.311278124459133).epsilon(1e-12));
  CHECK(classical_jsd(p, ProbDist({0.0, 1.0})) == doctest::Approx(1.0));
  CHECK(classical_jsd(q, q) == 0.0);
  // S-divergence form of the JSD
  CHECK(0.5 * (s_divergence(p, q) + s_divergence(q, p)) == doctest::Approx(classical_jsd(p, q)));
  CHECK_THROWS_AS(ProbDist({0.5, 0.6}), Error);
  CHECK_THROWS_AS(lp_distance(p, ProbDist({1.0}), 1), Error);
}

TEST_CASE("QJSD reference values") {
  const DensityMatrix zero = diag_state({1.0, 0.0});
  const DensityMatrix mixed = maximally_mixed(2);
  CHECK(qjsd(zero, mixed) == doctest::Approx(0.311278124459133).epsilon(1e-12));
  CHECK(metric(zero, mixed) == doctest::Approx(0.557923).epsilon(1e-6));
  CHECK(qjsd(zero, diag_state({0.0, 1.0})) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(qjsd(zero, zero) == 0.0);
}

TEST_CASE("QJSD on commuting states is the classical JSD") {
  const std::vector<double> a{0.1, 0.2, 0.7}, b{0.5, 0.4, 0.1};
  CHECK(qjsd(diag_state(a), diag_state(b)) == doctest::Approx(classical_jsd(ProbDist(a), ProbDist(b))).epsilon(1e-13));
}

TEST_CASE("QJSD is symmetric and bounded on random pairs") {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + trial % 5;
    const DensityMatrix a = hilbert_schmidt({d}, rng);
    const DensityMatrix b = trial % 2 ? haar_pure({d}, rng).density() : hilbert_schmidt({d}, rng);
    const double j = qjsd(a, b);
    CHECK(j >= 0.0);
    CHECK(j <= 1.0);
    CHECK(std::abs(j - qjsd(b, a)) < 1e-14);
  }
  CHECK_THROWS_AS(qjsd(maximally_mixed(2), maximally_mixed(3)), Error);
}

TEST_CASE("equality short-circuit") {
  Rng rng(1);
  const DensityMatrix a = hilbert_schmidt({3}, rng);
  CMatrix m = a.matrix();
  m(0, 0) += 5e-13;
  m(1, 1) -= 5e-13;
  CHECK(qjsd(a, validate(m, {3})) == 0.0);
}

TEST_CASE("quantum relative entropy") {
  const std::vector<double> a{0.3, 0.7}, b{0.6, 0.4};
  CHECK(quantum_relative_entropy(diag_state(a), diag_state(b)) ==
        doctest::Approx(relative_entropy(ProbDist(a), ProbDist(b))).epsilon(1e-13));
  CHECK(quantum_relative_entropy(diag_state(a), diag_state(a)) == doctest::Approx(0.0));
  CHECK_THROWS_AS(quantum_relative_entropy(maximally_mixed(2), diag_state({1.0, 0.0})), Error);
  // pure rho inside the support of a full-rank sigma
  CHECK(quantum_relative_entropy(bell_state().density(), maximally_mixed(4)) == doctest::Approx(2.0));
}

TEST_CASE("QJSD gradient matches finite differences") {
  Rng rng(77);
  for (int d : {2, 3, 4}) {
    const DensityMatrix rho = hilbert_schmidt({d}, rng);
    const DensityMatrix sigma = hilbert_schmidt({d}, rng);
    const DensityMatrix tau = hilbert_schmidt({d}, rng);
    const double s_rho = linalg::entropy_bits(rho.matrix());
    CMatrix g;
    const double j = detail::qjsd_smooth(rho.matrix(), s_rho, sigma.matrix(), &g);
    CHECK(j == doctest::Approx(qjsd(rho, sigma)).epsilon(1e-12));

    const CMatrix dir = tau.matrix() - sigma.matrix();
    const double h = 1e-5;
    const double fp = detail::qjsd_smooth(rho.matrix(), s_rho, sigma.matrix() + h * dir, nullptr);
    const double fm = detail::qjsd_smooth(rho.matrix(), s_rho, sigma.matrix() - h * dir, nullptr);
    const double numeric = (fp - fm) / (2 * h);
    const double analytic = (g * dir).trace().real();
    CHECK(std::abs(numeric - analytic) < 1e-7);
  }
}
