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
#include <cstdlib>

#include "qcohere/divergence.hpp"
#include "qcohere/kernels.hpp"
#include "qcohere/random.hpp"
#include "qcohere/recipes.hpp"

using namespace qcohere;
using namespace qcohere::kernels;

namespace {

bool same(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

bool same_values(const CoherenceRow& a, const CoherenceRow& b) {
  return same(a.total, b.total) && same(a.collective, b.collective) && same(a.localized, b.localized) &&
         same(a.intrinsic, b.intrinsic) && same(a.local_bi, b.local_bi) && same(a.basis, b.basis) &&
         same(a.delta, b.delta) && same(a.slack29, b.slack29) && same(a.slack36, b.slack36) &&
         same(a.slack37, b.slack37) && same(a.slack41, b.slack41) && same(a.slack42, b.slack42) &&
         a.converged == b.converged;
}

}  // namespace

TEST_CASE("triangle kernel: serial and parallel agree exactly") {
  for (Ensemble e : {Ensemble::hilbert_schmidt, Ensemble::haar_pure}) {
    const TriangleSummary s = serial::triangle_slacks(3, 500, e, 17);
    const TriangleSummary p = omp::triangle_slacks(3, 500, e, 17);
    CHECK(s.count == 500);
    CHECK(s.min_slack == p.min_slack);
    CHECK(s.worst_index == p.worst_index);
    CHECK(s.max_qjsd == p.max_qjsd);
    CHECK(s.min_slack >= -1e-12);
    CHECK(s.max_qjsd <= 1.0);
    CHECK(s.min_qjsd >= 0.0);
  }
}

TEST_CASE("worst triple is reproducible from the seed") {
  const TriangleSummary s = serial::triangle_slacks(2, 200, Ensemble::hilbert_schmidt, 5);
  const auto t = triangle_triple(2, Ensemble::hilbert_schmidt, 5, s.worst_index);
  const double d01 = metric(t[0], t[1]), d12 = metric(t[1], t[2]), d02 = metric(t[0], t[2]);
  CHECK(std::min({d01 + d12 - d02, d01 + d02 - d12, d02 + d12 - d01}) == doctest::Approx(s.min_slack).epsilon(1e-12));
}

TEST_CASE("degenerate triple has zero slack") {
  Rng rng(1);
  const DensityMatrix r = hilbert_schmidt({3}, rng);
  CHECK(metric(r, r) + metric(r, r) - metric(r, r) == 0.0);
}

TEST_CASE("closest-product and invariance kernels agree exactly") {
  const ProductSummary s = serial::closest_product({2, 2}, 8, 50, 3);
  const ProductSummary p = omp::closest_product({2, 2}, 8, 50, 3);
  CHECK(s.violations == p.violations);
  CHECK(s.worst_state == p.worst_state);
  CHECK(std::isfinite(s.max_violation));

  const InvarianceSummary a = serial::unitary_invariance(4, 50, 2);
  const InvarianceSummary b = omp::unitary_invariance(4, 50, 2);
  CHECK(a.max_deviation == b.max_deviation);
  CHECK(a.worst_index == b.worst_index);
  CHECK(a.max_deviation <= 1e-9);

  CHECK_THROWS_AS(serial::triangle_slacks(2, 0, Ensemble::haar_pure, 1), Error);
  CHECK_THROWS_AS(omp::closest_product({2, 2}, 1, 0, 1), Error);
}

TEST_CASE("row evaluation kernels agree exactly") {
  Rng rng(8);
  std::vector<DensityMatrix> states;
  for (int i = 0; i < 4; ++i) states.push_back(hilbert_schmidt({2, 2}, rng));
  const BasisSpec b = BasisSpec::computational(4);
  std::vector<DecompositionOptions> opts(4);
  for (int i = 0; i < 4; ++i) opts[i].optimizer.seed = i;
  const auto s = serial::evaluate_rows(states, b, opts, Columns::full);
  const auto p = omp::evaluate_rows(states, b, opts, Columns::full);
  REQUIRE(s.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(same_values(s[i], p[i]));
    CHECK_FALSE(s[i].violation());
  }
  CHECK_THROWS_AS(serial::evaluate_rows(states, b, std::vector<DecompositionOptions>(2), Columns::full), Error);
}

TEST_CASE("row columns") {
  const DensityMatrix ghz = ghz_state(0.3, 3).density();
  const CoherenceRow direct = evaluate_row(ghz, BasisSpec::computational(8), {}, Columns::direct);
  CHECK(std::isnan(direct.intrinsic));
  CHECK(std::isnan(direct.basis));
  CHECK(direct.slack36 >= -1e-9);
  CHECK(direct.min_slack() == direct.slack36);

  const CoherenceRow single = evaluate_row(maximally_mixed(3), BasisSpec::computational(3), {}, Columns::full);
  CHECK(single.total == 0.0);
  CHECK(std::isnan(single.collective));
  CHECK(single.basis < 1e-9);
  CHECK(!std::isnan(single.slack41));
}

TEST_CASE("worker cap from the environment") {
  setenv("QCOHERE_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  setenv("QCOHERE_THREADS", "junk", 1);
  CHECK(worker_count() >= 1);
  unsetenv("QCOHERE_THREADS");
  CHECK(parse_ensemble("haar") == Ensemble::haar_pure);
  CHECK(parse_columns(to_string(Columns::direct)) == Columns::direct);
  CHECK_THROWS_AS(parse_ensemble("gaussian"), Error);
}
