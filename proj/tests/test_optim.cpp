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

#include "qcohere/optim.hpp"
#include "qcohere/random.hpp"

using namespace qcohere;
using namespace qcohere::optim;

namespace {

const std::vector<double> kTarget{0.1, 0.6, 0.3};

// squared distance of the weights to kTarget plus 1 - |<a|v>|^2
double toy(const Point& pt, Gradient* g, const CVector& a) {
  const auto& p = pt.simplices[0];
  double f = 0.0;
  for (int i = 0; i < 3; ++i) f += (p[i] - kTarget[i]) * (p[i] - kTarget[i]);
  const cplx ov = a.dot(pt.spheres[0]);
  f += 1.0 - std::norm(ov);
  if (g) {
    g->simplices[0].resize(3);
    for (int i = 0; i < 3; ++i) g->simplices[0][i] = 2.0 * (p[i] - kTarget[i]);
    // d/dv of -|<a|v>|^2 in the (Re + i Im) convention
    g->spheres[0] = -2.0 * ov * a;
  }
  return f;
}

CVector unit(int n, std::uint64_t seed) {
  Rng rng(seed);
  CVector v = complex_gaussian(n, rng);
  return v / v.norm();
}

}  // namespace

TEST_CASE("encode and decode round trip") {
  Parametrization param;
  param.simplex(3).sphere(2).simplex(2);
  CHECK(param.num_params() == 3 + 4 + 2);
  CHECK(param.num_simplices() == 2);
  CHECK(param.num_spheres() == 1);
  Rng rng(4);
  const Point p = param.random_point(rng);
  Point back;
  param.decode(param.encode(p), back);
  for (int s = 0; s < 2; ++s) {
    for (std::size_t i = 0; i < p.simplices[s].size(); ++i) CHECK(back.simplices[s][i] == doctest::Approx(p.simplices[s][i]));
  }
  CHECK((back.spheres[0] - p.spheres[0]).norm() < 1e-14);

  std::vector<double> x = param.encode(p);
  for (double& v : x) v *= 3.0;
  Point before, after;
  param.decode(x, before);
  param.canonicalize(x);
  param.decode(x, after);
  CHECK((before.spheres[0] - after.spheres[0]).norm() < 1e-14);
  CHECK(after.simplices[0][1] == doctest::Approx(before.simplices[0][1]));
}

TEST_CASE("zero weights encode to a finite floor") {
  Parametrization param;
  param.simplex(2);
  Point p;
  p.simplices = {{1.0, 0.0}};
  for (double v : param.encode(p)) CHECK(std::isfinite(v));
}

TEST_CASE("pullback agrees with finite differences") {
  const CVector a = unit(3, 8);
  Parametrization param;
  param.simplex(3).sphere(3);
  Rng rng(12);
  std::vector<double> x = param.encode(param.random_point(rng));
  for (double& v : x) v *= 1.3;  // off the unit sphere on purpose

  Point pt;
  param.decode(x, pt);
  Gradient g;
  g.simplices.resize(1);
  g.spheres.resize(1);
  toy(pt, &g, a);
  std::vector<double> grad(x.size());
  param.pullback(x, pt, g, grad);

  auto f = [&](const std::vector<double>& y) {
    Point q;
    param.decode(y, q);
    return toy(q, nullptr, a);
  };
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<double> xp = x, xm = x;
    xp[i] += 1e-6;
    xm[i] -= 1e-6;
    CHECK(grad[i] == doctest::Approx((f(xp) - f(xm)) / 2e-6).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("both minimizers solve the toy problem") {
  const CVector a = unit(3, 21);
  Parametrization param;
  param.simplex(3).sphere(3);
  OptimizerConfig cfg;
  cfg.seed = 5;
  cfg.max_evals = 20000;

  const OptimizerResult smooth = minimize_smooth([&](const Point& p, Gradient* g) { return toy(p, g, a); }, param, cfg);
  CHECK(smooth.converged);
  CHECK(smooth.value < 1e-12);
  CHECK(smooth.start_values.size() == 8);

  const OptimizerResult powell = minimize([&](const Point& p) { return toy(p, nullptr, a); }, param, cfg);
  CHECK(powell.value < 1e-8);
  for (int i = 0; i < 3; ++i) CHECK(powell.point.simplices[0][i] == doctest::Approx(kTarget[i]).epsilon(1e-4));
}

TEST_CASE("explicit starts run first and results are reproducible") {
  const CVector a = unit(2, 3);
  Parametrization param;
  param.simplex(3).sphere(2);
  Point start;
  start.simplices = {kTarget};
  start.spheres = {a};
  OptimizerConfig cfg;
  cfg.starts = 1;
  auto f = [&](const Point& p, Gradient* g) { return toy(p, g, a); };
  const OptimizerResult r = minimize_smooth(f, param, cfg, std::span<const Point>(&start, 1));
  CHECK(r.best_start == 0);
  CHECK(r.value < 1e-14);

  cfg.starts = 6;
  cfg.seed = 99;
  const OptimizerResult r1 = minimize_smooth(f, param, cfg);
  const OptimizerResult r2 = minimize_smooth(f, param, cfg);
  cfg.parallel_starts = true;
  const OptimizerResult r3 = minimize_smooth(f, param, cfg);
  CHECK(r1.start_values == r2.start_values);
  CHECK(r1.start_values == r3.start_values);
  CHECK(r1.params == r3.params);
}

TEST_CASE("configuration and objective errors") {
  OptimizerConfig cfg;
  cfg.starts = 0;
  CHECK_THROWS_AS(cfg.check(), Error);
  cfg = {};
  cfg.tol = 0.0;
  CHECK_THROWS_AS(cfg.check(), Error);

  Parametrization param;
  param.simplex(2);
  try {
    minimize_smooth([](const Point&, Gradient*) { return std::nan(""); }, param, {});
    FAIL("expected NonFiniteObjective");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonFiniteObjective);
  }
}

TEST_CASE("budget exhaustion is reported as non-convergence") {
  const CVector a = unit(4, 30);
  Parametrization param;
  param.simplex(3).sphere(4);
  OptimizerConfig cfg;
  cfg.max_evals = 3;
  cfg.starts = 2;
  const OptimizerResult r = minimize([&](const Point& p) { return toy(p, nullptr, a); }, param, cfg);
  CHECK_FALSE(r.converged);
  CHECK(r.evaluations >= 2 * 3);
}
