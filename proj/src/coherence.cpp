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

#include "qcohere/coherence.hpp"

#include <algorithm>
#include <cmath>

#include "qcohere/divergence.hpp"

namespace qcohere {

namespace {

// x log2 x with 0 log 0 := 0
double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

void check_match(const DensityMatrix& rho, const BasisSpec& b) {
  if (rho.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "basis and state dimensions differ");
}

}  // namespace

std::string to_string(DephasingConvention c) {
  return c == DephasingConvention::optimizer_argmin ? "optimizer_argmin" : "dephased";
}

DephasingConvention parse_dephasing_convention(const std::string& s) {
  if (s == "optimizer_argmin" || s == "argmin") return DephasingConvention::optimizer_argmin;
  if (s == "dephased") return DephasingConvention::dephased;
  throw Error(ErrorCode::BadParameter, "unknown dephasing convention '" + s + "'");
}

double total_coherence(const DensityMatrix& rho) {
  const int d = rho.dim();
  const CMatrix mixed = CMatrix::Identity(d, d) / static_cast<double>(d);
  return std::sqrt(detail::qjsd_raw(rho.matrix(), linalg::entropy_bits(rho.matrix()), mixed, std::log2(double(d))));
}

double pure_coherence_closed_form(int d) {
  if (d < 2) throw Error(ErrorCode::BadDimension, "dimension must be >= 2");
  const double dd = d;
  const double j = 1.0 + 0.5 * (std::log2(dd) - (1.0 + 1.0 / dd) * std::log2(dd + 1.0));
  return std::sqrt(std::max(j, 0.0));
}

double werner_coherence_closed_form(double mu, int d) {
  if (d < 2) throw Error(ErrorCode::BadDimension, "dimension must be >= 2");
  if (!(mu >= 0.0 && mu <= 1.0)) throw Error(ErrorCode::BadParameter, "mu must lie in [0, 1]");
  const double k = d - 1.0;
  const double bracket = xlog2x(1.0 + mu * k) - (2.0 + mu * k) * std::log2(1.0 + 0.5 * mu * k) +
                         k * xlog2x(1.0 - mu) - (2.0 - mu) * k * std::log2(1.0 - 0.5 * mu);
  return std::sqrt(std::max(bracket / (2.0 * d), 0.0));
}

BasisCoherence basis_coherence(const DensityMatrix& rho, const BasisSpec& b, const CoherenceOptions& opts) {
  check_match(rho, b);
  const int d = rho.dim();
  const CMatrix& B = b.columns();
  const CMatrix in_basis = B.adjoint() * rho.matrix() * B;
  const double s_rho = linalg::entropy_bits(in_basis);

  auto objective = [&](const optim::Point& pt, optim::Gradient* grad) {
    const std::vector<double>& p = pt.simplices[0];
    CMatrix sigma = CMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) sigma(i, i) = p[i];
    if (!grad) return detail::qjsd_smooth(in_basis, s_rho, sigma, nullptr);
    CMatrix g;
    const double j = detail::qjsd_smooth(in_basis, s_rho, sigma, &g);
    grad->simplices[0].resize(d);
    for (int i = 0; i < d; ++i) grad->simplices[0][i] = g(i, i).real();
    return j;
  };

  optim::Parametrization param;
  param.simplex(d);

  std::vector<double> dephased(d);
  for (int i = 0; i < d; ++i) dephased[i] = std::max(in_basis(i, i).real(), 0.0);
  double s = 0.0;
  for (double x : dephased) s += x;
  for (double& x : dephased) x /= s;
  std::vector<optim::Point> starts(2);
  starts[0].simplices = {dephased};
  starts[1].simplices = {std::vector<double>(d, 1.0 / d)};

  optim::OptimizerResult res = optim::minimize_smooth(objective, param, opts.optimizer, starts);
  if (opts.require_convergence && !res.converged) {
    throw Error(ErrorCode::OptimizerFailure, "incoherent-state search did not converge within budget");
  }
  // The dephased state is the exact minimizer whenever rho is incoherent;
  // keep it when the search only wandered around it at roundoff level.
  auto exact_j = [&](const std::vector<double>& p) {
    CMatrix sigma = CMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) sigma(i, i) = p[i];
    return detail::qjsd_raw(in_basis, s_rho, sigma, shannon_bits(p));
  };
  double j = exact_j(res.point.simplices[0]);
  if (const double jd = exact_j(dephased); jd <= j) {
    j = jd;
    res.point.simplices[0] = dephased;
  }
  const std::vector<double>& p = res.point.simplices[0];
  CVector diag(d);
  for (int i = 0; i < d; ++i) diag(i) = p[i];
  DensityMatrix argmin = DensityMatrix::trusted(B * diag.asDiagonal() * B.adjoint(), rho.dims());
  const double value = std::sqrt(j);
  return BasisCoherence{value, std::move(argmin), std::move(res)};
}

DeltaCoherence delta_coherence(const DensityMatrix& rho, const BasisSpec& b, const BasisCoherence& bc,
                               DephasingConvention convention) {
  check_match(rho, b);
  const DensityMatrix rho_d = convention == DephasingConvention::optimizer_argmin ? bc.argmin : dephase(rho, b);
  return DeltaCoherence{total_coherence(rho_d), convention};
}

DeltaCoherence delta_coherence(const DensityMatrix& rho, const BasisSpec& b, const CoherenceOptions& opts) {
  check_match(rho, b);
  if (opts.delta_convention == DephasingConvention::dephased) {
    return DeltaCoherence{total_coherence(dephase(rho, b)), DephasingConvention::dephased};
  }
  return delta_coherence(rho, b, basis_coherence(rho, b, opts), DephasingConvention::optimizer_argmin);
}

double unitary_invariance_check(const DensityMatrix& rho, const UnitaryMatrix& u) {
  return std::abs(total_coherence(conjugate(rho, u)) - total_coherence(rho));
}

}  // namespace qcohere
