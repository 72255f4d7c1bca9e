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

#include "qcohere/divergence.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace qcohere {

namespace {

void same_length(const ProbDist& p, const ProbDist& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::LengthMismatch, "distributions have different lengths");
}

void same_dims(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "states have different dimensions");
}

}  // namespace

ProbDist::ProbDist(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) throw Error(ErrorCode::LengthMismatch, "empty distribution");
  double s = 0.0;
  for (double x : p_) {
    if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::BadParameter, "probability outside [0,1]");
    s += x;
  }
  if (std::abs(s - 1.0) > 1e-10) throw Error(ErrorCode::NotUnitTrace, "probabilities sum to " + std::to_string(s));
}

double lp_distance(const ProbDist& p, const ProbDist& q, int n) {
  same_length(p, q);
  if (n < 1) throw Error(ErrorCode::BadParameter, "norm order must be >= 1");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::pow(std::abs(p[i] - q[i]), n);
  return std::pow(s, 1.0 / n);
}

double shannon_entropy(const ProbDist& p) { return shannon_bits(p.probs()); }

double relative_entropy(const ProbDist& p, const ProbDist& q) {
  same_length(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) throw Error(ErrorCode::SupportViolation, "p_i > 0 where q_i = 0");
    s += p[i] * std::log2(p[i] / q[i]);
  }
  return std::max(s, 0.0);
}

double j_divergence(const ProbDist& p, const ProbDist& q) {
  same_length(p, q);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if ((p[i] == 0.0) != (q[i] == 0.0)) throw Error(ErrorCode::SupportViolation, "supports differ");
  }
  return 0.5 * (relative_entropy(p, q) + relative_entropy(q, p));
}

double s_divergence(const ProbDist& p, const ProbDist& q) {
  same_length(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) s += p[i] * std::log2(2.0 * p[i] / (p[i] + q[i]));
  }
  return s;
}

double classical_jsd(const ProbDist& p, const ProbDist& q) {
  same_length(p, q);
  std::vector<double> mid(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mid[i] = 0.5 * (p[i] + q[i]);
  const double j = shannon_bits(mid) - 0.5 * (shannon_bits(p.probs()) + shannon_bits(q.probs()));
  return std::clamp(j, 0.0, 1.0);
}

double quantum_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  same_dims(rho, sigma);
  const Spectrum r = spectrum(rho);
  const Spectrum s = spectrum(sigma);
  // overlap(i, j) = |<r_i|s_j>|^2
  const Eigen::MatrixXd overlap = (r.vectors.adjoint() * s.vectors).cwiseAbs2();
  double cross = 0.0;
  for (Eigen::Index j = 0; j < s.values.size(); ++j) {
    double weight = 0.0;
    for (Eigen::Index i = 0; i < r.values.size(); ++i) weight += r.values(i) * overlap(i, j);
    if (s.values(j) <= kSupportThreshold) {
      if (weight > kSupportThreshold) throw Error(ErrorCode::SupportViolation, "support(rho) not inside support(sigma)");
      continue;
    }
    cross += weight * std::log2(s.values(j));
  }
  double self = 0.0;
  for (Eigen::Index i = 0; i < r.values.size(); ++i) {
    if (r.values(i) > 0.0) self += r.values(i) * std::log2(r.values(i));
  }
  return std::max(self - cross, 0.0);
}

namespace detail {

double qjsd_raw(const CMatrix& rho, double s_rho, const CMatrix& sigma, double s_sigma) {
  if (max_abs_diff(rho, sigma) <= kEqualityThreshold) return 0.0;
  const CMatrix mid = 0.5 * (rho + sigma);
  const double j = linalg::entropy_bits(mid) - 0.5 * (s_rho + s_sigma);
  return std::clamp(j, 0.0, 1.0);
}

double qjsd_smooth(const CMatrix& rho, double s_rho, const CMatrix& sigma, CMatrix* grad) {
  const double kFloor = 1e-300;
  const CMatrix mid = 0.5 * (rho + sigma);
  auto decompose = [](const CMatrix& a, Eigen::SelfAdjointEigenSolver<CMatrix>& es, bool vectors) {
    es.compute(0.5 * (a + a.adjoint()), vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw Error(ErrorCode::EigenFailure, "eigendecomposition failed");
  };
  auto entropy = [](const RVector& ev) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      if (ev(i) > 0.0) h -= ev(i) * std::log2(ev(i));
    }
    return h;
  };
  Eigen::SelfAdjointEigenSolver<CMatrix> es_sigma, es_mid;
  decompose(sigma, es_sigma, grad != nullptr);
  decompose(mid, es_mid, grad != nullptr);
  const double j = entropy(es_mid.eigenvalues()) - 0.5 * (s_rho + entropy(es_sigma.eigenvalues()));
  if (grad) {
    auto log_eigs = [kFloor](const RVector& ev) {
      RVector l(ev.size());
      for (Eigen::Index i = 0; i < ev.size(); ++i) l(i) = std::log2(std::max(ev(i), kFloor));
      return l;
    };
    const CMatrix& vs = es_sigma.eigenvectors();
    const CMatrix& vm = es_mid.eigenvectors();
    *grad = 0.5 * (vs * log_eigs(es_sigma.eigenvalues()).asDiagonal() * vs.adjoint() -
                   vm * log_eigs(es_mid.eigenvalues()).asDiagonal() * vm.adjoint());
  }
  return j;
}

}  // namespace detail

double qjsd(const DensityMatrix& rho, const DensityMatrix& sigma) {
  same_dims(rho, sigma);
  return detail::qjsd_raw(rho.matrix(), linalg::entropy_bits(rho.matrix()), sigma.matrix(),
                          linalg::entropy_bits(sigma.matrix()));
}

double metric(const DensityMatrix& rho, const DensityMatrix& sigma) { return std::sqrt(qjsd(rho, sigma)); }

}  // namespace qcohere
