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

#ifndef QCOHERE_DIVERGENCE_HPP
#define QCOHERE_DIVERGENCE_HPP

#include <vector>

#include "qcohere/qstate.hpp"

namespace qcohere {

/// Discrete probability distribution; entries in [0,1] summing to one.
class ProbDist {
 public:
  explicit ProbDist(std::vector<double> p);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double>& probs() const { return p_; }

 private:
  std::vector<double> p_;
};

inline constexpr double kSupportThreshold = 1e-10;
inline constexpr double kEqualityThreshold = 1e-12;

double lp_distance(const ProbDist& p, const ProbDist& q, int n);
double shannon_entropy(const ProbDist& p);
/// Kullback-Leibler divergence in bits. Throws SupportViolation.
double relative_entropy(const ProbDist& p, const ProbDist& q);
/// Symmetrized relative entropy; needs equal supports.
double j_divergence(const ProbDist& p, const ProbDist& q);
/// sum p log2(2p / (p + q)); finite for any supports.
double s_divergence(const ProbDist& p, const ProbDist& q);
/// H((P+Q)/2) - (H(P) + H(Q))/2, in [0, 1].
double classical_jsd(const ProbDist& p, const ProbDist& q);

/// Tr(rho log2 rho - rho log2 sigma) from both spectral decompositions.
double quantum_relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Quantum Jensen-Shannon divergence S((rho+sigma)/2) - (S(rho)+S(sigma))/2,
/// always via entropies so no support condition arises.
double qjsd(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Square root of the QJSD.
double metric(const DensityMatrix& rho, const DensityMatrix& sigma);

namespace detail {

/// QJSD between raw density matrices whose entropies are already known.
/// Used by optimizer objectives that evaluate many sigma against one rho.
double qjsd_raw(const CMatrix& rho, double s_rho, const CMatrix& sigma, double s_sigma);

/// Unclamped QJSD together with its gradient in sigma,
/// G = (log2 sigma - log2 m) / 2, so that dJ = Tr(G dsigma). Eigenvalues
/// are floored before the logarithm; G may be null.
double qjsd_smooth(const CMatrix& rho, double s_rho, const CMatrix& sigma, CMatrix* grad);

}  // namespace detail

}  // namespace qcohere

#endif  // QCOHERE_DIVERGENCE_HPP
