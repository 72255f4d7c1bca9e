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

#ifndef QCOHERE_DECOMPOSE_HPP
#define QCOHERE_DECOMPOSE_HPP

#include <vector>

#include "qcohere/coherence.hpp"

namespace qcohere {

/// Convex mixture of K pure product states,
///   sigma = sum_k p_k |a_k1><a_k1| (x) ... (x) |a_kN><a_kN|.
struct SeparableAnsatz {
  Dims dims;
  std::vector<double> weights;
  std::vector<std::vector<CVector>> factors;  // [term][subsystem], unit norm

  int terms() const { return static_cast<int>(weights.size()); }
  void check() const;
  CMatrix matrix() const;
  DensityMatrix density() const;
};

struct DecompositionOptions {
  optim::OptimizerConfig optimizer;
  /// Number of product terms K; 0 means K = 2d.
  int terms = 0;
  DephasingConvention delta_convention = DephasingConvention::optimizer_argmin;
  bool require_convergence = false;

  CoherenceOptions coherence_options() const;
};

/// rho_1 (x) ... (x) rho_N built from the single-subsystem marginals.
DensityMatrix product_of_marginals(const DensityMatrix& rho);

/// D(rho, pi_rho): distance to the closest product state.
double collective_coherence(const DensityMatrix& rho);
/// D(pi_rho, I/d).
double localized_coherence(const DensityMatrix& rho);

struct IntrinsicCoherence {
  double value = 0.0;  // upper estimate of the distance to the separable set
  SeparableAnsatz argmin;
  DensityMatrix sigma;
  optim::OptimizerResult diagnostics;
};

/// Searches the separable set over K-term pure-product ansaetze. pi_rho
/// (spectrally decomposed into product terms) and the computational-basis
/// dephasing of rho are explicit starts, so with K >= d the estimate never
/// exceeds the collective coherence.
IntrinsicCoherence intrinsic_coherence(const DensityMatrix& rho, const DecompositionOptions& opts = {});

/// D(sigma_min, I/d).
double local_coherence_bi(const DensityMatrix& rho, const DecompositionOptions& opts = {});
double local_coherence_bi(const IntrinsicCoherence& ic);
/// D(sigma_min, dephase(rho, b)).
double local_coherence_bd(const DensityMatrix& rho, const BasisSpec& b, const DecompositionOptions& opts = {});
double local_coherence_bd(const DensityMatrix& rho, const BasisSpec& b, const IntrinsicCoherence& ic);

inline constexpr double kSlackTolerance = 1e-9;

struct DecompositionReport {
  double total = 0.0;        // C
  double collective = 0.0;   // C_c
  double localized = 0.0;    // C_l
  double intrinsic = 0.0;    // C_I (upper estimate)
  double local_bi = 0.0;     // C_L
  double local_bd = 0.0;     // C_L^(b)
  double basis = 0.0;        // C^(b)
  double delta = 0.0;        // delta C^(b)
  DephasingConvention delta_convention = DephasingConvention::optimizer_argmin;
  std::string basis_label;

  double slack29 = 0.0;  // C_I + C_L - C
  double slack36 = 0.0;  // C_c + C_l - C
  double slack37 = 0.0;  // C_c - C_I
  double slack41 = 0.0;  // C^(b) + dC - C
  double slack42 = 0.0;  // C_I + C_L^(b) + dC - C

  int starts = 0;
  long evaluations = 0;
  bool converged = false;

  /// True when any slack is below -kSlackTolerance.
  bool violation() const;
  double min_slack() const;
};

/// Every coherence quantity for one state together with the inequality
/// slacks relating them.
DecompositionReport check_inequalities(const DensityMatrix& rho, const BasisSpec& b,
                                       const DecompositionOptions& opts = {});

struct ClosestProductCheck {
  double worst_violation = 0.0;  // max over trials of D(rho, pi_rho) - D(rho, pi)
  long worst_trial = -1;
  long trials = 0;
};

/// Samples product states and compares their distance to rho with that of
/// pi_rho. Even trials draw every factor from the Hilbert-Schmidt ensemble;
/// odd trials perturb the marginals, (1 - e) rho_i + e tau_i, to probe the
/// neighbourhood of the minimizer.
ClosestProductCheck verify_closest_product(const DensityMatrix& rho, long trials, std::uint64_t seed);

struct LocalInvarianceSlacks {
  double collective = 0.0;
  double localized = 0.0;
  double intrinsic = 0.0;
  double local_bi = 0.0;
};

/// |value(U_loc^dagger rho U_loc) - value(rho)| for U_loc = U_1 (x) ... (x) U_N.
LocalInvarianceSlacks local_unitary_invariance_check(const DensityMatrix& rho, const std::vector<UnitaryMatrix>& locals,
                                                     const DecompositionOptions& opts = {});

}  // namespace qcohere

#endif  // QCOHERE_DECOMPOSE_HPP
