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

#ifndef QCOHERE_COHERENCE_HPP
#define QCOHERE_COHERENCE_HPP

#include "qcohere/basis.hpp"
#include "qcohere/optim.hpp"

namespace qcohere {

/// Which state plays the role of the closest incoherent state rho_d when
/// computing the basis gap delta C.
enum class DephasingConvention {
  optimizer_argmin,  // minimizer found while computing C^(b)
  dephased,          // rho with its off-diagonal elements (in b) removed
};

std::string to_string(DephasingConvention c);
DephasingConvention parse_dephasing_convention(const std::string& s);

struct CoherenceOptions {
  optim::OptimizerConfig optimizer;
  DephasingConvention delta_convention = DephasingConvention::optimizer_argmin;
  /// Throw OptimizerFailure instead of returning an unconverged estimate.
  bool require_convergence = false;
};

/// Basis-independent coherence: distance from rho to I/d.
double total_coherence(const DensityMatrix& rho);

/// Total coherence of any pure state in dimension d.
double pure_coherence_closed_form(int d);

/// Total coherence of (1 - mu) I/d + mu |psi><psi| for any |psi>.
double werner_coherence_closed_form(double mu, int d);

struct BasisCoherence {
  double value = 0.0;
  DensityMatrix argmin;  // diagonal in the basis
  optim::OptimizerResult diagnostics;
};

/// Distance from rho to the closest state diagonal in b. The probability
/// simplex is searched from the dephased state, the uniform state and
/// random Dirichlet draws.
BasisCoherence basis_coherence(const DensityMatrix& rho, const BasisSpec& b, const CoherenceOptions& opts = {});

struct DeltaCoherence {
  double value = 0.0;
  DephasingConvention convention = DephasingConvention::optimizer_argmin;
};

/// Distance from rho_d to I/d.
DeltaCoherence delta_coherence(const DensityMatrix& rho, const BasisSpec& b, const CoherenceOptions& opts = {});
/// Same, reusing an already computed C^(b) minimizer.
DeltaCoherence delta_coherence(const DensityMatrix& rho, const BasisSpec& b, const BasisCoherence& bc,
                               DephasingConvention convention);

/// |C(U^dagger rho U) - C(rho)|.
double unitary_invariance_check(const DensityMatrix& rho, const UnitaryMatrix& u);

}  // namespace qcohere

#endif  // QCOHERE_COHERENCE_HPP
