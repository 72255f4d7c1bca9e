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

#ifndef QCOHERE_BASIS_HPP
#define QCOHERE_BASIS_HPP

#include <string>

#include "qcohere/qstate.hpp"

namespace qcohere {

/// Ordered orthonormal basis {|b_n>}, stored as the columns of a unitary.
/// A state is incoherent with respect to the basis when it is diagonal in it.
class BasisSpec {
 public:
  BasisSpec(UnitaryMatrix columns, std::string label);

  static BasisSpec computational(int d);
  /// |+>,|-> on each qubit. Qudit factors of dimension k > 2 use the
  /// k-point discrete Fourier basis instead.
  static BasisSpec hadamard(const Dims& dims);
  /// "computational" or "hadamard".
  static BasisSpec named(const std::string& name, const Dims& dims);

  int dim() const { return u_.dim(); }
  const CMatrix& columns() const { return u_.matrix(); }
  const UnitaryMatrix& unitary() const { return u_; }
  const std::string& label() const { return label_; }

 private:
  UnitaryMatrix u_;
  std::string label_;
};

/// Removes every off-diagonal element of rho in basis b.
DensityMatrix dephase(const DensityMatrix& rho, const BasisSpec& b);

}  // namespace qcohere

#endif  // QCOHERE_BASIS_HPP
