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

#ifndef QCOHERE_QSTATE_HPP
#define QCOHERE_QSTATE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qcohere/errors.hpp"

namespace qcohere {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Local dimensions of the subsystems, outermost (most significant) first.
using Dims = std::vector<int>;

namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPsd = 1e-10;
inline constexpr double kNorm = 1e-12;
inline constexpr double kUnitary = 1e-10;
}  // namespace tol

int product(const Dims& dims);

/// Hermitian, unit-trace, positive semidefinite matrix together with the
/// tensor-product structure of the space it acts on. Instances are immutable;
/// the only ways to obtain one are `validate` and the library operations.
class DensityMatrix {
 public:
  int dim() const { return static_cast<int>(m_.rows()); }
  const Dims& dims() const { return dims_; }
  int num_subsystems() const { return static_cast<int>(dims_.size()); }
  const CMatrix& matrix() const { return m_; }
  cplx operator()(int r, int c) const { return m_(r, c); }

  /// Wraps a matrix that is a density matrix by construction. The matrix is
  /// symmetrized but otherwise unchecked.
  static DensityMatrix trusted(CMatrix m, Dims dims);

 private:
  DensityMatrix(CMatrix m, Dims dims) : m_(std::move(m)), dims_(std::move(dims)) {}

  CMatrix m_;
  Dims dims_;
};

/// Checks the density-matrix invariants and returns the symmetrized,
/// trace-renormalized state.
DensityMatrix validate(const CMatrix& m, const Dims& dims);

/// Unit-norm ket.
class PureState {
 public:
  PureState(CVector amplitudes, Dims dims);
  static PureState normalized(CVector amplitudes, Dims dims);

  int dim() const { return static_cast<int>(a_.size()); }
  const Dims& dims() const { return dims_; }
  const CVector& amplitudes() const { return a_; }
  DensityMatrix density() const;

 private:
  struct Unchecked {};
  PureState(Unchecked, CVector amplitudes, Dims dims) : a_(std::move(amplitudes)), dims_(std::move(dims)) {}

  CVector a_;
  Dims dims_;
};

class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(CMatrix u);
  static UnitaryMatrix identity(int d);

  int dim() const { return static_cast<int>(u_.rows()); }
  const CMatrix& matrix() const { return u_; }

 private:
  CMatrix u_;
};

UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b);
UnitaryMatrix kron(std::span<const UnitaryMatrix> factors);

struct Spectrum {
  RVector values;   // descending, clamped to [0,1], summing to one
  CMatrix vectors;  // columns are the matching orthonormal eigenvectors
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
DensityMatrix tensor(std::span<const DensityMatrix> factors);

/// Reduced state on the subsystems listed in `keep` (0-based indices). The
/// kept subsystems retain their original relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep);

Spectrum spectrum(const DensityMatrix& rho);

/// Shannon entropy in bits of a list of weights, with 0 log 0 := 0.
double shannon_bits(std::span<const double> p);
double von_neumann_entropy(const DensityMatrix& rho);

DensityMatrix maximally_mixed(int d);
DensityMatrix maximally_mixed(const Dims& dims);

/// U^dagger rho U.
DensityMatrix conjugate(const DensityMatrix& rho, const UnitaryMatrix& u);

/// Largest elementwise modulus of a - b.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

namespace linalg {

/// Eigenvalues of a Hermitian matrix in descending order, without any
/// clamping. Throws EigenFailure.
RVector hermitian_eigenvalues(const CMatrix& h);

/// Entropy in bits of a matrix that is a density matrix up to rounding:
/// eigenvalues in [-kPsd, 0) count as zero.
double entropy_bits(const CMatrix& h);

}  // namespace linalg

}  // namespace qcohere

#endif  // QCOHERE_QSTATE_HPP
