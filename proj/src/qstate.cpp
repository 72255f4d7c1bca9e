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

#include "qcohere/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qcohere/basis.hpp"

namespace qcohere {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnitTrace: return "NotUnitTrace";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadSubsystemIndex: return "BadSubsystemIndex";
    case ErrorCode::EigenFailure: return "EigenFailure";
    case ErrorCode::BadRecipe: return "BadRecipe";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::SingleSubsystem: return "SingleSubsystem";
    case ErrorCode::NonFiniteObjective: return "NonFiniteObjective";
    case ErrorCode::OptimizerFailure: return "OptimizerFailure";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

void check_dims(const Dims& dims, int side) {
  if (dims.empty()) throw Error(ErrorCode::DimensionMismatch, "empty subsystem dimension list");
  for (int d : dims) {
    if (d < 1) throw Error(ErrorCode::DimensionMismatch, "subsystem dimension must be positive");
  }
  if (product(dims) != side) {
    throw Error(ErrorCode::DimensionMismatch,
                "product of subsystem dimensions " + std::to_string(product(dims)) +
                    " does not match matrix side " + std::to_string(side));
  }
}

}  // namespace

int product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

DensityMatrix DensityMatrix::trusted(CMatrix m, Dims dims) {
  CMatrix h = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(h), std::move(dims));
}

DensityMatrix validate(const CMatrix& m, const Dims& dims) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  }
  check_dims(dims, static_cast<int>(m.rows()));
  if (!m.allFinite()) throw Error(ErrorCode::NotHermitian, "matrix has non-finite entries");

  const double herm = max_abs_diff(m, m.adjoint());
  if (herm > tol::kHermitian) {
    throw Error(ErrorCode::NotHermitian, "max |rho - rho^dagger| = " + fmt_double(herm));
  }
  CMatrix h = 0.5 * (m + m.adjoint());
  const double tr = h.trace().real();
  if (std::abs(tr - 1.0) > tol::kTrace) {
    throw Error(ErrorCode::NotUnitTrace, "trace = " + std::to_string(tr));
  }
  h /= tr;
  const RVector ev = linalg::hermitian_eigenvalues(h);
  if (ev(ev.size() - 1) < -tol::kPsd) {
    throw Error(ErrorCode::NotPSD, "minimum eigenvalue = " + fmt_double(ev(ev.size() - 1)));
  }
  return DensityMatrix::trusted(std::move(h), dims);
}

PureState::PureState(CVector amplitudes, Dims dims) : a_(std::move(amplitudes)), dims_(std::move(dims)) {
  check_dims(dims_, static_cast<int>(a_.size()));
  const double n = a_.norm();
  if (!std::isfinite(n) || std::abs(n - 1.0) > tol::kNorm) {
    throw Error(ErrorCode::NotNormalized, "ket norm = " + std::to_string(n));
  }
}

PureState PureState::normalized(CVector amplitudes, Dims dims) {
  check_dims(dims, static_cast<int>(amplitudes.size()));
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw Error(ErrorCode::NotNormalized, "ket has zero or non-finite norm");
  return PureState(Unchecked{}, amplitudes / n, std::move(dims));
}

DensityMatrix PureState::density() const {
  return DensityMatrix::trusted(a_ * a_.adjoint(), dims_);
}

UnitaryMatrix::UnitaryMatrix(CMatrix u) : u_(std::move(u)) {
  if (u_.rows() != u_.cols() || u_.rows() == 0) throw Error(ErrorCode::DimensionMismatch, "unitary is not square");
  const CMatrix gram = u_.adjoint() * u_;
  const double dev = max_abs_diff(gram, CMatrix::Identity(u_.rows(), u_.cols()));
  if (!(dev <= tol::kUnitary)) throw Error(ErrorCode::NotUnitary, "max |U^dagger U - I| = " + fmt_double(dev));
}

UnitaryMatrix UnitaryMatrix::identity(int d) { return UnitaryMatrix(CMatrix::Identity(d, d)); }

namespace {

CMatrix kron_raw(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  return UnitaryMatrix(kron_raw(a.matrix(), b.matrix()));
}

UnitaryMatrix kron(std::span<const UnitaryMatrix> factors) {
  if (factors.empty()) throw Error(ErrorCode::DimensionMismatch, "no unitary factors");
  CMatrix out = factors[0].matrix();
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron_raw(out, factors[i].matrix());
  return UnitaryMatrix(std::move(out));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix::trusted(kron_raw(a.matrix(), b.matrix()), std::move(dims));
}

DensityMatrix tensor(std::span<const DensityMatrix> factors) {
  if (factors.empty()) throw Error(ErrorCode::DimensionMismatch, "no tensor factors");
  DensityMatrix out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out = tensor(out, factors[i]);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep) {
  const int n = rho.num_subsystems();
  if (keep.empty()) throw Error(ErrorCode::BadSubsystemIndex, "keep set is empty");
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw Error(ErrorCode::BadSubsystemIndex, "duplicate subsystem index");
  }
  if (keep.front() < 0 || keep.back() >= n) {
    throw Error(ErrorCode::BadSubsystemIndex, "subsystem index out of range [0," + std::to_string(n) + ")");
  }
  const Dims& dims = rho.dims();
  std::vector<bool> kept(n, false);
  for (int k : keep) kept[k] = true;

  Dims kdims, tdims;
  for (int s = 0; s < n; ++s) (kept[s] ? kdims : tdims).push_back(dims[s]);
  const int dk = product(kdims);
  const int dt = tdims.empty() ? 1 : product(tdims);

  // full index = interleave(kept digits, traced digits); precompute the map
  const int d = rho.dim();
  std::vector<int> kidx(d), tidx(d);
  for (int i = 0; i < d; ++i) {
    int rem = i, ki = 0, ti = 0, kmul = 1, tmul = 1;
    for (int s = n - 1; s >= 0; --s) {
      const int digit = rem % dims[s];
      rem /= dims[s];
      if (kept[s]) {
        ki += digit * kmul;
        kmul *= dims[s];
      } else {
        ti += digit * tmul;
        tmul *= dims[s];
      }
    }
    kidx[i] = ki;
    tidx[i] = ti;
  }
  std::vector<int> full(static_cast<std::size_t>(dk) * dt);
  for (int i = 0; i < d; ++i) full[static_cast<std::size_t>(kidx[i]) * dt + tidx[i]] = i;

  CMatrix out = CMatrix::Zero(dk, dk);
  const CMatrix& m = rho.matrix();
  for (int a = 0; a < dk; ++a) {
    for (int b = 0; b < dk; ++b) {
      cplx acc = 0.0;
      for (int t = 0; t < dt; ++t) {
        acc += m(full[static_cast<std::size_t>(a) * dt + t], full[static_cast<std::size_t>(b) * dt + t]);
      }
      out(a, b) = acc;
    }
  }
  return DensityMatrix::trusted(std::move(out), std::move(kdims));
}

namespace linalg {

RVector hermitian_eigenvalues(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::EigenFailure, "Hermitian eigenvalue iteration did not converge");
  return es.eigenvalues().reverse();
}

double entropy_bits(const CMatrix& h) {
  const RVector ev = hermitian_eigenvalues(h);
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double l = ev(i);
    if (l > 0.0) s -= l * std::log2(l);
  }
  return s;
}

}  // namespace linalg

Spectrum spectrum(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
  if (es.info() != Eigen::Success) throw Error(ErrorCode::EigenFailure, "Hermitian eigen-decomposition did not converge");
  const Eigen::Index d = rho.dim();
  Spectrum out{RVector(d), CMatrix(d, d)};
  for (Eigen::Index i = 0; i < d; ++i) {
    out.values(i) = es.eigenvalues()(d - 1 - i);
    out.vectors.col(i) = es.eigenvectors().col(d - 1 - i);
  }
  if (out.values(d - 1) < -tol::kPsd) {
    throw Error(ErrorCode::NotPSD, "minimum eigenvalue = " + fmt_double(out.values(d - 1)));
  }
  out.values = out.values.cwiseMax(0.0).cwiseMin(1.0);
  out.values /= out.values.sum();
  return out;
}

double shannon_bits(std::span<const double> p) {
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) s -= x * std::log2(x);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const Spectrum sp = spectrum(rho);
  return shannon_bits(std::span<const double>(sp.values.data(), static_cast<std::size_t>(sp.values.size())));
}

DensityMatrix maximally_mixed(int d) {
  if (d < 1) throw Error(ErrorCode::BadDimension, "dimension must be >= 1");
  return maximally_mixed(Dims{d});
}

DensityMatrix maximally_mixed(const Dims& dims) {
  const int d = product(dims);
  check_dims(dims, d);
  return DensityMatrix::trusted(CMatrix::Identity(d, d) / static_cast<double>(d), dims);
}

DensityMatrix conjugate(const DensityMatrix& rho, const UnitaryMatrix& u) {
  if (u.dim() != rho.dim()) throw Error(ErrorCode::DimensionMismatch, "unitary and state dimensions differ");
  return validate(u.matrix().adjoint() * rho.matrix() * u.matrix(), rho.dims());
}

BasisSpec::BasisSpec(UnitaryMatrix columns, std::string label) : u_(std::move(columns)), label_(std::move(label)) {}

BasisSpec BasisSpec::computational(int d) {
  return BasisSpec(UnitaryMatrix::identity(d), "computational");
}

BasisSpec BasisSpec::hadamard(const Dims& dims) {
  std::vector<UnitaryMatrix> factors;
  for (int k : dims) {
    CMatrix f(k, k);
    const double pi = std::acos(-1.0);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) f(r, c) = std::polar(1.0 / std::sqrt(double(k)), 2.0 * pi * r * c / k);
    }
    factors.emplace_back(std::move(f));
  }
  return BasisSpec(kron(std::span<const UnitaryMatrix>(factors)), "hadamard");
}

BasisSpec BasisSpec::named(const std::string& name, const Dims& dims) {
  if (name == "computational") return computational(product(dims));
  if (name == "hadamard") return hadamard(dims);
  throw Error(ErrorCode::BadParameter, "unknown basis '" + name + "'");
}

DensityMatrix dephase(const DensityMatrix& rho, const BasisSpec& b) {
  if (b.dim() != rho.dim()) throw Error(ErrorCode::DimensionMismatch, "basis and state dimensions differ");
  const CMatrix& B = b.columns();
  const CMatrix in_basis = B.adjoint() * rho.matrix() * B;
  const CVector diag = in_basis.diagonal();
  return DensityMatrix::trusted(B * diag.asDiagonal() * B.adjoint(), rho.dims());
}

}  // namespace qcohere
