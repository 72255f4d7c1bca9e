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

#include "qcohere/random.hpp"

#include <cmath>

namespace qcohere {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CVector complex_gaussian(int n, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  CVector v(n);
  for (int i = 0; i < n; ++i) {
    const double re = nd(rng);
    const double im = nd(rng);
    v(i) = cplx(re, im);
  }
  return v;
}

CMatrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  CMatrix g(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      const double re = nd(rng);
      const double im = nd(rng);
      g(r, c) = cplx(re, im);
    }
  }
  return g;
}

PureState haar_pure(const Dims& dims, Rng& rng) {
  return PureState::normalized(complex_gaussian(product(dims), rng), dims);
}

DensityMatrix hilbert_schmidt(const Dims& dims, Rng& rng) {
  const int d = product(dims);
  const CMatrix g = ginibre(d, d, rng);
  CMatrix w = g * g.adjoint();
  w /= w.trace().real();
  return DensityMatrix::trusted(std::move(w), dims);
}

UnitaryMatrix haar_unitary(int d, Rng& rng) {
  const CMatrix z = ginibre(d, d, rng);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0.0) q.col(i) *= r(i, i) / mag;
  }
  return UnitaryMatrix(std::move(q));
}

std::vector<double> dirichlet(int n, Rng& rng) {
  std::exponential_distribution<double> ed(1.0);
  std::vector<double> p(n);
  double s = 0.0;
  for (auto& x : p) {
    x = ed(rng);
    s += x;
  }
  for (auto& x : p) x /= s;
  return p;
}

}  // namespace qcohere
