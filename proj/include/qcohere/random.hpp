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

#ifndef QCOHERE_RANDOM_HPP
#define QCOHERE_RANDOM_HPP

#include <cstdint>
#include <random>

#include "qcohere/qstate.hpp"

namespace qcohere {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer. Used to derive independent per-task seeds from a
/// campaign seed so results never depend on scheduling.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Complex vector with i.i.d. standard normal real and imaginary parts.
CVector complex_gaussian(int n, Rng& rng);
CMatrix ginibre(int rows, int cols, Rng& rng);

/// Haar-distributed pure state (normalized complex Gaussian vector).
PureState haar_pure(const Dims& dims, Rng& rng);
/// Hilbert-Schmidt distributed mixed state G G^dagger / Tr(G G^dagger).
DensityMatrix hilbert_schmidt(const Dims& dims, Rng& rng);
/// Haar unitary via QR of a Ginibre matrix with the R-diagonal phases removed.
UnitaryMatrix haar_unitary(int d, Rng& rng);
/// Point on the probability simplex drawn from Dirichlet(1, ..., 1).
std::vector<double> dirichlet(int n, Rng& rng);

}  // namespace qcohere

#endif  // QCOHERE_RANDOM_HPP
