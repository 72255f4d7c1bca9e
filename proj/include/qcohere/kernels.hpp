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


#ifndef QCOHERE_KERNELS_HPP
#define QCOHERE_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "qcohere/decompose.hpp"

namespace qcohere::kernels {

enum class Ensemble { hilbert_schmidt, haar_pure };

std::string to_string(Ensemble e);
Ensemble parse_ensemble(const std::string& s);

/// Which coherence columns a row evaluation fills in. `direct` skips every
/// quantity that needs an optimizer (C_I, C_L, C^(b), delta C and the
/// slacks built from them); those are reported as NaN.
enum class Columns { full, direct };

std::string to_string(Columns c);
Columns parse_columns(const std::string& s);

/// One state's coherence values. Decomposition columns are NaN for a single
/// subsystem.
struct CoherenceRow {
  double total = 0.0;
  double collective = 0.0;
  double localized = 0.0;
  double intrinsic = 0.0;
  double local_bi = 0.0;
  double basis = 0.0;
  double delta = 0.0;
  double slack29 = 0.0;
  double slack36 = 0.0;
  double slack37 = 0.0;
  double slack41 = 0.0;
  double slack42 = 0.0;
  bool converged = true;
  double walltime_ms = 0.0;

  /// Smallest slack that was computed (NaN entries ignored).
  double min_slack() const;
  bool violation() const { return min_slack() < -kSlackTolerance; }
};

CoherenceRow evaluate_row(const DensityMatrix& rho, const BasisSpec& b, const DecompositionOptions& opts,
                          Columns columns = Columns::full);

struct TriangleSummary {
  long count = 0;
  double min_slack = 0.0;  // min over triples of D(r,s) + D(s,t) - D(r,t), all orderings
  long worst_index = -1;   // triple index; redraw with mix_seed(seed, index)
  double max_qjsd = 0.0;
  double min_qjsd = 0.0;
};

/// Draws triple i from Rng(mix_seed(seed, i)).
std::vector<DensityMatrix> triangle_triple(int d, Ensemble e, std::uint64_t seed, long index);

struct ProductSummary {
  long states = 0;
  long trials = 0;
  double max_violation = 0.0;
  long worst_state = -1;
  std::vector<double> violations;  // per state
};

struct InvarianceSummary {
  long count = 0;
  double max_deviation = 0.0;
  long worst_index = -1;
};

/// Number of workers the parallel kernels may use: the OpenMP maximum,
/// capped by QCOHERE_THREADS when set.
int worker_count();

// Two implementations with identical results: a plain loop kept as the
// reference, and an OpenMP version distributing items over workers. Every
// item is seeded from its index alone and reductions run in index order.
namespace serial {

TriangleSummary triangle_slacks(int d, long count, Ensemble e, std::uint64_t seed);
ProductSummary closest_product(const Dims& dims, long states, long trials, std::uint64_t seed);
InvarianceSummary unitary_invariance(int d, long count, std::uint64_t seed);
/// opts holds one entry per state, or a single entry shared by all.
std::vector<CoherenceRow> evaluate_rows(const std::vector<DensityMatrix>& states, const BasisSpec& b,
                                        const std::vector<DecompositionOptions>& opts, Columns columns);

}  // namespace serial

namespace omp {

TriangleSummary triangle_slacks(int d, long count, Ensemble e, std::uint64_t seed);
ProductSummary closest_product(const Dims& dims, long states, long trials, std::uint64_t seed);
InvarianceSummary unitary_invariance(int d, long count, std::uint64_t seed);
/// opts holds one entry per state, or a single entry shared by all.
std::vector<CoherenceRow> evaluate_rows(const std::vector<DensityMatrix>& states, const BasisSpec& b,
                                        const std::vector<DecompositionOptions>& opts, Columns columns);

}  // namespace omp

}  // namespace qcohere::kernels

#endif  // QCOHERE_KERNELS_HPP
