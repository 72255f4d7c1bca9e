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


#ifndef QCOHERE_HARNESS_HPP
#define QCOHERE_HARNESS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qcohere/kernels.hpp"
#include "qcohere/state_io.hpp"

namespace qcohere::harness {

struct Grid {
  double start = 0.0;
  double stop = 1.0;
  int points = 2;
  bool open_start = false;  // (start, stop] instead of [start, stop]

  std::vector<double> values() const;
};

struct SweepSpec {
  StateRecipe recipe;
  std::string param;  // theta, phi, xi or mu
  Grid grid;
  json basis = "computational";
  DecompositionOptions options;
  kernels::Columns columns = kernels::Columns::full;
  std::string output;
  std::uint64_t seed = 0;

  /// Throws BadParameter on fewer than two grid points or a parameter the
  /// recipe does not use.
  void check() const;
};

struct SweepRecord {
  double param = 0.0;
  kernels::CoherenceRow row;
};

/// Reads optimizer and decomposition settings on top of `base`. Keys:
/// starts, max_evals, tol, seed, initial_step, min_step, parallel_starts,
/// terms, delta_convention, require_convergence.
DecompositionOptions options_from_json(const json& j, DecompositionOptions base = {});
json options_to_json(const DecompositionOptions& o);

/// {"recipe": {...}, "param": "mu", "grid": {"start", "stop", "points",
///  "open_start"}, "basis", "optimizer": {...}, "columns": "full"|"direct",
///  "output", "seed"}
SweepSpec sweep_spec_from_json(const json& j);
json sweep_spec_to_json(const SweepSpec& s);

/// Grid point i runs its optimizer with seed mix_seed(spec.seed, i).
std::vector<SweepRecord> run_sweep(const SweepSpec& spec, bool parallel = true);

extern const char* const kCsvHeader;
std::string csv_row(const SweepRecord& r);
void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);
/// Writes next to `path` and renames into place; nothing is left behind on
/// failure.
void write_csv_file(const std::string& path, const std::vector<SweepRecord>& records);

json row_to_json(const kernels::CoherenceRow& row);

/// Full report for one state: every coherence value, the slacks and the
/// optimizer diagnostics.
json coherence_report(const DensityMatrix& rho, const BasisSpec& b, const DecompositionOptions& opts);

json to_json(const kernels::TriangleSummary& s);
json to_json(const kernels::ProductSummary& s);

}  // namespace qcohere::harness

#endif  // QCOHERE_HARNESS_HPP
