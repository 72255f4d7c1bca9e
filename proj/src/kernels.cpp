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


#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>

#include <omp.h>

#include "kernel_items.hpp"
#include "qcohere/divergence.hpp"
#include "qcohere/random.hpp"

namespace qcohere::kernels {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Product states and unitaries are drawn from a stream separate from the
// one producing the mixed states.
constexpr std::uint64_t kTrialStream = 0x7f4a7c159e3779b9ULL;

}  // namespace

std::string to_string(Ensemble e) { return e == Ensemble::haar_pure ? "haar" : "hs"; }

Ensemble parse_ensemble(const std::string& s) {
  if (s == "hs" || s == "hilbert_schmidt" || s == "mixed") return Ensemble::hilbert_schmidt;
  if (s == "haar" || s == "haar_pure" || s == "pure") return Ensemble::haar_pure;
  throw Error(ErrorCode::BadParameter, "unknown ensemble '" + s + "' (expected hs or haar)");
}

std::string to_string(Columns c) { return c == Columns::full ? "full" : "direct"; }

Columns parse_columns(const std::string& s) {
  if (s == "full") return Columns::full;
  if (s == "direct") return Columns::direct;
  throw Error(ErrorCode::BadParameter, "unknown column set '" + s + "' (expected full or direct)");
}

double CoherenceRow::min_slack() const {
  double m = std::numeric_limits<double>::infinity();
  for (double s : {slack29, slack36, slack37, slack41, slack42}) {
    if (!std::isnan(s)) m = std::min(m, s);
  }
  return m;
}

CoherenceRow evaluate_row(const DensityMatrix& rho, const BasisSpec& b, const DecompositionOptions& opts,
                          Columns columns) {
  const auto t0 = std::chrono::steady_clock::now();
  CoherenceRow row;
  row.collective = row.localized = row.intrinsic = row.local_bi = row.basis = row.delta = kNaN;
  row.slack29 = row.slack36 = row.slack37 = row.slack41 = row.slack42 = kNaN;
  const bool multipartite = rho.num_subsystems() >= 2;

  if (columns == Columns::full && multipartite) {
    const DecompositionReport r = check_inequalities(rho, b, opts);
    row.total = r.total;
    row.collective = r.collective;
    row.localized = r.localized;
    row.intrinsic = r.intrinsic;
    row.local_bi = r.local_bi;
    row.basis = r.basis;
    row.delta = r.delta;
    row.slack29 = r.slack29;
    row.slack36 = r.slack36;
    row.slack37 = r.slack37;
    row.slack41 = r.slack41;
    row.slack42 = r.slack42;
    row.converged = r.converged;
  } else {
    row.total = total_coherence(rho);
    if (multipartite) {
      const DensityMatrix pi = product_of_marginals(rho);
      row.collective = metric(rho, pi);
      row.localized = total_coherence(pi);
      row.slack36 = row.collective + row.localized - row.total;
    }
    if (columns == Columns::full) {
      const CoherenceOptions co = opts.coherence_options();
      const BasisCoherence bc = basis_coherence(rho, b, co);
      row.basis = bc.value;
      row.delta = delta_coherence(rho, b, bc, co.delta_convention).value;
      row.slack41 = row.basis + row.delta - row.total;
      row.converged = bc.diagnostics.converged;
    }
  }
  row.walltime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

std::vector<DensityMatrix> triangle_triple(int d, Ensemble e, std::uint64_t seed, long index) {
  if (d < 1) throw Error(ErrorCode::BadDimension, "dimension must be >= 1");
  Rng rng(mix_seed(seed, static_cast<std::uint64_t>(index)));
  std::vector<DensityMatrix> out;
  for (int i = 0; i < 3; ++i) {
    out.push_back(e == Ensemble::haar_pure ? haar_pure({d}, rng).density() : hilbert_schmidt({d}, rng));
  }
  return out;
}

int worker_count() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("QCOHERE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min<long>(n, cap);
  }
  return std::max(n, 1);
}

namespace items {

TriangleItem triangle(int d, Ensemble e, std::uint64_t seed, long index) {
  const std::vector<DensityMatrix> t = triangle_triple(d, e, seed, index);
  double s[3];
  for (int i = 0; i < 3; ++i) s[i] = linalg::entropy_bits(t[i].matrix());
  auto j = [&](int a, int b) { return detail::qjsd_raw(t[a].matrix(), s[a], t[b].matrix(), s[b]); };
  const double j01 = j(0, 1), j12 = j(1, 2), j02 = j(0, 2);
  const double d01 = std::sqrt(j01), d12 = std::sqrt(j12), d02 = std::sqrt(j02);
  const double slack = std::min({d01 + d12 - d02, d01 + d02 - d12, d02 + d12 - d01});
  return {slack, std::min({j01, j12, j02}), std::max({j01, j12, j02})};
}

double closest_product(const Dims& dims, long trials, std::uint64_t seed, long index) {
  Rng rng(mix_seed(seed, static_cast<std::uint64_t>(index)));
  const DensityMatrix rho = hilbert_schmidt(dims, rng);
  return verify_closest_product(rho, trials, mix_seed(seed ^ kTrialStream, static_cast<std::uint64_t>(index)))
      .worst_violation;
}

double unitary_invariance(int d, std::uint64_t seed, long index) {
  Rng rng(mix_seed(seed, static_cast<std::uint64_t>(index)));
  const DensityMatrix rho = hilbert_schmidt({d}, rng);
  Rng urng(mix_seed(seed ^ kTrialStream, static_cast<std::uint64_t>(index)));
  return unitary_invariance_check(rho, haar_unitary(d, urng));
}

const DecompositionOptions& options_for(const std::vector<DecompositionOptions>& opts, std::size_t index) {
  return opts.size() == 1 ? opts[0] : opts[index];
}

TriangleSummary reduce(const std::vector<TriangleItem>& it) {
  TriangleSummary out;
  out.count = static_cast<long>(it.size());
  out.min_slack = std::numeric_limits<double>::infinity();
  out.min_qjsd = std::numeric_limits<double>::infinity();
  out.max_qjsd = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < it.size(); ++i) {
    if (it[i].slack < out.min_slack) {
      out.min_slack = it[i].slack;
      out.worst_index = static_cast<long>(i);
    }
    out.min_qjsd = std::min(out.min_qjsd, it[i].qjsd_min);
    out.max_qjsd = std::max(out.max_qjsd, it[i].qjsd_max);
  }
  return out;
}

ProductSummary reduce_product(std::vector<double> violations, long trials) {
  ProductSummary out;
  out.states = static_cast<long>(violations.size());
  out.trials = trials;
  out.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (violations[i] > out.max_violation) {
      out.max_violation = violations[i];
      out.worst_state = static_cast<long>(i);
    }
  }
  out.violations = std::move(violations);
  return out;
}

InvarianceSummary reduce_invariance(const std::vector<double>& deviations) {
  InvarianceSummary out;
  out.count = static_cast<long>(deviations.size());
  for (std::size_t i = 0; i < deviations.size(); ++i) {
    if (deviations[i] > out.max_deviation || out.worst_index < 0) {
      out.max_deviation = deviations[i];
      out.worst_index = static_cast<long>(i);
    }
  }
  return out;
}

}  // namespace items

}  // namespace qcohere::kernels
