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


#include "kernel_items.hpp"

namespace qcohere::kernels::serial {

namespace {

void check_count(long n, const char* what) {
  if (n < 1) throw Error(ErrorCode::BadParameter, std::string(what) + " must be >= 1");
}

template <typename Fn>
void for_each_index(long n, Fn&& fn) {
  for (long i = 0; i < n; ++i) fn(i);
}

}  // namespace

TriangleSummary triangle_slacks(int d, long count, Ensemble e, std::uint64_t seed) {
  check_count(count, "triple count");
  std::vector<items::TriangleItem> out(count);
  for_each_index(count, [&](long i) { out[i] = items::triangle(d, e, seed, i); });
  return items::reduce(out);
}

ProductSummary closest_product(const Dims& dims, long states, long trials, std::uint64_t seed) {
  check_count(states, "state count");
  check_count(trials, "trial count");
  std::vector<double> v(states);
  for_each_index(states, [&](long i) { v[i] = items::closest_product(dims, trials, seed, i); });
  return items::reduce_product(std::move(v), trials);
}

InvarianceSummary unitary_invariance(int d, long count, std::uint64_t seed) {
  check_count(count, "pair count");
  std::vector<double> v(count);
  for_each_index(count, [&](long i) { v[i] = items::unitary_invariance(d, seed, i); });
  return items::reduce_invariance(v);
}

std::vector<CoherenceRow> evaluate_rows(const std::vector<DensityMatrix>& states, const BasisSpec& b,
                                        const std::vector<DecompositionOptions>& opts, Columns columns) {
  if (opts.size() != 1 && opts.size() != states.size()) {
    throw Error(ErrorCode::LengthMismatch, "need one option set per state or a single shared one");
  }
  std::vector<CoherenceRow> rows(states.size());
  for_each_index(static_cast<long>(states.size()),
                 [&](long i) { rows[i] = evaluate_row(states[i], b, items::options_for(opts, i), columns); });
  return rows;
}

}  // namespace qcohere::kernels::serial
