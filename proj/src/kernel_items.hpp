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


// Per-item work shared by the serial and OpenMP kernels.

#ifndef QCOHERE_SRC_KERNEL_ITEMS_HPP
#define QCOHERE_SRC_KERNEL_ITEMS_HPP

#include "qcohere/kernels.hpp"

namespace qcohere::kernels::items {

struct TriangleItem {
  double slack;
  double qjsd_min;
  double qjsd_max;
};

TriangleItem triangle(int d, Ensemble e, std::uint64_t seed, long index);
double closest_product(const Dims& dims, long trials, std::uint64_t seed, long index);
double unitary_invariance(int d, std::uint64_t seed, long index);

const DecompositionOptions& options_for(const std::vector<DecompositionOptions>& opts, std::size_t index);

TriangleSummary reduce(const std::vector<TriangleItem>& items);
ProductSummary reduce_product(std::vector<double> violations, long trials);
InvarianceSummary reduce_invariance(const std::vector<double>& deviations);

}  // namespace qcohere::kernels::items

#endif  // QCOHERE_SRC_KERNEL_ITEMS_HPP
