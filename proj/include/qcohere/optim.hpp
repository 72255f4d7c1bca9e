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

#ifndef QCOHERE_OPTIM_HPP
#define QCOHERE_OPTIM_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qcohere/qstate.hpp"
#include "qcohere/random.hpp"

namespace qcohere::optim {

/// Decoded point of a Parametrization: one probability vector per simplex
/// block and one unit complex vector per sphere block, in declaration order.
struct Point {
  std::vector<std::vector<double>> simplices;
  std::vector<CVector> spheres;
};

/// Gradient with respect to a decoded Point: ordinary partials for each
/// simplex weight and, for each sphere vector v, the complex vector whose
/// real and imaginary parts are the partials along Re v and Im v.
struct Gradient {
  std::vector<std::vector<double>> simplices;
  std::vector<CVector> spheres;
};

/// Concatenation of simplex blocks (softmax over unconstrained logits) and
/// unit-sphere blocks (complex vectors renormalized after every move). The
/// search itself is unconstrained.
class Parametrization {
 public:
  Parametrization& simplex(int n);
  Parametrization& sphere(int complex_dim);

  int num_params() const { return num_params_; }
  int num_simplices() const { return static_cast<int>(simplex_sizes_.size()); }
  int num_spheres() const { return static_cast<int>(sphere_dims_.size()); }

  void decode(std::span<const double> x, Point& out) const;
  std::vector<double> encode(const Point& p) const;
  /// Chain rule through the softmax and the normalization: turns a gradient
  /// with respect to the decoded point into one with respect to x.
  void pullback(std::span<const double> x, const Point& pt, const Gradient& g, std::span<double> grad_x) const;
  /// Dirichlet(1,...,1) weights and Haar-random unit vectors.
  Point random_point(Rng& rng) const;
  /// Rescales sphere blocks to unit norm and shifts logits to max 0; the
  /// decoded point is unchanged.
  void canonicalize(std::span<double> x) const;

 private:
  enum class Kind { simplex, sphere };
  struct Block {
    Kind kind;
    int index;   // position among blocks of the same kind
    int offset;  // first raw parameter
    int size;    // simplex weights or complex dimension
  };
  std::vector<Block> blocks_;
  std::vector<int> simplex_sizes_;
  std::vector<int> sphere_dims_;
  int num_params_ = 0;
};

struct OptimizerConfig {
  int starts = 8;            // total starts; explicit starts always run
  long max_evals = 5000;     // per start
  double tol = 1e-10;        // stop when an iteration improves less than this
  std::uint64_t seed = 0;
  double initial_step = 0.5;
  double min_step = 1e-7;    // smallest line-search bracket
  bool parallel_starts = false;

  void check() const;
};

struct OptimizerResult {
  double value = 0.0;
  Point point;
  std::vector<double> params;
  long evaluations = 0;
  bool converged = false;
  int best_start = -1;
  std::vector<double> start_values;
  std::vector<bool> start_converged;
};

using Objective = std::function<double(const Point&)>;
/// Returns the value and, when `grad` is non-null, fills it.
using SmoothObjective = std::function<double(const Point&, Gradient* grad)>;

/// Multi-start derivative-free minimization. Each start runs Powell's
/// direction-set method with Brent line searches. The result is never worse
/// than the objective at any explicit start, and is a deterministic function
/// of (objective, parametrization, cfg, starts).
OptimizerResult minimize(const Objective& f, const Parametrization& param, const OptimizerConfig& cfg,
                         std::span<const Point> explicit_starts = {});

/// Same contract for objectives with a gradient; each start runs BFGS with a
/// strong-Wolfe line search. One evaluation = one value-and-gradient call.
OptimizerResult minimize_smooth(const SmoothObjective& f, const Parametrization& param, const OptimizerConfig& cfg,
                                std::span<const Point> explicit_starts = {});

}  // namespace qcohere::optim

#endif  // QCOHERE_OPTIM_HPP
