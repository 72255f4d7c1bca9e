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

#include "qcohere/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qcohere/divergence.hpp"
#include "qcohere/random.hpp"

namespace qcohere {

namespace {

// QJSD below which the separable search is finished off in Frobenius norm.
constexpr double kPolishThreshold = 1e-10;

void require_multipartite(const DensityMatrix& rho) {
  if (rho.num_subsystems() < 2) throw Error(ErrorCode::SingleSubsystem, "decomposition needs at least two subsystems");
}

CVector kron_vec(const std::vector<CVector>& parts) {
  CVector v = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    CVector next(v.size() * parts[i].size());
    for (Eigen::Index a = 0; a < v.size(); ++a) next.segment(a * parts[i].size(), parts[i].size()) = v(a) * parts[i];
    v = std::move(next);
  }
  return v;
}

// (a_1 (x) .. (x) 1_i (x) .. (x) a_N)^dagger w
CVector contract_except(const CVector& w, const std::vector<CVector>& parts, std::size_t skip) {
  const std::size_t n = parts.size();
  CVector out = CVector::Zero(parts[skip].size());
  std::vector<int> idx(n, 0);
  for (Eigen::Index flat = 0; flat < w.size(); ++flat) {
    cplx coef = w(flat);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != skip) coef *= std::conj(parts[j](idx[j]));
    }
    out(idx[skip]) += coef;
    for (std::size_t j = n; j-- > 0;) {
      if (++idx[j] < parts[j].size()) break;
      idx[j] = 0;
    }
  }
  return out;
}

struct ProductTerm {
  double weight;
  std::vector<CVector> factors;
};

// All product terms of rho_1 (x) ... (x) rho_N from the marginal spectra.
std::vector<ProductTerm> marginal_product_terms(const DensityMatrix& rho) {
  std::vector<Spectrum> spectra;
  for (int s = 0; s < rho.num_subsystems(); ++s) spectra.push_back(spectrum(partial_trace(rho, {s})));
  std::vector<ProductTerm> terms{{1.0, {}}};
  for (const Spectrum& sp : spectra) {
    std::vector<ProductTerm> next;
    for (const ProductTerm& t : terms) {
      for (Eigen::Index j = 0; j < sp.values.size(); ++j) {
        ProductTerm n = t;
        n.weight *= sp.values(j);
        n.factors.push_back(sp.vectors.col(j));
        next.push_back(std::move(n));
      }
    }
    terms = std::move(next);
  }
  return terms;
}

// Computational-basis dephasing of rho as product terms |i_1 ... i_N>.
std::vector<ProductTerm> dephased_product_terms(const DensityMatrix& rho) {
  const Dims& dims = rho.dims();
  std::vector<ProductTerm> terms;
  for (int i = 0; i < rho.dim(); ++i) {
    ProductTerm t{std::max(rho(i, i).real(), 0.0), std::vector<CVector>(dims.size())};
    int rem = i;
    for (int s = static_cast<int>(dims.size()) - 1; s >= 0; --s) {
      t.factors[s] = CVector::Zero(dims[s]);
      t.factors[s](rem % dims[s]) = 1.0;
      rem /= dims[s];
    }
    terms.push_back(std::move(t));
  }
  return terms;
}

// Keeps the K heaviest terms, padding with zero-weight |0...0> terms.
optim::Point to_point(std::vector<ProductTerm> terms, const Dims& dims, int K) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const ProductTerm& a, const ProductTerm& b) { return a.weight > b.weight; });
  if (static_cast<int>(terms.size()) > K) terms.resize(K);
  while (static_cast<int>(terms.size()) < K) {
    ProductTerm pad{0.0, {}};
    for (int k : dims) {
      CVector e = CVector::Zero(k);
      e(0) = 1.0;
      pad.factors.push_back(std::move(e));
    }
    terms.push_back(std::move(pad));
  }
  double total = 0.0;
  for (const auto& t : terms) total += t.weight;
  optim::Point pt;
  pt.simplices.emplace_back();
  for (const auto& t : terms) {
    pt.simplices[0].push_back(t.weight / total);
    for (const auto& f : t.factors) pt.spheres.push_back(f);
  }
  return pt;
}

SeparableAnsatz to_ansatz(const optim::Point& pt, const Dims& dims) {
  SeparableAnsatz a;
  a.dims = dims;
  a.weights = pt.simplices[0];
  const std::size_t n = dims.size();
  for (std::size_t k = 0; k < a.weights.size(); ++k) {
    a.factors.emplace_back(pt.spheres.begin() + k * n, pt.spheres.begin() + (k + 1) * n);
  }
  return a;
}

CMatrix mixed_reference(int d) { return CMatrix::Identity(d, d) / static_cast<double>(d); }

double distance_to_mixed(const CMatrix& m) {
  const int d = static_cast<int>(m.rows());
  return std::sqrt(detail::qjsd_raw(m, linalg::entropy_bits(m), mixed_reference(d), std::log2(double(d))));
}

}  // namespace

void SeparableAnsatz::check() const {
  if (weights.empty() || factors.size() != weights.size()) throw Error(ErrorCode::DimensionMismatch, "ansatz term count");
  double s = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw Error(ErrorCode::BadParameter, "negative ansatz weight");
    s += w;
  }
  if (std::abs(s - 1.0) > 1e-10) throw Error(ErrorCode::NotUnitTrace, "ansatz weights do not sum to one");
  for (const auto& term : factors) {
    if (term.size() != dims.size()) throw Error(ErrorCode::DimensionMismatch, "ansatz factor count");
    for (std::size_t i = 0; i < term.size(); ++i) {
      if (term[i].size() != dims[i]) throw Error(ErrorCode::DimensionMismatch, "ansatz factor dimension");
      if (std::abs(term[i].norm() - 1.0) > tol::kNorm) throw Error(ErrorCode::NotNormalized, "ansatz factor norm");
    }
  }
}

CMatrix SeparableAnsatz::matrix() const {
  const int d = product(dims);
  CMatrix sigma = CMatrix::Zero(d, d);
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] == 0.0) continue;
    const CVector v = kron_vec(factors[k]);
    sigma.noalias() += weights[k] * (v * v.adjoint());
  }
  return sigma;
}

DensityMatrix SeparableAnsatz::density() const { return DensityMatrix::trusted(matrix(), dims); }

CoherenceOptions DecompositionOptions::coherence_options() const {
  CoherenceOptions c;
  c.optimizer = optimizer;
  c.delta_convention = delta_convention;
  c.require_convergence = require_convergence;
  return c;
}

DensityMatrix product_of_marginals(const DensityMatrix& rho) {
  require_multipartite(rho);
  std::vector<DensityMatrix> marginals;
  for (int s = 0; s < rho.num_subsystems(); ++s) marginals.push_back(partial_trace(rho, {s}));
  return tensor(std::span<const DensityMatrix>(marginals));
}

double collective_coherence(const DensityMatrix& rho) { return metric(rho, product_of_marginals(rho)); }

double localized_coherence(const DensityMatrix& rho) { return total_coherence(product_of_marginals(rho)); }

IntrinsicCoherence intrinsic_coherence(const DensityMatrix& rho, const DecompositionOptions& opts) {
  require_multipartite(rho);
  const Dims& dims = rho.dims();
  const int d = rho.dim();
  const int K = opts.terms > 0 ? opts.terms : 2 * d;
  if (K > d * d) throw Error(ErrorCode::BadParameter, "separable ansatz size exceeds d^2");
  const std::size_t n = dims.size();

  optim::Parametrization param;
  param.simplex(K);
  for (int k = 0; k < K; ++k) {
    for (int sub : dims) param.sphere(sub);
  }

  const CMatrix& r = rho.matrix();
  const double s_rho = linalg::entropy_bits(r);
  // frobenius = false: QJSD to rho; true: squared Frobenius distance, used to
  // pin down sigma = rho once the QJSD is at its roundoff floor.
  auto make_objective = [&](bool frobenius) {
    return [&, frobenius](const optim::Point& pt, optim::Gradient* grad) {
      CMatrix sigma = CMatrix::Zero(d, d);
      std::vector<std::vector<CVector>> parts(K, std::vector<CVector>(n));
      std::vector<CVector> terms(K);
      for (int k = 0; k < K; ++k) {
        for (std::size_t i = 0; i < n; ++i) parts[k][i] = pt.spheres[k * n + i];
        terms[k] = kron_vec(parts[k]);
        sigma.noalias() += pt.simplices[0][k] * (terms[k] * terms[k].adjoint());
      }
      CMatrix g;
      double value;
      if (frobenius) {
        const CMatrix diff = sigma - r;
        value = diff.squaredNorm();
        g = 2.0 * diff;
      } else {
        value = detail::qjsd_smooth(r, s_rho, sigma, grad ? &g : nullptr);
      }
      if (!grad) return value;
      grad->simplices[0].resize(K);
      for (int k = 0; k < K; ++k) {
        const CVector gv = g * terms[k];
        const double w = pt.simplices[0][k];
        grad->simplices[0][k] = terms[k].dot(gv).real();
        for (std::size_t i = 0; i < n; ++i) grad->spheres[k * n + i] = 2.0 * w * contract_except(gv, parts[k], i);
      }
      return value;
    };
  };

  const std::vector<optim::Point> starts{to_point(marginal_product_terms(rho), dims, K),
                                         to_point(dephased_product_terms(rho), dims, K)};
  optim::OptimizerResult res = optim::minimize_smooth(make_objective(false), param, opts.optimizer, starts);
  if (opts.require_convergence && !res.converged) {
    throw Error(ErrorCode::OptimizerFailure, "separable-state search did not converge within budget");
  }
  if (res.value < kPolishThreshold) {
    optim::OptimizerConfig pc = opts.optimizer;
    pc.starts = 1;
    pc.tol = 1e-15;
    const optim::OptimizerResult polished =
        optim::minimize_smooth(make_objective(true), param, pc, std::span<const optim::Point>(&res.point, 1));
    res.evaluations += polished.evaluations;
    const SeparableAnsatz before = to_ansatz(res.point, dims);
    const SeparableAnsatz after = to_ansatz(polished.point, dims);
    if (qjsd(rho, after.density()) <= qjsd(rho, before.density())) {
      res.point = polished.point;
      res.params = polished.params;
    }
  }
  SeparableAnsatz a = to_ansatz(res.point, dims);
  DensityMatrix sigma = a.density();
  const double value = metric(rho, sigma);
  return IntrinsicCoherence{value, std::move(a), std::move(sigma), std::move(res)};
}

double local_coherence_bi(const IntrinsicCoherence& ic) { return distance_to_mixed(ic.sigma.matrix()); }

double local_coherence_bi(const DensityMatrix& rho, const DecompositionOptions& opts) {
  return local_coherence_bi(intrinsic_coherence(rho, opts));
}

double local_coherence_bd(const DensityMatrix& rho, const BasisSpec& b, const IntrinsicCoherence& ic) {
  return metric(ic.sigma, dephase(rho, b));
}

double local_coherence_bd(const DensityMatrix& rho, const BasisSpec& b, const DecompositionOptions& opts) {
  return local_coherence_bd(rho, b, intrinsic_coherence(rho, opts));
}

bool DecompositionReport::violation() const { return min_slack() < -kSlackTolerance; }

double DecompositionReport::min_slack() const { return std::min({slack29, slack36, slack37, slack41, slack42}); }

DecompositionReport check_inequalities(const DensityMatrix& rho, const BasisSpec& b, const DecompositionOptions& opts) {
  require_multipartite(rho);
  if (b.dim() != rho.dim()) throw Error(ErrorCode::DimensionMismatch, "basis and state dimensions differ");
  DecompositionReport r;
  r.basis_label = b.label();
  r.total = total_coherence(rho);
  const DensityMatrix pi = product_of_marginals(rho);
  r.collective = metric(rho, pi);
  r.localized = total_coherence(pi);

  const IntrinsicCoherence ic = intrinsic_coherence(rho, opts);
  r.intrinsic = ic.value;
  r.local_bi = local_coherence_bi(ic);
  r.local_bd = local_coherence_bd(rho, b, ic);

  const BasisCoherence bc = basis_coherence(rho, b, opts.coherence_options());
  r.basis = bc.value;
  const DeltaCoherence dc = delta_coherence(rho, b, bc, opts.delta_convention);
  r.delta = dc.value;
  r.delta_convention = dc.convention;

  r.slack29 = r.intrinsic + r.local_bi - r.total;
  r.slack36 = r.collective + r.localized - r.total;
  r.slack37 = r.collective - r.intrinsic;
  r.slack41 = r.basis + r.delta - r.total;
  r.slack42 = r.intrinsic + r.local_bd + r.delta - r.total;

  r.starts = static_cast<int>(ic.diagnostics.start_values.size() + bc.diagnostics.start_values.size());
  r.evaluations = ic.diagnostics.evaluations + bc.diagnostics.evaluations;
  r.converged = ic.diagnostics.converged && bc.diagnostics.converged;
  return r;
}

ClosestProductCheck verify_closest_product(const DensityMatrix& rho, long trials, std::uint64_t seed) {
  require_multipartite(rho);
  if (trials < 1) throw Error(ErrorCode::BadParameter, "trials must be >= 1");
  const Dims& dims = rho.dims();
  std::vector<DensityMatrix> marginals;
  for (int s = 0; s < rho.num_subsystems(); ++s) marginals.push_back(partial_trace(rho, {s}));
  const double best = metric(rho, tensor(std::span<const DensityMatrix>(marginals)));

  ClosestProductCheck out;
  out.worst_violation = -std::numeric_limits<double>::infinity();
  out.trials = trials;
  for (long t = 0; t < trials; ++t) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
    std::vector<DensityMatrix> factors;
    const double eps = (t % 2 == 0) ? 1.0 : std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    for (std::size_t s = 0; s < dims.size(); ++s) {
      const DensityMatrix tau = hilbert_schmidt({dims[s]}, rng);
      factors.push_back(
          DensityMatrix::trusted((1.0 - eps) * marginals[s].matrix() + eps * tau.matrix(), {dims[s]}));
    }
    const double v = best - metric(rho, tensor(std::span<const DensityMatrix>(factors)));
    if (v > out.worst_violation) {
      out.worst_violation = v;
      out.worst_trial = t;
    }
  }
  return out;
}

LocalInvarianceSlacks local_unitary_invariance_check(const DensityMatrix& rho, const std::vector<UnitaryMatrix>& locals,
                                                     const DecompositionOptions& opts) {
  require_multipartite(rho);
  if (locals.size() != rho.dims().size()) throw Error(ErrorCode::DimensionMismatch, "one unitary per subsystem required");
  for (std::size_t i = 0; i < locals.size(); ++i) {
    if (locals[i].dim() != rho.dims()[i]) throw Error(ErrorCode::DimensionMismatch, "local unitary dimension mismatch");
  }
  const UnitaryMatrix u = kron(std::span<const UnitaryMatrix>(locals));
  const DensityMatrix rotated = conjugate(rho, u);

  const IntrinsicCoherence a = intrinsic_coherence(rho, opts);
  const IntrinsicCoherence b = intrinsic_coherence(rotated, opts);
  LocalInvarianceSlacks s;
  s.collective = std::abs(collective_coherence(rotated) - collective_coherence(rho));
  s.localized = std::abs(localized_coherence(rotated) - localized_coherence(rho));
  s.intrinsic = std::abs(b.value - a.value);
  s.local_bi = std::abs(local_coherence_bi(b) - local_coherence_bi(a));
  return s;
}

}  // namespace qcohere
