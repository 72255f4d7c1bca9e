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

#include "qcohere/optim.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

namespace qcohere::optim {

namespace {

constexpr double kLogFloor = -41.4;  // log(1e-18): zero weights stay revivable
constexpr double kGold = 1.618033988749895;
constexpr double kCGold = 0.3819660112501051;

using Vec = std::vector<double>;

class Evaluator {
 public:
  Evaluator(const Objective& f, const Parametrization& param, long budget)
      : f_(f), param_(param), budget_(budget) {}

  double operator()(std::span<const double> x) {
    param_.decode(x, scratch_);
    const double v = f_(scratch_);
    ++evals_;
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteObjective, "objective returned a non-finite value");
    return v;
  }

  long evals() const { return evals_; }
  bool exhausted() const { return evals_ >= budget_; }

 private:
  const Objective& f_;
  const Parametrization& param_;
  Point scratch_;
  long budget_;
  long evals_ = 0;
};

/// One-dimensional minimization of F(x + t u) starting from t = 0 with
/// F(x) = fx. Moves x to the best point found; returns the step taken.
double line_minimize(Evaluator& F, Vec& x, double& fx, const Vec& u, double h) {
  const std::size_t n = x.size();
  Vec trial(n);
  auto g = [&](double t) {
    for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] + t * u[i];
    return F(trial);
  };

  // bracket a minimum (Golden-section expansion with parabolic steps)
  double ax = 0.0, fa = fx;
  double bx = h, fb = g(bx);
  if (fb > fa) {
    std::swap(ax, bx);
    std::swap(fa, fb);
  }
  double cx = bx + kGold * (bx - ax), fc = g(cx);
  int expansions = 0;
  while (fb > fc && !F.exhausted() && expansions++ < 50) {
    const double r = (bx - ax) * (fb - fc);
    const double q = (bx - cx) * (fb - fa);
    double denom = 2.0 * std::copysign(std::max(std::abs(q - r), 1e-20), q - r);
    double ux = bx - ((bx - cx) * q - (bx - ax) * r) / denom;
    const double ulim = bx + 100.0 * (cx - bx);
    double fu;
    if ((bx - ux) * (ux - cx) > 0.0) {
      fu = g(ux);
      if (fu < fc) {
        ax = bx; fa = fb;
        bx = ux; fb = fu;
        break;
      }
      if (fu > fb) {
        cx = ux; fc = fu;
        break;
      }
      ux = cx + kGold * (cx - bx);
      fu = g(ux);
    } else if ((cx - ux) * (ux - ulim) > 0.0) {
      fu = g(ux);
      if (fu < fc) {
        bx = cx; fb = fc;
        cx = ux; fc = fu;
        ux = cx + kGold * (cx - bx);
        fu = g(ux);
      }
    } else if ((ux - ulim) * (ulim - cx) >= 0.0) {
      ux = ulim;
      fu = g(ux);
    } else {
      ux = cx + kGold * (cx - bx);
      fu = g(ux);
    }
    ax = bx; fa = fb;
    bx = cx; fb = fc;
    cx = ux; fc = fu;
  }

  // the lowest of the three bracket points so far
  double best_t = ax, best_f = fa;
  if (fb < best_f) { best_t = bx; best_f = fb; }
  if (fc < best_f) { best_t = cx; best_f = fc; }

  if (fb <= fa && fb <= fc && !F.exhausted()) {
    // Brent's method on [min(ax,cx), max(ax,cx)]
    double a = std::min(ax, cx), b = std::max(ax, cx);
    double v = bx, w = bx, xx = bx;
    double fv = fb, fw = fb, fxx = fb;
    double d = 0.0, e = 0.0;
    for (int it = 0; it < 60 && !F.exhausted(); ++it) {
      const double xm = 0.5 * (a + b);
      const double tol1 = 2e-6 * std::abs(xx) + 1e-11;
      const double tol2 = 2.0 * tol1;
      if (std::abs(xx - xm) <= (tol2 - 0.5 * (b - a))) break;
      if (std::abs(e) > tol1) {
        const double r = (xx - w) * (fxx - fv);
        double q = (xx - v) * (fxx - fw);
        double p = (xx - v) * q - (xx - w) * r;
        q = 2.0 * (q - r);
        if (q > 0.0) p = -p;
        q = std::abs(q);
        const double etemp = e;
        e = d;
        if (std::abs(p) >= std::abs(0.5 * q * etemp) || p <= q * (a - xx) || p >= q * (b - xx)) {
          e = (xx >= xm) ? a - xx : b - xx;
          d = kCGold * e;
        } else {
          d = p / q;
          const double uu = xx + d;
          if (uu - a < tol2 || b - uu < tol2) d = std::copysign(tol1, xm - xx);
        }
      } else {
        e = (xx >= xm) ? a - xx : b - xx;
        d = kCGold * e;
      }
      const double uu = (std::abs(d) >= tol1) ? xx + d : xx + std::copysign(tol1, d);
      const double fu = g(uu);
      if (fu <= fxx) {
        if (uu >= xx) a = xx; else b = xx;
        v = w; w = xx; xx = uu;
        fv = fw; fw = fxx; fxx = fu;
      } else {
        if (uu < xx) a = uu; else b = uu;
        if (fu <= fw || w == xx) {
          v = w; w = uu;
          fv = fw; fw = fu;
        } else if (fu <= fv || v == xx || v == w) {
          v = uu;
          fv = fu;
        }
      }
    }
    if (fxx < best_f) { best_t = xx; best_f = fxx; }
  }

  if (best_f < fx) {
    for (std::size_t i = 0; i < n; ++i) x[i] += best_t * u[i];
    fx = best_f;
    return best_t;
  }
  return 0.0;
}

struct LocalResult {
  Vec x;
  double value;
  bool converged;
  long evals;
};

LocalResult powell(const Objective& f, const Parametrization& param, Vec x, const OptimizerConfig& cfg) {
  Evaluator F(f, param, cfg.max_evals);
  const std::size_t n = x.size();
  double fx = F(x);
  if (n == 0) return {x, fx, true, F.evals()};

  std::vector<Vec> dirs(n, Vec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) dirs[i][i] = 1.0;
  Vec steps(n, cfg.initial_step);
  bool converged = false;

  while (!F.exhausted()) {
    const Vec x0 = x;
    const double f0 = fx;
    double biggest = 0.0;
    std::size_t ibig = 0;
    for (std::size_t i = 0; i < n && !F.exhausted(); ++i) {
      const double before = fx;
      const double t = line_minimize(F, x, fx, dirs[i], steps[i]);
      steps[i] = std::clamp(std::abs(t) > 0.0 ? std::abs(t) : 0.5 * steps[i], cfg.min_step, 10.0);
      if (before - fx > biggest) {
        biggest = before - fx;
        ibig = i;
      }
    }
    if (f0 - fx < cfg.tol) {
      converged = true;
      break;
    }
    if (F.exhausted()) break;

    // Powell's direction replacement
    Vec xe(n), d(n);
    double dnorm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = x[i] - x0[i];
      xe[i] = x[i] + d[i];
      dnorm += d[i] * d[i];
    }
    dnorm = std::sqrt(dnorm);
    const double fe = F(xe);
    if (fe < f0 && dnorm > 0.0) {
      const double t = 2.0 * (f0 - 2.0 * fx + fe) * (f0 - fx - biggest) * (f0 - fx - biggest) -
                       biggest * (f0 - fe) * (f0 - fe);
      if (t < 0.0) {
        for (auto& di : d) di /= dnorm;
        line_minimize(F, x, fx, d, dnorm);
        dirs[ibig] = dirs[n - 1];
        steps[ibig] = steps[n - 1];
        dirs[n - 1] = d;
        steps[n - 1] = std::max(dnorm, cfg.min_step);
      }
    }
    Vec xc = x;
    param.canonicalize(xc);
    if (const double fc = F(xc); fc <= fx) {
      x = std::move(xc);
      fx = fc;
    }
  }
  return {x, fx, converged, F.evals()};
}

class SmoothEvaluator {
 public:
  SmoothEvaluator(const SmoothObjective& f, const Parametrization& param, long budget)
      : f_(f), param_(param), budget_(budget) {}

  double operator()(std::span<const double> x, std::span<double> grad) {
    param_.decode(x, point_);
    grad_.simplices.assign(point_.simplices.size(), {});
    grad_.spheres.assign(point_.spheres.size(), CVector());
    const double v = f_(point_, &grad_);
    ++evals_;
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteObjective, "objective returned a non-finite value");
    param_.pullback(x, point_, grad_, grad);
    for (double gi : grad) {
      if (!std::isfinite(gi)) throw Error(ErrorCode::NonFiniteObjective, "objective gradient is not finite");
    }
    return v;
  }

  long evals() const { return evals_; }
  bool exhausted() const { return evals_ >= budget_; }

 private:
  const SmoothObjective& f_;
  const Parametrization& param_;
  Point point_;
  Gradient grad_;
  long budget_;
  long evals_ = 0;
};

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Minimizer of the cubic interpolating (a, fa, da) and (b, fb, db), kept
// inside the safeguarded interval; falls back to bisection.
double cubic_step(double a, double fa, double da, double b, double fb, double db) {
  const double d1 = da + db - 3.0 * (fa - fb) / (a - b);
  const double disc = d1 * d1 - da * db;
  double t = 0.5 * (a + b);
  if (disc >= 0.0) {
    const double d2 = std::copysign(std::sqrt(disc), b - a);
    const double denom = db - da + 2.0 * d2;
    if (denom != 0.0) t = b - (b - a) * (db + d2 - d1) / denom;
  }
  const double lo = std::min(a, b), hi = std::max(a, b), w = hi - lo;
  if (!std::isfinite(t) || t < lo + 0.1 * w || t > hi - 0.1 * w) t = 0.5 * (a + b);
  return t;
}

struct LineResult {
  bool ok = false;
  double alpha = 0.0;
};

// Strong-Wolfe line search along p from x (value f0, slope d0 < 0). On
// success x, fx and g hold the accepted point; otherwise the best point
// with a lower value, if any, is accepted.
LineResult wolfe_search(SmoothEvaluator& F, Vec& x, double& fx, Vec& g, const Vec& p, double alpha1) {
  constexpr double c1 = 1e-4, c2 = 0.9;
  const std::size_t n = x.size();
  const double f0 = fx, d0 = dot(g, p);
  Vec xt(n), gt(n), best_x, best_g;
  double best_f = f0, best_alpha = 0.0;

  auto eval = [&](double a, double& fa, double& da) {
    for (std::size_t i = 0; i < n; ++i) xt[i] = x[i] + a * p[i];
    fa = F(xt, gt);
    da = dot(gt, p);
    if (fa < best_f) {
      best_f = fa;
      best_x = xt;
      best_g = gt;
      best_alpha = a;
    }
  };
  auto accept = [&](double a) {
    x = xt;
    g = gt;
    return LineResult{true, a};
  };

  double a_prev = 0.0, f_prev = f0, d_prev = d0;
  double a = alpha1;
  auto zoom = [&](double lo, double flo, double dlo, double hi, double fhi, double dhi) -> LineResult {
    for (int it = 0; it < 30 && !F.exhausted(); ++it) {
      const double aj = cubic_step(lo, flo, dlo, hi, fhi, dhi);
      double fj, dj;
      eval(aj, fj, dj);
      if (fj > f0 + c1 * aj * d0 || fj >= flo) {
        hi = aj; fhi = fj; dhi = dj;
      } else {
        if (std::abs(dj) <= -c2 * d0) {
          fx = fj;
          return accept(aj);
        }
        if (dj * (hi - lo) >= 0.0) {
          hi = lo; fhi = flo; dhi = dlo;
        }
        lo = aj; flo = fj; dlo = dj;
      }
      if (std::abs(hi - lo) <= 1e-16 * std::max(1.0, std::abs(lo))) break;
    }
    return LineResult{false, 0.0};
  };

  LineResult res;
  for (int it = 0; it < 30 && !F.exhausted(); ++it) {
    double fa, da;
    eval(a, fa, da);
    if (fa > f0 + c1 * a * d0 || (it > 0 && fa >= f_prev)) {
      res = zoom(a_prev, f_prev, d_prev, a, fa, da);
      break;
    }
    if (std::abs(da) <= -c2 * d0) {
      fx = fa;
      res = accept(a);
      break;
    }
    if (da >= 0.0) {
      res = zoom(a, fa, da, a_prev, f_prev, d_prev);
      break;
    }
    a_prev = a; f_prev = fa; d_prev = da;
    a *= 2.0;
  }
  if (res.ok) return res;
  if (best_f < f0) {
    x = best_x;
    g = best_g;
    fx = best_f;
    return LineResult{true, best_alpha};
  }
  return LineResult{false, 0.0};
}

LocalResult bfgs(const SmoothObjective& f, const Parametrization& param, Vec x, const OptimizerConfig& cfg) {
  SmoothEvaluator F(f, param, cfg.max_evals);
  const std::size_t n = x.size();
  Vec g(n);
  double fx = F(x, g);
  if (n == 0) return {x, fx, true, F.evals()};

  // dense inverse-Hessian approximation, row-major
  std::vector<double> H(n * n, 0.0);
  auto reset = [&](double scale) {
    std::fill(H.begin(), H.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) H[i * n + i] = scale;
  };
  reset(1.0);
  bool fresh = true;
  bool converged = false;
  int small_steps = 0;
  Vec p(n), s(n), y(n), Hy(n), g_old(n), x_old(n);

  while (!F.exhausted()) {
    double gmax = 0.0;
    for (double gi : g) gmax = std::max(gmax, std::abs(gi));
    if (gmax <= 1e-15) {
      converged = true;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc -= H[i * n + j] * g[j];
      p[i] = acc;
    }
    if (dot(p, g) >= 0.0) {
      reset(1.0);
      fresh = true;
      for (std::size_t i = 0; i < n; ++i) p[i] = -g[i];
    }
    double alpha1 = 1.0;
    if (fresh) {
      double pn = 0.0;
      for (double pi : p) pn = std::max(pn, std::abs(pi));
      alpha1 = std::min(1.0, cfg.initial_step / pn);
    }
    x_old = x;
    g_old = g;
    const double f_old = fx;
    const LineResult ls = wolfe_search(F, x, fx, g, p, alpha1);
    if (!ls.ok) {
      if (fresh) {
        converged = true;  // no descent left along the steepest direction
        break;
      }
      reset(1.0);
      fresh = true;
      continue;
    }

    if (f_old - fx <= cfg.tol * (std::abs(fx) + cfg.tol)) {
      if (++small_steps >= 2) {
        converged = true;
        break;
      }
    } else {
      small_steps = 0;
    }

    for (std::size_t i = 0; i < n; ++i) {
      s[i] = x[i] - x_old[i];
      y[i] = g[i] - g_old[i];
    }
    const double sy = dot(s, y);
    if (sy > 1e-300) {
      if (fresh) {
        reset(sy / dot(y, y));
        fresh = false;
      }
      for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += H[i * n + j] * y[j];
        Hy[i] = acc;
      }
      const double yHy = dot(y, Hy);
      const double rho = 1.0 / sy;
      const double coef = (1.0 + rho * yHy) * rho;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          H[i * n + j] += coef * s[i] * s[j] - rho * (Hy[i] * s[j] + s[i] * Hy[j]);
        }
      }
    }
  }
  return {x, fx, converged, F.evals()};
}

template <typename Local>
OptimizerResult multi_start(const Parametrization& param, const OptimizerConfig& cfg,
                            std::span<const Point> explicit_starts, Local&& local) {
  cfg.check();
  const int total = std::max<int>(cfg.starts, static_cast<int>(explicit_starts.size()));
  std::vector<Vec> x0(total);
  for (int s = 0; s < total; ++s) {
    if (s < static_cast<int>(explicit_starts.size())) {
      x0[s] = param.encode(explicit_starts[s]);
    } else {
      Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(s)));
      x0[s] = param.encode(param.random_point(rng));
    }
  }

  std::vector<LocalResult> runs(total);
  std::vector<std::exception_ptr> errors(total);
#pragma omp parallel for schedule(dynamic) if (cfg.parallel_starts)
  for (int s = 0; s < total; ++s) {
    try {
      runs[s] = local(x0[s]);
    } catch (...) {
      errors[s] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  OptimizerResult out;
  out.value = std::numeric_limits<double>::infinity();
  for (int s = 0; s < total; ++s) {
    out.evaluations += runs[s].evals;
    out.start_values.push_back(runs[s].value);
    out.start_converged.push_back(runs[s].converged);
    if (runs[s].value < out.value) {
      out.value = runs[s].value;
      out.best_start = s;
    }
  }
  out.params = runs[out.best_start].x;
  out.converged = runs[out.best_start].converged;
  param.decode(out.params, out.point);
  return out;
}

}  // namespace

Parametrization& Parametrization::simplex(int n) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "simplex block needs at least one weight");
  blocks_.push_back({Kind::simplex, static_cast<int>(simplex_sizes_.size()), num_params_, n});
  simplex_sizes_.push_back(n);
  num_params_ += n;
  return *this;
}

Parametrization& Parametrization::sphere(int complex_dim) {
  if (complex_dim < 1) throw Error(ErrorCode::BadParameter, "sphere block needs dimension >= 1");
  blocks_.push_back({Kind::sphere, static_cast<int>(sphere_dims_.size()), num_params_, complex_dim});
  sphere_dims_.push_back(complex_dim);
  num_params_ += 2 * complex_dim;
  return *this;
}

void Parametrization::decode(std::span<const double> x, Point& out) const {
  out.simplices.resize(simplex_sizes_.size());
  out.spheres.resize(sphere_dims_.size());
  for (const Block& b : blocks_) {
    if (b.kind == Kind::simplex) {
      auto& w = out.simplices[b.index];
      w.resize(b.size);
      double mx = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < b.size; ++i) mx = std::max(mx, x[b.offset + i]);
      double s = 0.0;
      for (int i = 0; i < b.size; ++i) {
        w[i] = std::exp(x[b.offset + i] - mx);
        s += w[i];
      }
      for (auto& wi : w) wi /= s;
    } else {
      CVector& v = out.spheres[b.index];
      v.resize(b.size);
      for (int i = 0; i < b.size; ++i) v(i) = cplx(x[b.offset + 2 * i], x[b.offset + 2 * i + 1]);
      const double nrm = v.norm();
      if (nrm > 1e-150) {
        v /= nrm;
      } else {
        v.setZero();
        v(0) = 1.0;
      }
    }
  }
}

std::vector<double> Parametrization::encode(const Point& p) const {
  if (p.simplices.size() != simplex_sizes_.size() || p.spheres.size() != sphere_dims_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "point does not match parametrization");
  }
  std::vector<double> x(num_params_);
  for (const Block& b : blocks_) {
    if (b.kind == Kind::simplex) {
      const auto& w = p.simplices[b.index];
      if (static_cast<int>(w.size()) != b.size) throw Error(ErrorCode::DimensionMismatch, "simplex block size");
      for (int i = 0; i < b.size; ++i) x[b.offset + i] = w[i] > 0.0 ? std::max(std::log(w[i]), kLogFloor) : kLogFloor;
    } else {
      const CVector& v = p.spheres[b.index];
      if (v.size() != b.size) throw Error(ErrorCode::DimensionMismatch, "sphere block size");
      for (int i = 0; i < b.size; ++i) {
        x[b.offset + 2 * i] = v(i).real();
        x[b.offset + 2 * i + 1] = v(i).imag();
      }
    }
  }
  canonicalize(x);
  return x;
}

void Parametrization::pullback(std::span<const double> x, const Point& pt, const Gradient& g,
                               std::span<double> grad_x) const {
  for (const Block& b : blocks_) {
    if (b.kind == Kind::simplex) {
      const auto& w = pt.simplices[b.index];
      const auto& gw = g.simplices[b.index];
      double mean = 0.0;
      for (int i = 0; i < b.size; ++i) mean += w[i] * gw[i];
      for (int i = 0; i < b.size; ++i) grad_x[b.offset + i] = w[i] * (gw[i] - mean);
    } else {
      const CVector& v = pt.spheres[b.index];
      const CVector& gv = g.spheres[b.index];
      double nrm = 0.0;
      for (int i = 0; i < 2 * b.size; ++i) nrm += x[b.offset + i] * x[b.offset + i];
      nrm = std::sqrt(nrm);
      if (nrm <= 1e-150) {
        for (int i = 0; i < 2 * b.size; ++i) grad_x[b.offset + i] = 0.0;
        continue;
      }
      // remove the radial component, then undo the 1/|u| scaling
      const double radial = v.dot(gv).real();
      for (int i = 0; i < b.size; ++i) {
        const cplx gu = (gv(i) - radial * v(i)) / nrm;
        grad_x[b.offset + 2 * i] = gu.real();
        grad_x[b.offset + 2 * i + 1] = gu.imag();
      }
    }
  }
}

Point Parametrization::random_point(Rng& rng) const {
  Point p;
  p.simplices.resize(simplex_sizes_.size());
  p.spheres.resize(sphere_dims_.size());
  for (const Block& b : blocks_) {
    if (b.kind == Kind::simplex) {
      p.simplices[b.index] = dirichlet(b.size, rng);
    } else {
      CVector v = complex_gaussian(b.size, rng);
      p.spheres[b.index] = v / v.norm();
    }
  }
  return p;
}

void Parametrization::canonicalize(std::span<double> x) const {
  for (const Block& b : blocks_) {
    if (b.kind == Kind::simplex) {
      double mx = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < b.size; ++i) mx = std::max(mx, x[b.offset + i]);
      for (int i = 0; i < b.size; ++i) x[b.offset + i] = std::max(x[b.offset + i] - mx, 2.0 * kLogFloor);
    } else {
      double s = 0.0;
      for (int i = 0; i < 2 * b.size; ++i) s += x[b.offset + i] * x[b.offset + i];
      s = std::sqrt(s);
      if (s > 1e-150) {
        for (int i = 0; i < 2 * b.size; ++i) x[b.offset + i] /= s;
      }
    }
  }
}

void OptimizerConfig::check() const {
  if (starts < 1) throw Error(ErrorCode::BadParameter, "optimizer starts must be >= 1");
  if (max_evals < 1) throw Error(ErrorCode::BadParameter, "optimizer max_evals must be >= 1");
  if (!(tol > 0.0 && tol < 1.0)) throw Error(ErrorCode::BadParameter, "optimizer tol must lie in (0, 1)");
  if (!(initial_step > 0.0) || !(min_step > 0.0)) throw Error(ErrorCode::BadParameter, "optimizer steps must be positive");
}

OptimizerResult minimize(const Objective& f, const Parametrization& param, const OptimizerConfig& cfg,
                         std::span<const Point> explicit_starts) {
  return multi_start(param, cfg, explicit_starts, [&](const Vec& x) { return powell(f, param, x, cfg); });
}

OptimizerResult minimize_smooth(const SmoothObjective& f, const Parametrization& param, const OptimizerConfig& cfg,
                                std::span<const Point> explicit_starts) {
  return multi_start(param, cfg, explicit_starts, [&](const Vec& x) { return bfgs(f, param, x, cfg); });
}

}  // namespace qcohere::optim
