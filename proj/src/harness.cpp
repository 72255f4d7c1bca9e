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


#include "qcohere/harness.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcohere/random.hpp"

namespace qcohere::harness {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

json number_or_null(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

void fmt(std::string& out, double v) {
  if (std::isnan(v)) {
    out += "nan";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  out += buf;
}

template <typename T>
void read(const json& j, const char* key, T& dst) {
  if (!j.contains(key)) return;
  try {
    dst = j.at(key).get<T>();
  } catch (const json::exception&) {
    parse_fail(std::string("'") + key + "' has the wrong type");
  }
}

}  // namespace

std::vector<double> Grid::values() const {
  if (points < 2) throw Error(ErrorCode::BadParameter, "a grid needs at least two points");
  if (!std::isfinite(start) || !std::isfinite(stop)) throw Error(ErrorCode::BadParameter, "grid bounds must be finite");
  std::vector<double> v(points);
  for (int i = 0; i < points; ++i) {
    const double t = open_start ? static_cast<double>(i + 1) / points : static_cast<double>(i) / (points - 1);
    v[i] = (i == points - 1) ? stop : start + t * (stop - start);
  }
  return v;
}

void SweepSpec::check() const {
  if (grid.points < 2) throw Error(ErrorCode::BadParameter, "sweep grid needs at least two points");
  if (!recipe.uses_param(param)) {
    throw Error(ErrorCode::BadParameter, "parameter '" + param + "' is not used by recipe " + to_string(recipe.kind));
  }
  options.optimizer.check();
}

DecompositionOptions options_from_json(const json& j, DecompositionOptions o) {
  if (!j.is_object()) parse_fail("optimizer settings must be a JSON object");
  read(j, "starts", o.optimizer.starts);
  read(j, "max_evals", o.optimizer.max_evals);
  read(j, "tol", o.optimizer.tol);
  read(j, "seed", o.optimizer.seed);
  read(j, "initial_step", o.optimizer.initial_step);
  read(j, "min_step", o.optimizer.min_step);
  read(j, "parallel_starts", o.optimizer.parallel_starts);
  read(j, "terms", o.terms);
  read(j, "require_convergence", o.require_convergence);
  if (j.contains("delta_convention")) {
    std::string c;
    read(j, "delta_convention", c);
    o.delta_convention = parse_dephasing_convention(c);
  }
  o.optimizer.check();
  if (o.terms < 0) throw Error(ErrorCode::BadParameter, "terms must be >= 0");
  return o;
}

json options_to_json(const DecompositionOptions& o) {
  return json{{"starts", o.optimizer.starts},
              {"max_evals", o.optimizer.max_evals},
              {"tol", o.optimizer.tol},
              {"seed", o.optimizer.seed},
              {"initial_step", o.optimizer.initial_step},
              {"min_step", o.optimizer.min_step},
              {"parallel_starts", o.optimizer.parallel_starts},
              {"terms", o.terms},
              {"delta_convention", to_string(o.delta_convention)},
              {"require_convergence", o.require_convergence}};
}

SweepSpec sweep_spec_from_json(const json& j) {
  if (!j.is_object()) parse_fail("sweep spec must be a JSON object");
  SweepSpec s;
  if (!j.contains("recipe")) parse_fail("sweep spec needs a 'recipe'");
  s.recipe = recipe_from_json(j["recipe"]);
  if (!j.contains("param")) parse_fail("sweep spec needs a 'param'");
  read(j, "param", s.param);
  if (!j.contains("grid") || !j["grid"].is_object()) parse_fail("sweep spec needs a 'grid' object");
  const json& g = j["grid"];
  for (const char* key : {"start", "stop", "points"}) {
    if (!g.contains(key)) parse_fail(std::string("grid needs '") + key + "'");
  }
  read(g, "start", s.grid.start);
  read(g, "stop", s.grid.stop);
  read(g, "points", s.grid.points);
  read(g, "open_start", s.grid.open_start);
  if (j.contains("basis")) s.basis = j["basis"];
  if (j.contains("optimizer")) s.options = options_from_json(j["optimizer"]);
  if (j.contains("columns")) {
    std::string c;
    read(j, "columns", c);
    s.columns = kernels::parse_columns(c);
  }
  read(j, "output", s.output);
  read(j, "seed", s.seed);
  s.check();
  return s;
}

json sweep_spec_to_json(const SweepSpec& s) {
  json j{{"recipe", recipe_to_json(s.recipe)},
         {"param", s.param},
         {"grid", {{"start", s.grid.start}, {"stop", s.grid.stop}, {"points", s.grid.points}, {"open_start", s.grid.open_start}}},
         {"basis", s.basis},
         {"optimizer", options_to_json(s.options)},
         {"columns", kernels::to_string(s.columns)},
         {"seed", s.seed}};
  if (!s.output.empty()) j["output"] = s.output;
  return j;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, bool parallel) {
  spec.check();
  const std::vector<double> grid = spec.grid.values();
  std::vector<DensityMatrix> states;
  std::vector<DecompositionOptions> opts;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    states.push_back(make_state(spec.recipe.with_param(spec.param, grid[i])));
    DecompositionOptions o = spec.options;
    o.optimizer.seed = mix_seed(spec.seed, i);
    opts.push_back(std::move(o));
  }
  for (const DensityMatrix& s : states) {
    if (s.dims() != states.front().dims()) throw Error(ErrorCode::DimensionMismatch, "sweep changes the state dimension");
  }
  const BasisSpec basis = basis_from_json(spec.basis, states.front().dims());
  const std::vector<kernels::CoherenceRow> rows = parallel ? kernels::omp::evaluate_rows(states, basis, opts, spec.columns)
                                                           : kernels::serial::evaluate_rows(states, basis, opts, spec.columns);
  std::vector<SweepRecord> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = SweepRecord{grid[i], rows[i]};
  return out;
}

const char* const kCsvHeader =
    "param,C,C_c,C_l,C_I,C_L,C_basis,delta_C,slack29,slack36,slack37,slack41,slack42,converged,walltime_ms";

std::string csv_row(const SweepRecord& r) {
  const kernels::CoherenceRow& w = r.row;
  std::string out;
  for (double v : {r.param, w.total, w.collective, w.localized, w.intrinsic, w.local_bi, w.basis, w.delta, w.slack29,
                   w.slack36, w.slack37, w.slack41, w.slack42}) {
    fmt(out, v);
    out += ',';
  }
  out += w.converged ? "1," : "0,";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", w.walltime_ms);
  out += buf;
  return out;
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kCsvHeader << '\n';
  for (const SweepRecord& r : records) out << csv_row(r) << '\n';
}

void write_csv_file(const std::string& path, const std::vector<SweepRecord>& records) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".partial";
  try {
    {
      std::ofstream out(tmp);
      if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + tmp.string() + "'");
      write_csv(out, records);
      out.flush();
      if (!out) throw Error(ErrorCode::ParseError, "failed writing '" + tmp.string() + "'");
    }
    fs::rename(tmp, target);
  } catch (...) {
    std::error_code ec;
    fs::remove(tmp, ec);
    throw;
  }
}

json row_to_json(const kernels::CoherenceRow& w) {
  return json{{"C", number_or_null(w.total)},
              {"C_c", number_or_null(w.collective)},
              {"C_l", number_or_null(w.localized)},
              {"C_I", number_or_null(w.intrinsic)},
              {"C_L", number_or_null(w.local_bi)},
              {"C_basis", number_or_null(w.basis)},
              {"delta_C", number_or_null(w.delta)},
              {"slack29", number_or_null(w.slack29)},
              {"slack36", number_or_null(w.slack36)},
              {"slack37", number_or_null(w.slack37)},
              {"slack41", number_or_null(w.slack41)},
              {"slack42", number_or_null(w.slack42)},
              {"violation", w.violation()},
              {"converged", w.converged},
              {"walltime_ms", w.walltime_ms}};
}

json coherence_report(const DensityMatrix& rho, const BasisSpec& b, const DecompositionOptions& opts) {
  json j;
  j["dims"] = rho.dims();
  j["basis"] = b.label();
  j["delta_convention"] = to_string(opts.delta_convention);
  if (rho.num_subsystems() >= 2) {
    const DecompositionReport r = check_inequalities(rho, b, opts);
    j["C"] = r.total;
    j["C_c"] = r.collective;
    j["C_l"] = r.localized;
    j["C_I"] = r.intrinsic;
    j["C_L"] = r.local_bi;
    j["C_L_basis"] = r.local_bd;
    j["C_basis"] = r.basis;
    j["delta_C"] = r.delta;
    j["slack29"] = r.slack29;
    j["slack36"] = r.slack36;
    j["slack37"] = r.slack37;
    j["slack41"] = r.slack41;
    j["slack42"] = r.slack42;
    j["violation"] = r.violation();
    j["converged"] = r.converged;
    j["starts"] = r.starts;
    j["evaluations"] = r.evaluations;
  } else {
    const CoherenceOptions co = opts.coherence_options();
    const BasisCoherence bc = basis_coherence(rho, b, co);
    const double c = total_coherence(rho);
    const double dc = delta_coherence(rho, b, bc, co.delta_convention).value;
    j["C"] = c;
    j["C_basis"] = bc.value;
    j["delta_C"] = dc;
    j["slack41"] = bc.value + dc - c;
    j["violation"] = bc.value + dc - c < -kSlackTolerance;
    j["converged"] = bc.diagnostics.converged;
    j["starts"] = bc.diagnostics.start_values.size();
    j["evaluations"] = bc.diagnostics.evaluations;
  }
  return j;
}

json to_json(const kernels::TriangleSummary& s) {
  return json{{"count", s.count},
              {"min_slack", s.min_slack},
              {"worst_index", s.worst_index},
              {"min_qjsd", s.min_qjsd},
              {"max_qjsd", s.max_qjsd}};
}

json to_json(const kernels::ProductSummary& s) {
  return json{{"states", s.states}, {"trials", s.trials}, {"max_violation", s.max_violation}, {"worst_state", s.worst_state}};
}

}  // namespace qcohere::harness
