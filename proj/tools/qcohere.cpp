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


#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qcohere/harness.hpp"
#include "qcohere/random.hpp"

using namespace qcohere;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitOptimizer = 3;
constexpr int kExitNumeric = 4;

// Reads CLI options from a JSON file. Top-level keys are option names;
// subcommand options nest under the subcommand name.
class ConfigJSON : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
    return dump(app, default_also).dump(2);
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    json j;
    try {
      input >> j;
    } catch (const json::exception& e) {
      throw CLI::ConversionError(std::string("malformed JSON config: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("JSON config must be an object");
    std::vector<CLI::ConfigItem> out;
    collect(j, "", {}, out);
    return out;
  }

 private:
  static json dump(const CLI::App* app, bool default_also) {
    json j = json::object();
    for (const CLI::Option* opt : app->get_options()) {
      if (opt->get_single_name().empty() || opt->get_single_name() == "help" || opt->get_configurable() == false) continue;
      if (opt->count() > 0) {
        const auto& res = opt->results();
        j[opt->get_single_name()] = res.size() == 1 ? json(res[0]) : json(res);
      } else if (default_also && !opt->get_default_str().empty()) {
        j[opt->get_single_name()] = opt->get_default_str();
      }
    }
    for (const CLI::App* sub : app->get_subcommands({})) {
      json s = dump(sub, default_also);
      if (!s.empty()) j[sub->get_name()] = std::move(s);
    }
    return j;
  }

  static void collect(const json& j, const std::string& name, std::vector<std::string> prefix,
                      std::vector<CLI::ConfigItem>& out) {
    if (j.is_object()) {
      if (!name.empty()) prefix.push_back(name);
      for (auto it = j.begin(); it != j.end(); ++it) collect(*it, it.key(), prefix, out);
      return;
    }
    CLI::ConfigItem item;
    item.name = name;
    item.parents = std::move(prefix);
    auto text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (j.is_array()) {
      for (const auto& v : j) item.inputs.push_back(text(v));
    } else {
      item.inputs.push_back(text(j));
    }
    out.push_back(std::move(item));
  }
};

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::OptimizerFailure: return kExitOptimizer;
    case ErrorCode::EigenFailure:
    case ErrorCode::NonFiniteObjective: return kExitNumeric;
    default: return kExitInput;
  }
}

Dims parse_dims(const std::string& s) {
  Dims d;
  std::string tok;
  std::stringstream ss(s);
  while (std::getline(ss, tok, s.find('x') != std::string::npos ? 'x' : ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      d.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad dimension list '" + s + "'");
    }
  }
  if (d.empty()) throw Error(ErrorCode::ParseError, "empty dimension list");
  for (int k : d) {
    if (k < 1) throw Error(ErrorCode::BadDimension, "dimensions must be >= 1");
  }
  return d;
}

// Inline JSON, or @path to read it from a file.
json json_arg(const std::string& s) {
  if (!s.empty() && s[0] == '@') return read_json_file(s.substr(1));
  try {
    return json::parse(s);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON argument: ") + e.what());
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << text << '\n';
}

struct OptimizerFlags {
  int starts = 8;
  long max_evals = 5000;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  int terms = 0;
  std::string delta = "argmin";
  bool strict = false;
  std::vector<CLI::Option*> opts;

  void add(CLI::App* app) {
    opts = {app->add_option("--starts", starts, "Optimizer starts (explicit starts included)")->capture_default_str(),
            app->add_option("--max-evals", max_evals, "Objective evaluations per start")->capture_default_str(),
            app->add_option("--tol", tol, "Stop when an iteration improves less than this")->capture_default_str(),
            app->add_option("--seed", seed, "Seed for random optimizer starts")->capture_default_str(),
            app->add_option("--terms", terms, "Product terms in the separable ansatz (0: twice the dimension)")
                ->capture_default_str(),
            app->add_option("--delta-convention", delta, "argmin or dephased")->capture_default_str(),
            app->add_flag("--strict", strict, "Fail with exit code 3 when an optimizer does not converge")};
  }

  // Applies flags that were given (on the command line or in a config file).
  DecompositionOptions apply(DecompositionOptions o) const {
    if (opts[0]->count()) o.optimizer.starts = starts;
    if (opts[1]->count()) o.optimizer.max_evals = max_evals;
    if (opts[2]->count()) o.optimizer.tol = tol;
    if (opts[3]->count()) o.optimizer.seed = seed;
    if (opts[4]->count()) o.terms = terms;
    if (opts[5]->count()) o.delta_convention = parse_dephasing_convention(delta);
    if (opts[6]->count()) o.require_convergence = strict;
    o.optimizer.check();
    if (o.terms < 0) throw Error(ErrorCode::BadParameter, "terms must be >= 0");
    return o;
  }
};

struct StateFlags {
  std::string recipe;
  std::string recipe_json;
  std::string state;
  std::string inner = "random_pure";
  double theta = 0, phi = 0, xi = 0, mu = 0;
  int qubits = 0;
  int dim = 0;
  std::string dims;
  std::uint64_t state_seed = 0;
  CLI::Option *o_theta, *o_phi, *o_xi, *o_mu, *o_qubits, *o_dim, *o_dims, *o_seed;

  void add(CLI::App* app) {
    auto* r = app->add_option("--recipe", recipe, "Named state: ghz, w, bell, ising, plus_product, werner, random_pure, random_mixed");
    auto* rj = app->add_option("--recipe-json", recipe_json, "Recipe as JSON, or @file");
    auto* s = app->add_option("--state", state, "JSON file holding an explicit density matrix");
    r->excludes(rj)->excludes(s);
    rj->excludes(s);
    app->add_option("--inner", inner, "Pure-state recipe mixed with noise by werner")->capture_default_str();
    o_theta = app->add_option("--theta", theta, "Angle for ghz and w");
    o_phi = app->add_option("--phi", phi, "Second angle for w");
    o_xi = app->add_option("--xi", xi, "Coupling angle for ising");
    o_mu = app->add_option("--mu", mu, "Mixing parameter for werner");
    o_qubits = app->add_option("--qubits", qubits, "Number of qubits");
    o_dim = app->add_option("--dim", dim, "Single subsystem of this dimension");
    o_dims = app->add_option("--dims", dims, "Subsystem dimensions, e.g. 2,2");
    o_seed = app->add_option("--state-seed", state_seed, "Seed for random recipes");
    o_dim->excludes(o_dims);
  }

  void fill(StateRecipe& r) const {
    if (o_theta->count()) r.theta = theta;
    if (o_phi->count()) r.phi = phi;
    if (o_xi->count()) r.xi = xi;
    if (o_qubits->count()) r.qubits = qubits;
    if (o_dim->count()) r.dims = Dims{dim};
    if (o_dims->count()) r.dims = parse_dims(dims);
    if (o_seed->count() || r.kind == RecipeKind::random_pure || r.kind == RecipeKind::random_mixed) r.seed = state_seed;
  }

  DensityMatrix build(json& echo) const {
    if (!state.empty()) {
      const DensityMatrix rho = density_from_json(read_json_file(state));
      echo = json{{"kind", "explicit"}, {"source", state}};
      return rho;
    }
    StateRecipe r;
    if (!recipe_json.empty()) {
      r = recipe_from_json(json_arg(recipe_json));
    } else {
      if (recipe.empty()) throw Error(ErrorCode::BadRecipe, "give --recipe, --recipe-json or --state");
      r.kind = parse_recipe_kind(recipe);
      if (r.kind == RecipeKind::werner_mix) {
        StateRecipe in;
        in.kind = parse_recipe_kind(inner);
        fill(in);
        if (o_mu->count()) r.mu = mu;
        r.inner = std::make_shared<const StateRecipe>(std::move(in));
      } else {
        fill(r);
      }
    }
    echo = recipe_to_json(r);
    return make_state(r);
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Basis-independent quantum coherence from the square-root quantum Jensen-Shannon divergence"};
  app.config_formatter(std::make_shared<ConfigJSON>());
  app.set_config("--config", "", "JSON file with option values; command-line flags win");
  app.require_subcommand(1);

  // coherence
  auto* coh = app.add_subcommand("coherence", "Coherence report for one state (JSON)");
  StateFlags coh_state;
  coh_state.add(coh);
  OptimizerFlags coh_opt;
  coh_opt.add(coh);
  std::string coh_basis = "computational", coh_out;
  coh->add_option("--basis", coh_basis, "computational, hadamard, or a unitary as JSON / @file")->capture_default_str();
  coh->add_option("-o,--output", coh_out, "Write the report here instead of standard output");

  // sweep
  auto* sw = app.add_subcommand("sweep", "Parameter sweep to CSV");
  std::string sw_spec, sw_out, sw_columns;
  bool sw_serial = false;
  sw->add_option("--spec", sw_spec, "Sweep specification (JSON file)")->required();
  sw->add_option("-o,--output", sw_out, "CSV path; overrides the spec, '-' for standard output");
  sw->add_option("--columns", sw_columns, "full or direct (skip optimizer columns)");
  sw->add_flag("--serial", sw_serial, "Evaluate grid points with the serial reference loop");
  OptimizerFlags sw_opt;
  sw_opt.add(sw);

  // verify-metric
  auto* vm = app.add_subcommand("verify-metric", "Triangle-inequality stress test of the QJSD metric");
  std::vector<int> vm_dims{2, 3, 4, 8};
  long vm_count = 100000;
  std::string vm_ensemble = "hs", vm_out;
  std::uint64_t vm_seed = 0;
  bool vm_serial = false;
  vm->add_option("--dims", vm_dims, "Dimensions to test")->delimiter(',')->capture_default_str();
  vm->add_option("--count", vm_count, "Triples per dimension")->capture_default_str();
  vm->add_option("--ensemble", vm_ensemble, "hs (mixed) or haar (pure)")->capture_default_str();
  vm->add_option("--seed", vm_seed, "Sampling seed")->capture_default_str();
  vm->add_flag("--serial", vm_serial, "Use the serial reference loop");
  vm->add_option("-o,--output", vm_out, "Write the summary here");

  // verify-product
  auto* vp = app.add_subcommand("verify-product", "Checks that the product of marginals is the closest product state");
  std::vector<std::string> vp_dims{"2x2", "2x2x2"};
  long vp_states = 100, vp_trials = 1000;
  std::uint64_t vp_seed = 0;
  bool vp_serial = false;
  std::string vp_out;
  vp->add_option("--dims", vp_dims, "Subsystem structures, e.g. 2x2 2x2x2")->capture_default_str();
  vp->add_option("--states", vp_states, "Random mixed states per structure")->capture_default_str();
  vp->add_option("--trials", vp_trials, "Random product states per mixed state")->capture_default_str();
  vp->add_option("--seed", vp_seed, "Sampling seed")->capture_default_str();
  vp->add_flag("--serial", vp_serial, "Use the serial reference loop");
  vp->add_option("-o,--output", vp_out, "Write the summary here");

  // sample
  auto* sm = app.add_subcommand("sample", "Draw random density matrices as JSON");
  std::string sm_ensemble = "hs", sm_dims = "2", sm_out;
  long sm_count = 1;
  std::uint64_t sm_seed = 0;
  sm->add_option("--ensemble", sm_ensemble, "hs (mixed) or haar (pure)")->capture_default_str();
  sm->add_option("--dims", sm_dims, "Subsystem dimensions, e.g. 2,2")->capture_default_str();
  sm->add_option("--count", sm_count, "Number of states")->capture_default_str();
  sm->add_option("--seed", sm_seed, "Sampling seed; state i uses mix_seed(seed, i)")->capture_default_str();
  sm->add_option("-o,--output", sm_out, "Write here instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  if (coh->parsed()) {
    json echo;
    const DensityMatrix rho = coh_state.build(echo);
    const DecompositionOptions opts = coh_opt.apply({});
    const json bj = (!coh_basis.empty() && (coh_basis[0] == '{' || coh_basis[0] == '@')) ? json_arg(coh_basis) : json(coh_basis);
    const BasisSpec basis = basis_from_json(bj, rho.dims());
    json report = harness::coherence_report(rho, basis, opts);
    report["state"] = echo;
    report["optimizer"] = harness::options_to_json(opts);
    emit(coh_out, report.dump(2));
    return kExitOk;
  }

  if (sw->parsed()) {
    harness::SweepSpec spec = harness::sweep_spec_from_json(read_json_file(sw_spec));
    spec.options = sw_opt.apply(spec.options);
    if (!sw_columns.empty()) spec.columns = kernels::parse_columns(sw_columns);
    if (!sw_out.empty()) spec.output = sw_out;
    const auto records = harness::run_sweep(spec, !sw_serial);
    if (spec.output.empty() || spec.output == "-") {
      harness::write_csv(std::cout, records);
    } else {
      harness::write_csv_file(spec.output, records);
      std::cerr << "wrote " << records.size() << " rows to " << spec.output << '\n';
    }
    return kExitOk;
  }

  if (vm->parsed()) {
    const kernels::Ensemble e = kernels::parse_ensemble(vm_ensemble);
    json out{{"ensemble", kernels::to_string(e)}, {"seed", vm_seed}, {"results", json::array()}};
    for (int d : vm_dims) {
      const auto s = vm_serial ? kernels::serial::triangle_slacks(d, vm_count, e, vm_seed)
                               : kernels::omp::triangle_slacks(d, vm_count, e, vm_seed);
      json r = harness::to_json(s);
      r["d"] = d;
      json triple = json::array();
      for (const auto& rho : kernels::triangle_triple(d, e, vm_seed, s.worst_index)) triple.push_back(density_to_json(rho));
      r["worst_triple"] = std::move(triple);
      out["results"].push_back(std::move(r));
    }
    emit(vm_out, out.dump(2));
    return kExitOk;
  }

  if (vp->parsed()) {
    json out{{"seed", vp_seed}, {"results", json::array()}};
    for (const std::string& ds : vp_dims) {
      const Dims dims = parse_dims(ds);
      if (dims.size() < 2) throw Error(ErrorCode::SingleSubsystem, "verify-product needs at least two subsystems");
      const auto s = vp_serial ? kernels::serial::closest_product(dims, vp_states, vp_trials, vp_seed)
                               : kernels::omp::closest_product(dims, vp_states, vp_trials, vp_seed);
      json r = harness::to_json(s);
      r["dims"] = dims;
      out["results"].push_back(std::move(r));
    }
    emit(vp_out, out.dump(2));
    return kExitOk;
  }

  if (sm->parsed()) {
    const kernels::Ensemble e = kernels::parse_ensemble(sm_ensemble);
    const Dims dims = parse_dims(sm_dims);
    if (sm_count < 1) throw Error(ErrorCode::BadParameter, "count must be >= 1");
    json out = json::array();
    for (long i = 0; i < sm_count; ++i) {
      Rng rng(mix_seed(sm_seed, static_cast<std::uint64_t>(i)));
      out.push_back(density_to_json(e == kernels::Ensemble::haar_pure ? haar_pure(dims, rng).density()
                                                                      : hilbert_schmidt(dims, rng)));
    }
    emit(sm_out, out.dump(2));
    return kExitOk;
  }
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const json::exception& e) {
    std::cerr << "error (ParseError): " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
}
