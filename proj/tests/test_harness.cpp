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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qcohere/harness.hpp"

using namespace qcohere;
using namespace qcohere::harness;

namespace {

std::string strip_walltime(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + '\n';
  return out;
}

json ising_spec() {
  return json::parse(R"({
    "recipe": {"kind": "ising"},
    "param": "xi",
    "grid": {"start": 0, "stop": 1.5707963267948966, "points": 5},
    "seed": 7
  })");
}

}  // namespace

TEST_CASE("grids") {
  Grid g{0.0, 1.0, 5, false};
  CHECK(g.values() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  g.open_start = true;
  g.points = 4;
  CHECK(g.values() == std::vector<double>{0.25, 0.5, 0.75, 1.0});
  g.points = 1;
  CHECK_THROWS_AS(g.values(), Error);
}

TEST_CASE("sweep spec parsing") {
  const SweepSpec s = sweep_spec_from_json(ising_spec());
  CHECK(s.param == "xi");
  CHECK(s.grid.points == 5);
  CHECK(s.seed == 7);
  CHECK(s.columns == kernels::Columns::full);
  const SweepSpec back = sweep_spec_from_json(sweep_spec_to_json(s));
  CHECK(back.grid.stop == s.grid.stop);

  json bad = ising_spec();
  bad["param"] = "mu";
  CHECK_THROWS_AS(sweep_spec_from_json(bad), Error);
  bad = ising_spec();
  bad["grid"]["points"] = 1;
  CHECK_THROWS_AS(sweep_spec_from_json(bad), Error);
  bad = ising_spec();
  bad["grid"]["points"] = "five";
  CHECK_THROWS_AS(sweep_spec_from_json(bad), Error);
  bad = ising_spec();
  bad.erase("grid");
  CHECK_THROWS_AS(sweep_spec_from_json(bad), Error);
}

TEST_CASE("optimizer options from JSON") {
  const DecompositionOptions o =
      options_from_json(json::parse(R"({"starts": 3, "terms": 4, "delta_convention": "dephased", "tol": 1e-9})"));
  CHECK(o.optimizer.starts == 3);
  CHECK(o.terms == 4);
  CHECK(o.delta_convention == DephasingConvention::dephased);
  CHECK(o.optimizer.max_evals == 5000);
  CHECK_THROWS_AS(options_from_json(json::parse(R"({"starts": 0})")), Error);
  CHECK(options_from_json(options_to_json(o)).optimizer.tol == 1e-9);
}

TEST_CASE("sweeps are deterministic and one row per grid point") {
  const SweepSpec s = sweep_spec_from_json(ising_spec());
  const auto a = run_sweep(s, false);
  const auto b = run_sweep(s, true);
  REQUIRE(a.size() == 5);
  std::ostringstream ca, cb;
  write_csv(ca, a);
  write_csv(cb, b);
  CHECK(strip_walltime(ca.str()) == strip_walltime(cb.str()));
  CHECK(ca.str().substr(0, ca.str().find('\n')) == kCsvHeader);
  for (const SweepRecord& r : a) {
    CHECK(r.row.total == doctest::Approx(0.740807).epsilon(1e-6));
    CHECK_FALSE(r.row.violation());
  }
}

TEST_CASE("CSV files appear atomically") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qcohere_harness_test";
  fs::create_directories(dir);
  const SweepSpec s = sweep_spec_from_json(ising_spec());
  const auto rows = run_sweep(s, false);
  const std::string path = (dir / "out.csv").string();
  write_csv_file(path, rows);
  std::ifstream in(path);
  int lines = 0;
  for (std::string l; std::getline(in, l);) ++lines;
  CHECK(lines == 6);
  CHECK_FALSE(fs::exists(path + ".partial"));
  CHECK_THROWS(write_csv_file((dir / "missing" / "out.csv").string(), rows));
  CHECK_FALSE(fs::exists(dir / "missing"));
  fs::remove_all(dir);
}

TEST_CASE("CSV formatting") {
  SweepRecord r;
  r.param = 0.5;
  r.row.total = 0.25;
  r.row.collective = std::nan("");
  r.row.walltime_ms = 1.23456;
  const std::string line = csv_row(r);
  CHECK(line.rfind("0.5,0.25,nan,", 0) == 0);
  CHECK(line.substr(line.size() - 8) == ",1,1.235");
}

TEST_CASE("coherence report") {
  const DensityMatrix mixed = validate(CMatrix::Identity(4, 4) / 4.0, {2, 2});
  const json j = coherence_report(mixed, BasisSpec::computational(4), {});
  CHECK(j["C"].get<double>() == 0.0);
  CHECK(j.contains("C_I"));
  CHECK(j["violation"] == false);
  const json single = coherence_report(maximally_mixed(2), BasisSpec::computational(2), {});
  CHECK_FALSE(single.contains("C_I"));
  CHECK(single.contains("slack41"));
}
