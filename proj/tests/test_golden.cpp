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


// Regression against sweeps pinned from a verified run. Closed-form columns
// must match tightly; optimizer columns get a looser bound.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qcohere/harness.hpp"

using namespace qcohere;
using namespace qcohere::harness;

namespace {

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cell_in(line);
    std::string cell;
    while (std::getline(cell_in, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Columns that depend only on eigendecompositions, not on the optimizer.
bool closed_form(const std::string& column) {
  return column == "param" || column == "C" || column == "C_c" || column == "C_l" || column == "slack36";
}

void check_golden(const std::string& name) {
  const std::string dir = QCOHERE_GOLDEN_DIR;
  const SweepSpec spec = sweep_spec_from_json(json::parse(slurp(dir + "/" + name + ".json")));
  std::ostringstream fresh;
  write_csv(fresh, run_sweep(spec, false));
  const auto want = read_csv(slurp(dir + "/" + name + ".csv"));
  const auto got = read_csv(fresh.str());
  REQUIRE(got.size() == want.size());
  REQUIRE(got[0] == want[0]);
  for (std::size_t r = 1; r < want.size(); ++r) {
    REQUIRE(got[r].size() == want[r].size());
    for (std::size_t c = 0; c + 1 < want[r].size(); ++c) {
      const std::string& column = want[0][c];
      INFO(name << " row " << r << " column " << column);
      if (column == "converged") {
        CHECK(got[r][c] == want[r][c]);
        continue;
      }
      const double tol = closed_form(column) ? 1e-9 : 1e-6;
      CHECK(std::abs(std::stod(got[r][c]) - std::stod(want[r][c])) <= tol);
    }
  }
}

}  // namespace

TEST_CASE("ising sweep matches golden") { check_golden("ising"); }

TEST_CASE("ghz werner sweep matches golden") { check_golden("ghz_werner"); }
