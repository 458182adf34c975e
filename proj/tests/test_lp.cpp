#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "hgdec/lp.hpp"
#include "support/oracles.hpp"

using namespace hgdec;

namespace {

// Covering LP for a random incidence structure.
LinearProgram random_cover_lp(std::mt19937& rng, std::size_t max_vars = 8,
                              std::size_t max_rows = 6) {
  std::size_t n = 2 + rng() % (max_vars - 1);
  std::size_t m = 2 + rng() % (max_rows - 1);
  LinearProgram lp;
  lp.objective.assign(n, 1.0);
  lp.upper.assign(n, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    LpRow row;
    row.coeffs.assign(n, 0.0);
    bool any = false;
    for (std::size_t j = 0; j < n; ++j)
      if (rng() % 3 == 0) {
        row.coeffs[j] = 1.0;
        any = true;
      }
    if (!any) row.coeffs[rng() % n] = 1.0;
    row.sense = '>';
    row.rhs = 1.0;
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

}  // namespace

TEST_CASE("triangle covering LP solves to 3/2") {
  // three vertices, three edges ab, bc, ca
  LinearProgram lp;
  lp.objective = {1, 1, 1};
  lp.upper = {1, 1, 1};
  lp.rows.push_back({{1, 0, 1}, '>', 1});  // a in ab, ca
  lp.rows.push_back({{1, 1, 0}, '>', 1});  // b in ab, bc
  lp.rows.push_back({{0, 1, 1}, '>', 1});  // c in bc, ca
  auto sol = lp_solve(lp);
  REQUIRE(sol.status == LpSolution::Status::Optimal);
  CHECK(std::abs(sol.value - 1.5) < 1e-9);
}

TEST_CASE("triangle dual program solves to 3/2") {
  // max y_a + y_b + y_c s.t. per-edge sums <= 1  ==  min of the negated form
  LinearProgram lp;
  lp.objective = {-1, -1, -1};
  lp.upper = {-1, -1, -1};  // unbounded above
  lp.rows.push_back({{1, 1, 0}, '<', 1});
  lp.rows.push_back({{0, 1, 1}, '<', 1});
  lp.rows.push_back({{1, 0, 1}, '<', 1});
  auto sol = lp_solve(lp);
  REQUIRE(sol.status == LpSolution::Status::Optimal);
  CHECK(std::abs(-sol.value - 1.5) < 1e-9);
}

TEST_CASE("infeasible program is detected") {
  LinearProgram lp;
  lp.objective = {1};
  lp.upper = {1};
  lp.rows.push_back({{1}, '>', 2});  // x >= 2 with x <= 1
  CHECK(lp_solve(lp).status == LpSolution::Status::Infeasible);
}

TEST_CASE("equality rows work") {
  LinearProgram lp;
  lp.objective = {1, 2};
  lp.upper = {-1, -1};
  lp.rows.push_back({{1, 1}, '=', 3});
  lp.rows.push_back({{1, 0}, '<', 2});
  auto sol = lp_solve(lp);
  REQUIRE(sol.status == LpSolution::Status::Optimal);
  // x0 = 2, x1 = 1 minimizes x0 + 2 x1
  CHECK(std::abs(sol.value - 4.0) < 1e-9);
}

TEST_CASE("simplex optimum matches polytope vertex enumeration") {
  std::mt19937 rng(42);
  for (int i = 0; i < 40; ++i) {
    auto lp = random_cover_lp(rng);
    auto sol = lp_solve(lp);
    double oracle = testing::lp_vertex_enum_min(lp);
    if (sol.status == LpSolution::Status::Optimal) {
      REQUIRE(std::isfinite(oracle));
      CHECK(std::abs(sol.value - oracle) < 1e-6);
      // solution is feasible
      for (const auto& row : lp.rows) {
        double lhs = 0;
        for (std::size_t j = 0; j < sol.x.size(); ++j)
          lhs += row.coeffs[j] * sol.x[j];
        CHECK(lhs >= row.rhs - 1e-7);
      }
    } else {
      CHECK(!std::isfinite(oracle));
    }
  }
}
