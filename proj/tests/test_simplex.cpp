#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ekbounds/simplex.hpp"
#include "oracles.hpp"

using namespace ekbounds;

TEST_CASE("two-variable box") {
  // max x + y,  x <= 1, y <= 2
  const LpResult r = solve_lp_max({{1, 0}, {0, 1}}, {1, 2}, {1, 1});
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.value == doctest::Approx(3.0));
  CHECK(r.x[0] == doctest::Approx(1.0));
  CHECK(r.x[1] == doctest::Approx(2.0));
}

TEST_CASE("binding mix") {
  // max 2x + y,  x + y <= 4, x <= 2  ->  (2, 2), value 6
  const LpResult r = solve_lp_max({{1, 1}, {1, 0}}, {4, 2}, {2, 1});
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.value == doctest::Approx(6.0));
  CHECK(r.x[0] == doctest::Approx(2.0));
  CHECK(r.x[1] == doctest::Approx(2.0));
}

TEST_CASE("unbounded ray is detected") {
  // max x, -x + y <= 1 leaves x free to grow
  const LpResult r = solve_lp_max({{-1, 1}}, {1}, {1, 0});
  CHECK(r.status == LpResult::Status::Unbounded);
}

TEST_CASE("degenerate zero rows terminate") {
  // max x subject to x - y <= 0, y <= 1; the first vertex visited is
  // degenerate (rhs 0), which is the shape the budget rows produce.
  const LpResult r = solve_lp_max({{1, -1}, {0, 1}}, {0, 1}, {1, 0});
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.value == doctest::Approx(1.0));
  CHECK(r.x[0] == doctest::Approx(1.0));
  CHECK(r.x[1] == doctest::Approx(1.0));
}

TEST_CASE("zero objective returns zero") {
  const LpResult r = solve_lp_max({{1, 1}}, {1}, {0, 0});
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.value == 0.0);
  CHECK(r.pivots == 0);
}

TEST_CASE("negative rhs is rejected") {
  CHECK_THROWS_AS(solve_lp_max({{1.0}}, {-1.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("random instances agree with vertex enumeration") {
  std::mt19937 rng(987654321);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_real_distribution<double> bound(0.0, 3.0);
  std::uniform_int_distribution<int> dim(1, 3);

  for (int trial = 0; trial < 300; ++trial) {
    const int n = dim(rng);
    const int m = dim(rng);
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    for (int i = 0; i < m; ++i) {
      std::vector<double> row(n);
      for (double& v : row) v = coeff(rng);
      rows.push_back(row);
      rhs.push_back(bound(rng));
    }
    // box rows keep the region bounded so the oracle applies
    for (int j = 0; j < n; ++j) {
      std::vector<double> row(n, 0.0);
      row[j] = 1.0;
      rows.push_back(row);
      rhs.push_back(3.0);
    }
    std::vector<double> objective(n);
    for (double& v : objective) v = coeff(rng);

    const LpResult r = solve_lp_max(rows, rhs, objective);
    REQUIRE(r.status == LpResult::Status::Optimal);
    const double expected = oracles::vertex_enumeration_max(rows, rhs, objective);
    CHECK(r.value == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("pivot counts stay small") {
  const LpResult r = solve_lp_max({{1, 2, 1}, {2, 0, 1}, {1, 1, 3}}, {4, 3, 6}, {3, 1, 2});
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.pivots < 30);
}
