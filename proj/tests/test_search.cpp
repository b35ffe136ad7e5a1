#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ekbounds/search.hpp"

using namespace ekbounds;

namespace {

SearchSpec zykin_spec() {
  SearchSpec spec;
  spec.split_primes = {2, 3};
  spec.ramified_count = 10;
  spec.pool_limit = 50;
  spec.sign = -1;
  spec.top_k = 5;
  return spec;
}

}  // namespace

TEST_CASE("exhaustive search finds the optimal ten-prime radicand") {
  const SearchOutcome outcome = search_quadratic(zykin_spec());
  CHECK(outcome.exhaustive);
  CHECK(outcome.candidates_examined == 286);  // C(13, 10)
  REQUIRE(!outcome.hits.empty());
  const SearchHit& top = outcome.hits.front();
  CHECK(top.seed.ramified_primes ==
        std::vector<std::uint64_t>{5, 7, 11, 13, 17, 19, 23, 29, 31, 37});
  CHECK(top.value == doctest::Approx(-0.1784907).epsilon(1e-6));
  CHECK(std::abs(top.value - (-0.17849)) <= 2e-5);
  CHECK(top.feasible);
  CHECK(top.congruences_ok);
}

TEST_CASE("hits are sorted ascending and re-validate") {
  const SearchOutcome outcome = search_quadratic(zykin_spec());
  double prev = -1e300;
  for (const SearchHit& hit : outcome.hits) {
    CHECK(hit.value >= prev);
    prev = hit.value;
    // congruences and splitting re-checked through the towers module
    for (std::uint64_t p : hit.seed.split_primes) CHECK(split_ok(hit.seed, p));
    CHECK(tower_feasible(static_cast<unsigned>(hit.seed.ramified_primes.size()),
                         static_cast<unsigned>(hit.seed.split_primes.size())));
    const TowerSeed tower = tower_seed_from_quadratic(hit.seed, hit.seed.split_primes.empty()
                                                                    ? "hit"
                                                                    : "hit-with-splits");
    CHECK(evaluate_seed(tower, Objective::gamma()) ==
          doctest::Approx(hit.value).epsilon(1e-12));
  }
}

TEST_CASE("enlarging the pool never worsens the best value") {
  SearchSpec small = zykin_spec();
  SearchSpec large = zykin_spec();
  large.pool_limit = 80;
  const double best_small = search_quadratic(small).hits.front().value;
  const double best_large = search_quadratic(large).hits.front().value;
  CHECK(best_large <= best_small + 1e-15);
}

TEST_CASE("the smallest admissible log-sum is the winner") {
  SearchSpec spec;
  spec.split_primes = {2};
  spec.ramified_count = 9;
  spec.pool_limit = 40;
  spec.sign = -1;
  spec.top_k = 100;  // keep everything that passes
  const SearchOutcome outcome = search_quadratic(spec);
  REQUIRE(!outcome.hits.empty());
  // independent check: no passing hit has a smaller ramified log-sum than the top
  auto log_sum = [](const SearchHit& hit) {
    double s = 0.0;
    for (std::uint64_t p : hit.seed.ramified_primes) s += std::log(static_cast<double>(p));
    return s;
  };
  const double top = log_sum(outcome.hits.front());
  for (const SearchHit& hit : outcome.hits) CHECK(log_sum(hit) >= top - 1e-12);
}

TEST_CASE("best-first path agrees with the exhaustive result") {
  // pool 1000 blows past the exhaustive limit (C(156, 10) ~ 1e14); the
  // best-first walk must still surface the same top radicand
  SearchSpec spec = zykin_spec();
  spec.pool_limit = 1000;
  spec.top_k = 3;
  const SearchOutcome outcome = search_quadratic(spec);
  CHECK(!outcome.exhaustive);
  REQUIRE(!outcome.hits.empty());
  CHECK(outcome.hits.front().seed.ramified_primes ==
        std::vector<std::uint64_t>{5, 7, 11, 13, 17, 19, 23, 29, 31, 37});
  CHECK(outcome.hits.front().value == doctest::Approx(-0.1784907).epsilon(1e-6));
  CHECK(outcome.hits.size() == 3);
}

TEST_CASE("wider split sets reach the published records") {
  // {2,3,5} split, 12 ramified primes from the pool below 80: the candidate
  // set contains the known -0.1737 radicand, so the best must be at least
  // that good
  SearchSpec spec;
  spec.split_primes = {2, 3, 5};
  spec.ramified_count = 12;
  spec.pool_limit = 80;
  spec.sign = -1;
  spec.top_k = 1;
  const SearchOutcome a = search_quadratic(spec);
  REQUIRE(!a.hits.empty());
  CHECK(a.hits.front().value <= -0.1737);

  // {2,3,5,7,11} split, 15 ramified: contains the known -0.1635 radicand
  spec.split_primes = {2, 3, 5, 7, 11};
  spec.ramified_count = 15;
  spec.top_k = 1;
  const SearchOutcome b = search_quadratic(spec);
  REQUIRE(!b.hits.empty());
  CHECK(b.hits.front().value <= -0.1635);
}

TEST_CASE("search diagnostics are recorded") {
  const SearchOutcome outcome = search_quadratic(zykin_spec());
  CHECK(outcome.candidates_examined > 0);
  CHECK(outcome.congruence_rejections > 0);
  CHECK(outcome.congruence_rejections < outcome.candidates_examined);
}

TEST_CASE("infeasible specs are rejected with an explanation") {
  SearchSpec spec;
  spec.split_primes = {};
  spec.ramified_count = 5;  // 4 < 2 + 2*sqrt(2)
  spec.pool_limit = 50;
  CHECK_THROWS_AS(search_quadratic(spec), std::invalid_argument);

  SearchSpec tiny = zykin_spec();
  tiny.pool_limit = 20;  // only 6 admissible primes for t = 10
  CHECK_THROWS_AS(search_quadratic(tiny), std::invalid_argument);

  SearchSpec bad_sign = zykin_spec();
  bad_sign.sign = 2;
  CHECK_THROWS_AS(search_quadratic(bad_sign), std::invalid_argument);
}

TEST_CASE("top_k bounds the hit list") {
  SearchSpec spec = zykin_spec();
  spec.top_k = 2;
  CHECK(search_quadratic(spec).hits.size() == 2);
}
