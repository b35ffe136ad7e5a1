#ifndef EKBOUNDS_SEARCH_HPP
#define EKBOUNDS_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "ekbounds/towers.hpp"

// Searches for quadratic seeds with prescribed split primes that minimize
// the Theorem-5 ratio.  With the split set fixed, the objective numerator is
// constant and the value is -c / (sum log p / 2) over the ramified set, so
// minimizing the radicand's log-sum is optimal; congruence and splitting
// conditions are the only obstructions.

namespace ekbounds {

struct SearchSpec {
  std::vector<std::uint64_t> split_primes;
  unsigned ramified_count = 0;  // t
  std::uint64_t pool_limit = 0;
  int sign = -1;
  unsigned top_k = 10;
  FeasibilityConfig predicate = FeasibilityConfig::standard();
};

struct SearchHit {
  QuadraticSeed seed;
  double value = 0.0;  // evaluate_seed under the gamma objective
  bool feasible = false;
  bool congruences_ok = false;
};

struct SearchOutcome {
  std::vector<SearchHit> hits;  // ascending by value
  bool exhaustive = false;
  std::uint64_t candidates_examined = 0;
  std::uint64_t congruence_rejections = 0;
};

// Enumerates t-subsets of the odd primes <= pool_limit (split primes
// excluded), keeps the seeds passing congruence, splitting and feasibility
// checks, and returns the top_k by value.  Exhaustive when C(pool, t) <=
// 10^7, otherwise a best-first walk in increasing radicand log-sum order,
// which visits candidates in exactly ascending value order.
SearchOutcome search_quadratic(const SearchSpec& spec);

}  // namespace ekbounds

#endif  // EKBOUNDS_SEARCH_HPP
