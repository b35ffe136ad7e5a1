#include "ekbounds/search.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>
#include <stdexcept>
#include <thread>

namespace ekbounds {

namespace {

constexpr std::uint64_t kExhaustiveLimit = 10'000'000;
constexpr std::uint64_t kBestFirstPopCap = 2'000'000;

// C(n, t) saturating at kExhaustiveLimit + 1.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t t) {
  if (t > n) return 0;
  t = std::min(t, n - t);
  double c = 1.0;
  for (std::uint64_t i = 1; i <= t; ++i) {
    c *= static_cast<double>(n - t + i) / static_cast<double>(i);
    if (c > static_cast<double>(kExhaustiveLimit) + 1.0)
      return kExhaustiveLimit + 1;
  }
  return static_cast<std::uint64_t>(c + 0.5);
}

// Candidate key: radicand log-sum first (which orders values), then the
// prime tuple for determinism under floating-point ties.
using CandidateKey = std::pair<double, std::vector<std::uint64_t>>;

struct CandidateChecker {
  int sign;
  std::vector<std::uint64_t> split_primes;
  bool need_mod8;  // 2 in split_primes

  // Allocation-free congruence + splitting test; mirrors split_ok.
  bool passes(const std::vector<std::uint64_t>& ramified) const {
    std::uint64_t mod = 1;
    for (std::uint64_t p : ramified) mod = (mod * (p % 8)) % 8;
    if (sign < 0) mod = (8 - mod) % 8;
    if (need_mod8 ? (mod != 1) : (mod % 4 != 1)) return false;
    for (std::uint64_t q : split_primes) {
      if (q == 2) continue;  // covered by the mod-8 test
      std::uint64_t a = 1 % q;
      for (std::uint64_t p : ramified) a = mul_mod(a, p % q, q);
      if (sign < 0) a = (q - a) % q;
      if (a == 0 || pow_mod(a, (q - 1) / 2, q) != 1) return false;
    }
    return true;
  }
};

struct LocalTop {
  std::set<CandidateKey> best;
  std::uint64_t examined = 0;
  std::uint64_t congruence_rejections = 0;

  void offer(const CandidateChecker& checker, unsigned top_k,
             const std::vector<std::uint64_t>& ramified, double sum_logs) {
    ++examined;
    if (!checker.passes(ramified)) {
      ++congruence_rejections;
      return;
    }
    if (top_k == 0) return;
    if (best.size() == top_k && !(CandidateKey{sum_logs, ramified} < *best.rbegin())) return;
    best.insert({sum_logs, ramified});
    if (best.size() > top_k) best.erase(std::prev(best.end()));
  }
};

// Lexicographic enumeration of t-subsets of pool with a fixed first index.
LocalTop enumerate_partition(const CandidateChecker& checker, unsigned top_k,
                             const std::vector<std::uint64_t>& pool,
                             const std::vector<double>& pool_logs, std::size_t first,
                             unsigned t) {
  LocalTop local;
  std::vector<std::size_t> idx(t);
  idx[0] = first;
  for (unsigned j = 1; j < t; ++j) idx[j] = first + j;
  if (idx.back() >= pool.size()) return local;

  std::vector<std::uint64_t> ramified(t);
  while (true) {
    double sum_logs = 0.0;
    for (unsigned j = 0; j < t; ++j) {
      ramified[j] = pool[idx[j]];
      sum_logs += pool_logs[idx[j]];
    }
    local.offer(checker, top_k, ramified, sum_logs);

    // advance indices 1..t-1 (index 0 is the partition)
    int j = static_cast<int>(t) - 1;
    while (j >= 1 && idx[j] == pool.size() - (t - j)) --j;
    if (j < 1) break;
    ++idx[j];
    for (unsigned k = j + 1; k < t; ++k) idx[k] = idx[k - 1] + 1;
  }
  return local;
}

SearchHit make_hit(const SearchSpec& spec, const std::vector<std::uint64_t>& ramified) {
  SearchHit hit;
  hit.seed = QuadraticSeed{spec.sign, ramified, spec.split_primes};
  const TowerSeed tower = tower_seed_from_quadratic(hit.seed, "search-hit");
  hit.value = evaluate_seed(tower, Objective::gamma());
  hit.feasible = tower_feasible(static_cast<unsigned>(ramified.size()),
                                static_cast<unsigned>(spec.split_primes.size()), spec.predicate);
  hit.congruences_ok = true;
  return hit;
}

}  // namespace

SearchOutcome search_quadratic(const SearchSpec& spec) {
  if (spec.sign != 1 && spec.sign != -1)
    throw std::invalid_argument("search_quadratic: sign must be +1 or -1");
  if (spec.ramified_count < 1)
    throw std::invalid_argument("search_quadratic: ramified_count must be >= 1");
  const unsigned t = spec.ramified_count;
  const unsigned s = static_cast<unsigned>(spec.split_primes.size());

  if (!tower_feasible(t, s, spec.predicate))
    throw std::invalid_argument(
        "search_quadratic: the feasibility predicate rejects every candidate with t=" +
        std::to_string(t) + " ramified and s=" + std::to_string(s) + " split primes");

  // Candidate pool: odd primes <= pool_limit, split primes excluded.
  std::vector<std::uint64_t> pool;
  for (std::uint64_t p : *cached_primes(spec.pool_limit)) {
    if (p > spec.pool_limit) break;
    if (p == 2) continue;
    if (std::find(spec.split_primes.begin(), spec.split_primes.end(), p) !=
        spec.split_primes.end())
      continue;
    pool.push_back(p);
  }
  if (pool.size() < t)
    throw std::invalid_argument("search_quadratic: pool holds " + std::to_string(pool.size()) +
                                " admissible primes, need " + std::to_string(t));
  std::vector<double> pool_logs(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i)
    pool_logs[i] = std::log(static_cast<double>(pool[i]));

  const bool need_mod8 = std::find(spec.split_primes.begin(), spec.split_primes.end(), 2) !=
                         spec.split_primes.end();
  const CandidateChecker checker{spec.sign, spec.split_primes, need_mod8};

  SearchOutcome outcome;
  std::set<CandidateKey> best;

  const std::uint64_t space = binomial_capped(pool.size(), t);
  if (space <= kExhaustiveLimit) {
    outcome.exhaustive = true;
    const std::size_t partitions = pool.size() - t + 1;
    const bool parallel = space > 4096;
    const std::size_t wave = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    std::vector<LocalTop> locals;
    for (std::size_t base = 0; base < partitions; base += wave) {
      const std::size_t end = std::min(base + wave, partitions);
      if (parallel && end - base > 1) {
        std::vector<std::future<LocalTop>> futures;
        for (std::size_t first = base; first < end; ++first)
          futures.push_back(std::async(std::launch::async, enumerate_partition,
                                       std::cref(checker), spec.top_k, std::cref(pool),
                                       std::cref(pool_logs), first, t));
        for (auto& f : futures) locals.push_back(f.get());
      } else {
        for (std::size_t first = base; first < end; ++first)
          locals.push_back(enumerate_partition(checker, spec.top_k, pool, pool_logs, first, t));
      }
    }
    // deterministic reduction: merge local tops, keep the global top_k
    for (LocalTop& local : locals) {
      outcome.candidates_examined += local.examined;
      outcome.congruence_rejections += local.congruence_rejections;
      for (const CandidateKey& key : local.best) {
        best.insert(key);
        if (best.size() > spec.top_k) best.erase(std::prev(best.end()));
      }
    }
  } else {
    // Best-first walk in increasing log-sum order: pops arrive in ascending
    // value order, so the first top_k passing candidates are the answer.
    outcome.exhaustive = false;
    std::set<std::pair<double, std::vector<std::size_t>>> frontier;
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> start(t);
    double start_sum = 0.0;
    for (unsigned j = 0; j < t; ++j) {
      start[j] = j;
      start_sum += pool_logs[j];
    }
    frontier.insert({start_sum, start});
    seen.insert(start);
    std::uint64_t pops = 0;
    while (!frontier.empty() && best.size() < spec.top_k && pops < kBestFirstPopCap) {
      auto [sum_logs, idx] = *frontier.begin();
      frontier.erase(frontier.begin());
      ++pops;
      ++outcome.candidates_examined;

      std::vector<std::uint64_t> ramified(t);
      for (unsigned j = 0; j < t; ++j) ramified[j] = pool[idx[j]];
      if (checker.passes(ramified))
        best.insert({sum_logs, ramified});
      else
        ++outcome.congruence_rejections;

      for (unsigned j = 0; j < t; ++j) {
        const std::size_t next = idx[j] + 1;
        if (next >= pool.size()) continue;
        if (j + 1 < t && next >= idx[j + 1]) continue;
        std::vector<std::size_t> succ = idx;
        succ[j] = next;
        if (seen.insert(succ).second)
          frontier.insert({sum_logs - pool_logs[idx[j]] + pool_logs[next], succ});
      }
    }
  }

  for (const CandidateKey& key : best) outcome.hits.push_back(make_hit(spec, key.second));
  return outcome;
}

}  // namespace ekbounds
