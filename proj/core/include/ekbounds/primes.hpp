#ifndef EKBOUNDS_PRIMES_HPP
#define EKBOUNDS_PRIMES_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace ekbounds {

// Largest admissible prime power; anything above risks 64-bit overflow in
// downstream arithmetic.
inline constexpr std::uint64_t kMaxPrimePower = std::uint64_t{1} << 62;

// Sieve capacity.  Unconditional sweeps need primes up to 10^6-10^8; beyond
// that is out of scope for this artifact.
inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;

// A prime power q = p^m with the factorization kept alongside the value.
struct PrimePower {
  std::uint64_t p = 0;
  unsigned m = 0;
  std::uint64_t q = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Checked constructor: verifies p prime, m >= 1, and p^m <= 2^62.
PrimePower make_prime_power(std::uint64_t p, unsigned m);

// All primes <= limit, ascending, by segmented sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// Process-wide prime cache.  Returns a snapshot covering at least `limit`;
// the snapshot is immutable, so it is safe to use from any thread while the
// cache grows behind it.
std::shared_ptr<const std::vector<std::uint64_t>> cached_primes(std::uint64_t limit);

bool is_prime(std::uint64_t n);

// 64-bit modular arithmetic (128-bit intermediate product).
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Factors q as p^m if q is a prime power, otherwise nullopt.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

// All prime powers p^m <= limit_q with m <= m_max, sorted ascending by q.
std::vector<PrimePower> prime_powers(std::uint64_t limit_q, unsigned m_max);

}  // namespace ekbounds

#endif  // EKBOUNDS_PRIMES_HPP
