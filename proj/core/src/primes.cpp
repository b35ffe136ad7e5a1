#include "ekbounds/primes.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace ekbounds {

namespace {

constexpr std::size_t kSegmentSize = 1 << 16;

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  if (limit > kMaxSieveLimit)
    throw std::overflow_error("primes_up_to: limit exceeds sieve capacity 10^8");
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;

  // small primes <= sqrt(limit) by a plain sieve
  const std::uint64_t root = isqrt_u64(limit);
  std::vector<char> small(root + 1, 1);
  for (std::uint64_t i = 2; i * i <= root; ++i)
    if (small[i])
      for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i)
    if (small[i]) base.push_back(i);

  primes.reserve(static_cast<std::size_t>(
      limit > 16 ? 1.2 * static_cast<double>(limit) / std::log(static_cast<double>(limit)) : 8));

  std::vector<char> segment(kSegmentSize);
  for (std::uint64_t low = 2; low <= limit; low += kSegmentSize) {
    const std::uint64_t high = std::min(low + kSegmentSize - 1, limit);
    std::fill(segment.begin(), segment.end(), 1);
    for (std::uint64_t p : base) {
      if (p * p > high) break;
      std::uint64_t start = std::max(p * p, ((low + p - 1) / p) * p);
      for (std::uint64_t j = start; j <= high; j += p) segment[j - low] = 0;
    }
    for (std::uint64_t n = low; n <= high; ++n)
      if (segment[n - low]) primes.push_back(n);
  }
  return primes;
}

std::shared_ptr<const std::vector<std::uint64_t>> cached_primes(std::uint64_t limit) {
  static std::mutex mu;
  static std::shared_ptr<const std::vector<std::uint64_t>> cache;
  static std::uint64_t cache_limit = 0;

  std::lock_guard<std::mutex> lock(mu);
  if (!cache || cache_limit < limit) {
    // Grow geometrically so repeated sweeps do not re-sieve.
    std::uint64_t target = std::max<std::uint64_t>(limit, 1 << 20);
    if (cache_limit > 0) target = std::max(target, cache_limit * 2);
    target = std::min(target, kMaxSieveLimit);
    if (target < limit)
      throw std::overflow_error("cached_primes: limit exceeds sieve capacity 10^8");
    cache = std::make_shared<const std::vector<std::uint64_t>>(primes_up_to(target));
    cache_limit = target;
  }
  return cache;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimePower make_prime_power(std::uint64_t p, unsigned m) {
  if (m < 1) throw std::domain_error("make_prime_power: exponent must be >= 1");
  if (!is_prime(p)) throw std::domain_error("make_prime_power: base is not prime");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > kMaxPrimePower / p)
      throw std::overflow_error("make_prime_power: p^m exceeds 2^62");
    q *= p;
  }
  return PrimePower{p, m, q};
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2 || q > kMaxPrimePower) return std::nullopt;
  // find the smallest prime divisor
  std::uint64_t p = 0;
  if (q % 2 == 0) {
    p = 2;
  } else {
    for (std::uint64_t d = 3; d * d <= q; d += 2)
      if (q % d == 0) {
        p = d;
        break;
      }
    if (p == 0) return PrimePower{q, 1, q};  // q itself is prime
  }
  unsigned m = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, m, q};
}

std::vector<PrimePower> prime_powers(std::uint64_t limit_q, unsigned m_max) {
  if (limit_q > kMaxPrimePower)
    throw std::overflow_error("prime_powers: limit exceeds 2^62 capacity");
  if (limit_q < 2 || m_max < 1)
    throw std::invalid_argument("prime_powers: need limit_q >= 2 and m_max >= 1");

  std::vector<PrimePower> out;
  for (std::uint64_t p : primes_up_to(limit_q)) {
    std::uint64_t q = p;
    for (unsigned m = 1; m <= m_max && q <= limit_q; ++m) {
      out.push_back(PrimePower{p, m, q});
      if (q > limit_q / p) break;  // next power would overflow the limit
      q *= p;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.q < b.q; });
  return out;
}

}  // namespace ekbounds
