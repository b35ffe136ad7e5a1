#include "ekbounds/towers.hpp"

#include <cmath>
#include <stdexcept>

namespace ekbounds {

namespace {

// d mod m for d = sign * product(ramified), without forming the product.
std::uint64_t signed_radicand_mod(const QuadraticSeed& seed, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  for (std::uint64_t p : seed.ramified_primes) r = mul_mod(r, p % m, m);
  if (seed.sign < 0) r = (m - r) % m;
  return r;
}

void check_seed(const QuadraticSeed& seed) {
  if (seed.sign != 1 && seed.sign != -1)
    throw std::domain_error("quadratic seed: sign must be +1 or -1");
  if (seed.ramified_primes.empty())
    throw std::domain_error("quadratic seed: need at least one ramified prime");
  std::uint64_t prev = 0;
  for (std::uint64_t p : seed.ramified_primes) {
    if (p <= prev) throw std::domain_error("quadratic seed: ramified primes must be ascending and distinct");
    if (p == 2) throw std::domain_error("quadratic seed: radicand must be odd (2 cannot ramify here)");
    if (!is_prime(p)) throw std::domain_error("quadratic seed: ramified entry is not prime");
    prev = p;
  }
  prev = 0;
  for (std::uint64_t p : seed.split_primes) {
    if (p <= prev) throw std::domain_error("quadratic seed: split primes must be ascending and distinct");
    if (!is_prime(p)) throw std::domain_error("quadratic seed: split entry is not prime");
    prev = p;
  }
  for (std::uint64_t p : seed.split_primes)
    for (std::uint64_t r : seed.ramified_primes)
      if (p == r) throw std::domain_error("quadratic seed: split and ramified primes overlap");
}

std::string radicand_description(const QuadraticSeed& seed) {
  std::string out = seed.sign < 0 ? "-(" : "+(";
  for (std::size_t i = 0; i < seed.ramified_primes.size(); ++i) {
    if (i) out += "*";
    out += std::to_string(seed.ramified_primes[i]);
  }
  out += ")";
  return out;
}

}  // namespace

DiscriminantAlpha discriminant_alpha(const QuadraticSeed& seed) {
  check_seed(seed);
  const std::uint64_t d_mod4 = signed_radicand_mod(seed, 4);
  if (d_mod4 != 1) {
    bool wants_2_split = false;
    for (std::uint64_t p : seed.split_primes) wants_2_split |= (p == 2);
    if (wants_2_split)
      throw std::domain_error("discriminant_alpha: radicand = 3 (mod 4), 2 cannot split");
    throw std::domain_error(
        "discriminant_alpha: radicand != 1 (mod 4); the discriminant would be 4*radicand, "
        "which this artifact does not model");
  }
  DiscriminantAlpha out;
  out.d_description = radicand_description(seed);
  double sum = 0.0;
  for (std::uint64_t p : seed.ramified_primes) sum += std::log(static_cast<double>(p));
  out.alpha = 0.5 * sum;
  return out;
}

bool split_ok(const QuadraticSeed& seed, std::uint64_t p) {
  for (std::uint64_t r : seed.ramified_primes)
    if (p == r) throw std::domain_error("split_ok: prime is ramified");
  if (!is_prime(p)) throw std::domain_error("split_ok: p is not prime");
  if (p == 2) return signed_radicand_mod(seed, 8) == 1;
  const std::uint64_t a = signed_radicand_mod(seed, p);
  if (a == 0) return false;  // cannot happen for p not ramified, radicand squarefree
  return pow_mod(a, (p - 1) / 2, p) == 1;  // Euler's criterion
}

TowerSeed tower_seed_from_quadratic(const QuadraticSeed& seed, std::string label,
                                    std::string source) {
  const DiscriminantAlpha da = discriminant_alpha(seed);
  for (std::uint64_t p : seed.split_primes)
    if (!split_ok(seed, p))
      throw std::domain_error("tower seed '" + label + "': prime " + std::to_string(p) +
                              " does not split in Q(sqrt(" + da.d_description + "))");
  TowerSeed out;
  out.label = std::move(label);
  out.alpha = da.alpha;
  out.r1 = seed.sign > 0 ? 2 : 0;
  out.r2 = seed.sign > 0 ? 0 : 1;
  for (std::uint64_t p : seed.split_primes) out.split_places.push_back({p, 2});
  out.provenance = SeedProvenance::QuadraticDerived;
  out.source = std::move(source);
  return out;
}

PhiVector tower_phi(const TowerSeed& seed) {
  if (!(seed.alpha > 0.0)) throw std::domain_error("tower_phi: alpha must be positive");
  PhiVector phi;
  for (const SplitPlace& place : seed.split_places)
    phi.add_mass(place.norm, static_cast<double>(place.count) / seed.alpha);
  phi.set_phi_r(static_cast<double>(seed.r1) / seed.alpha);
  phi.set_phi_c(static_cast<double>(seed.r2) / seed.alpha);
  return phi;
}

double evaluate_seed(const TowerSeed& seed, const Objective& objective) {
  return limit_value(tower_phi(seed), objective);
}

FeasibilityConfig FeasibilityConfig::standard() {
  FeasibilityConfig config;
  config.predicate = [](unsigned t, unsigned s) {
    return static_cast<double>(t) - 1.0 - static_cast<double>(s) >=
           2.0 + 2.0 * std::sqrt(static_cast<double>(s) + 2.0);
  };
  return config;
}

bool tower_feasible(unsigned ramified_count, unsigned split_count,
                    const FeasibilityConfig& config) {
  if (ramified_count < 1) throw std::invalid_argument("tower_feasible: need t >= 1");
  if (!config.predicate) throw std::invalid_argument("tower_feasible: empty predicate");
  return config.predicate(ramified_count, split_count);
}

}  // namespace ekbounds
