#ifndef EKBOUNDS_TOWERS_HPP
#define EKBOUNDS_TOWERS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ekbounds/phi.hpp"

// Explicit families: a base field with an infinite unramified tower in which
// chosen primes split totally.  Along such a tower both the place counts and
// alpha scale with the degree, so the tower's phi-data is just the base
// field's place counts divided by alpha of the base.  Evaluating the limit
// on that phi-data yields an upper bound for liminf gamma_K/alpha_K.

namespace ekbounds {

// A quadratic base field Q(sqrt(sign * product(ramified_primes))) with a set
// of primes required to split totally.  Radicands are restricted to odd
// squarefree d = sign*prod = 1 (mod 4), so the discriminant equals the
// radicand; seeds that would pick up the factor 4 are rejected.
struct QuadraticSeed {
  int sign = -1;  // +1 or -1
  std::vector<std::uint64_t> ramified_primes;  // ascending, odd, distinct
  std::vector<std::uint64_t> split_primes;     // ascending, disjoint from ramified
};

struct SplitPlace {
  std::uint64_t norm = 0;  // prime power q
  unsigned count = 0;

  friend bool operator==(const SplitPlace&, const SplitPlace&) = default;
};

enum class SeedProvenance { QuadraticDerived, External };

struct TowerSeed {
  std::string label;
  double alpha = 0.0;  // log sqrt|d| of the base field, natural log
  unsigned r1 = 0;
  unsigned r2 = 0;
  std::vector<SplitPlace> split_places;
  SeedProvenance provenance = SeedProvenance::External;
  std::string source;
};

struct DiscriminantAlpha {
  std::string d_description;  // e.g. "-(5*7*11*...*37)"
  double alpha = 0.0;
};

// alpha = (1/2) sum log p over the ramified primes; validates the seed and
// the d = 1 (mod 4) congruence (mod 8 when 2 must split is checked by
// split_ok, not here).
DiscriminantAlpha discriminant_alpha(const QuadraticSeed& seed);

// Total splitting test: d = 1 (mod 8) for p = 2, Legendre(d|p) = 1 for odd
// p, by Euler's criterion with 64-bit modular exponentiation.  p must not be
// ramified.
bool split_ok(const QuadraticSeed& seed, std::uint64_t p);

// Builds the tower seed: checks congruences and all required splittings,
// then records (p, 2) per split prime and r1/r2 from the sign.
TowerSeed tower_seed_from_quadratic(const QuadraticSeed& seed, std::string label,
                                    std::string source = {});

// phi_q = count/alpha per split place, phi_R = r1/alpha, phi_C = r2/alpha.
PhiVector tower_phi(const TowerSeed& seed);

double evaluate_seed(const TowerSeed& seed, const Objective& objective);

// Sufficient condition for an infinite 2-class tower over a quadratic field
// with t ramified primes and s prescribed split primes.  The default is a
// genus-theory rank bound against a Golod-Shafarevich-type threshold with s
// extra relations:  t - 1 - s >= 2 + 2*sqrt(s + 2).  The criterion in the
// literature is stronger in places; the predicate is configurable and
// bundled seeds are marked known-feasible by provenance, not by this test.
struct FeasibilityConfig {
  std::function<bool(unsigned t, unsigned s)> predicate;
  static FeasibilityConfig standard();
};

bool tower_feasible(unsigned ramified_count, unsigned split_count,
                    const FeasibilityConfig& config = FeasibilityConfig::standard());

// --- seed file IO ------------------------------------------------------
//
// JSON array of records:
//   {"label": str, "kind": "quadratic"|"external", "source": str,
//    "sign": int, "ramified_primes": [int], "split_primes": [int],   (quadratic)
//    "alpha": real, "r1": int, "r2": int,
//    "split_places": [{"norm": int, "count": int}]}                   (external)

struct SeedRecord {
  std::string label;
  std::string source;
  std::optional<QuadraticSeed> quadratic;  // present for quadratic records
  TowerSeed seed;
};

struct SeedRecordError {
  std::size_t index = 0;
  std::string label;
  std::string message;
};

struct SeedFile {
  std::vector<SeedRecord> records;
  std::vector<SeedRecordError> record_errors;  // semantic failures, per record
};

// Structural problems (unreadable file, bad JSON, wrong field types) throw
// std::runtime_error with record context; semantic problems (congruence or
// splitting failures) land in record_errors and leave other records intact.
SeedFile parse_seed_records(const std::string& json_text);
SeedFile load_seed_file(const std::string& path);

std::string seed_records_to_json(const std::vector<SeedRecord>& records);

// The seven bundled tower records (five quadratic fields plus the Martinet
// and Hajir-Maire constructions), identical to data/tower_seeds.json.
const std::vector<SeedRecord>& bundled_seeds();

}  // namespace ekbounds

#endif  // EKBOUNDS_TOWERS_HPP
