#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>

#include "ekbounds/towers.hpp"
#include "oracles.hpp"

using namespace ekbounds;

namespace {

QuadraticSeed zykin_seed() {
  return {-1, {5, 7, 11, 13, 17, 19, 23, 29, 31, 37}, {2, 3}};
}

const SeedRecord& bundled(const std::string& label) {
  for (const SeedRecord& record : bundled_seeds())
    if (record.label == label) return record;
  REQUIRE(false);
  std::abort();
}

}  // namespace

TEST_CASE("discriminant alpha on the bundled radicands") {
  CHECK(discriminant_alpha(zykin_seed()).alpha == doctest::Approx(13.9217700890).epsilon(1e-9));
  QuadraticSeed real_seed{+1, {11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67},
                          {2, 3, 5, 7}};
  CHECK(discriminant_alpha(real_seed).alpha == doctest::Approx(25.9882538708).epsilon(1e-9));
  QuadraticSeed third{-1, {7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 79}, {2, 3, 5}};
  CHECK(discriminant_alpha(third).alpha == doctest::Approx(19.0391611502).epsilon(1e-9));
  CHECK(discriminant_alpha(zykin_seed()).d_description == "-(5*7*11*13*17*19*23*29*31*37)");
}

TEST_CASE("congruence failures are split by cause") {
  // d = 7 = 3 (mod 4) and 2 is required to split: congruence error
  CHECK_THROWS_WITH_AS(discriminant_alpha(QuadraticSeed{+1, {7}, {2}}),
                       doctest::Contains("2 cannot split"), std::domain_error);
  // d = -5 = 3 (mod 4), no demand on 2: unsupported seed shape
  CHECK_THROWS_WITH_AS(discriminant_alpha(QuadraticSeed{-1, {5}, {}}),
                       doctest::Contains("4*radicand"), std::domain_error);
}

TEST_CASE("seed validation") {
  CHECK_THROWS_AS(discriminant_alpha(QuadraticSeed{-1, {7, 7}, {}}), std::domain_error);
  CHECK_THROWS_AS(discriminant_alpha(QuadraticSeed{-1, {9}, {}}), std::domain_error);
  CHECK_THROWS_AS(discriminant_alpha(QuadraticSeed{-1, {2, 7}, {}}), std::domain_error);
  CHECK_THROWS_AS(discriminant_alpha(QuadraticSeed{-1, {7, 11}, {7}}), std::domain_error);
  CHECK_THROWS_AS(discriminant_alpha(QuadraticSeed{0, {7}, {}}), std::domain_error);
}

TEST_CASE("splitting rules on the zykin field") {
  const QuadraticSeed seed = zykin_seed();
  CHECK(split_ok(seed, 2));
  CHECK(split_ok(seed, 3));
  CHECK_THROWS_AS(split_ok(seed, 5), std::domain_error);  // ramified
}

TEST_CASE("two is inert when d = 5 mod 8") {
  const QuadraticSeed seed{-1, {11}, {}};  // d = -11 = 5 (mod 8), = 1 (mod 4)
  CHECK(!split_ok(seed, 2));
}

TEST_CASE("split_ok agrees with exhaustive square search") {
  for (const char* label : {"zykin", "real-split-2-3-5-7", "imag-split-2-3-5-a"}) {
    const SeedRecord& record = bundled(label);
    REQUIRE(record.quadratic);
    const QuadraticSeed& seed = *record.quadratic;
    for (std::uint64_t p : oracles::trial_division_primes(10000)) {
      if (p == 2) continue;
      bool ramified = false;
      for (std::uint64_t r : seed.ramified_primes) ramified |= (r == p);
      if (ramified) continue;
      // reduce the signed radicand mod p factor by factor (the full product
      // overflows 64 bits for the 15-prime records)
      std::uint64_t r = 1;
      for (std::uint64_t q : seed.ramified_primes) r = (r * (q % p)) % p;
      if (seed.sign < 0) r = (p - r) % p;
      CHECK(split_ok(seed, p) == oracles::is_square_mod(static_cast<std::int64_t>(r), p));
    }
  }
}

TEST_CASE("tower seed from the zykin field") {
  const TowerSeed seed = tower_seed_from_quadratic(zykin_seed(), "zykin");
  CHECK(seed.alpha == doctest::Approx(13.9217700890).epsilon(1e-9));
  CHECK(seed.r1 == 0);
  CHECK(seed.r2 == 1);
  REQUIRE(seed.split_places.size() == 2);
  CHECK(seed.split_places[0] == SplitPlace{2, 2});
  CHECK(seed.split_places[1] == SplitPlace{3, 2});
  CHECK(seed.provenance == SeedProvenance::QuadraticDerived);
}

TEST_CASE("non-splitting demand is rejected with context") {
  // find a prime that does not split and demand it
  QuadraticSeed seed = zykin_seed();
  std::uint64_t inert = 0;
  for (std::uint64_t p : {41ull, 43ull, 47ull, 53ull, 59ull, 61ull})
    if (!split_ok(seed, p)) {
      inert = p;
      break;
    }
  REQUIRE(inert != 0);
  seed.split_primes.push_back(inert);
  CHECK_THROWS_WITH_AS(tower_seed_from_quadratic(seed, "bad"),
                       doctest::Contains(std::to_string(inert).c_str()), std::domain_error);
}

TEST_CASE("tower phi of the zykin seed") {
  const PhiVector phi = tower_phi(bundled("zykin").seed);
  CHECK(phi.mass(2) == doctest::Approx(0.1436598929).epsilon(1e-9));
  CHECK(phi.mass(3) == phi.mass(2));
  CHECK(phi.phi_c() == doctest::Approx(0.0718299465).epsilon(1e-9));
  CHECK(phi.phi_r() == 0.0);
  // within the looser published rounding as well
  CHECK(std::abs(phi.mass(2) - 0.1436597) <= 1e-6);
}

TEST_CASE("tower phi of the martinet record") {
  const PhiVector phi = tower_phi(bundled("martinet").seed);
  CHECK(phi.finite_masses().empty());
  CHECK(phi.phi_c() == doctest::Approx(0.2209563584).epsilon(1e-8));
}

TEST_CASE("degenerate seed with no split places") {
  TowerSeed seed;
  seed.alpha = 4.0;
  seed.r1 = 2;
  const PhiVector phi = tower_phi(seed);
  CHECK(phi.finite_masses().empty());
  CHECK(phi.phi_r() == 0.5);
  CHECK(phi.phi_c() == 0.0);
}

TEST_CASE("bundled records reproduce the reference bounds") {
  struct Expect {
    const char* label;
    double frozen;
    double reference;
    double tolerance;
    bool tilde;
  };
  const Expect expected[] = {
      {"real-split-2-3-5-7", -0.1515401, -0.1515, 2e-4, false},
      {"imag-split-2-3-5-7-11", -0.1635213, -0.1635, 2e-4, false},
      {"imag-split-2-3-5-a", -0.1727821, -0.1727, 2e-4, false},
      {"imag-split-2-3-5-b", -0.1737080, -0.1737, 2e-4, false},
      {"zykin", -0.1784907, -0.17849, 2e-5, false},
      {"martinet", -0.5336301, -0.5336, 1e-3, true},
      {"hajir-maire", -0.5478963, -0.5478, 1e-3, true},
  };
  for (const Expect& e : expected) {
    const double v = evaluate_seed(bundled(e.label).seed,
                                   e.tilde ? Objective::gamma_tilde() : Objective::gamma());
    CAPTURE(e.label);
    CHECK(v == doctest::Approx(e.frozen).epsilon(1e-6));
    CHECK(std::abs(v - e.reference) <= e.tolerance);
  }
}

TEST_CASE("quadratic records match the direct ratio formula") {
  for (const SeedRecord& record : bundled_seeds()) {
    if (!record.quadratic) continue;
    double split_sum = 0.0;
    for (std::uint64_t p : record.quadratic->split_primes)
      split_sum += 2.0 * std::log(static_cast<double>(p)) / (static_cast<double>(p) - 1.0);
    double ram_sum = 0.0;
    for (std::uint64_t p : record.quadratic->ramified_primes)
      ram_sum += std::log(static_cast<double>(p));
    const double expected = -split_sum / (0.5 * ram_sum);
    CHECK(evaluate_seed(record.seed, Objective::gamma()) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("adding places or ramification moves the bound the right way") {
  const TowerSeed base = bundled("zykin").seed;
  const double v = evaluate_seed(base, Objective::gamma());

  TowerSeed more_split = base;
  more_split.split_places.push_back({5, 2});
  CHECK(evaluate_seed(more_split, Objective::gamma()) < v);

  TowerSeed more_ramified = base;
  more_ramified.alpha += 0.5 * std::log(41.0);
  CHECK(evaluate_seed(more_ramified, Objective::gamma()) > v);
}

TEST_CASE("feasibility predicate") {
  CHECK(tower_feasible(10, 2));
  CHECK(tower_feasible(15, 5));
  CHECK(tower_feasible(15, 4));
  CHECK(!tower_feasible(5, 0));
  CHECK(!tower_feasible(8, 4));  // 3 < 2 + 2*sqrt(6)

  FeasibilityConfig always;
  always.predicate = [](unsigned, unsigned) { return true; };
  CHECK(tower_feasible(1, 5, always));
  CHECK_THROWS_AS(tower_feasible(0, 0), std::invalid_argument);
}

TEST_CASE("bundled file and embedded records are the same dataset") {
  const char* dir = std::getenv("EKBOUNDS_DATA_DIR");
  REQUIRE(dir != nullptr);
  const SeedFile file = load_seed_file(std::string(dir) + "/tower_seeds.json");
  CHECK(file.record_errors.empty());
  CHECK(seed_records_to_json(file.records) == seed_records_to_json(bundled_seeds()));
}

TEST_CASE("seed json round trip") {
  const std::string text = seed_records_to_json(bundled_seeds());
  const SeedFile parsed = parse_seed_records(text);
  CHECK(parsed.record_errors.empty());
  CHECK(seed_records_to_json(parsed.records) == text);
}

TEST_CASE("structural seed file errors throw") {
  CHECK_THROWS_AS(parse_seed_records("{"), std::runtime_error);
  CHECK_THROWS_AS(parse_seed_records("{\"a\": 1}"), std::runtime_error);
  CHECK_THROWS_AS(parse_seed_records("[{\"label\": \"x\"}]"), std::runtime_error);
  CHECK_THROWS_AS(parse_seed_records("[{\"label\": \"x\", \"kind\": \"weird\"}]"),
                  std::runtime_error);
  CHECK_THROWS_AS(
      parse_seed_records("[{\"label\": \"x\", \"kind\": \"quadratic\", \"sign\": -1, "
                         "\"ramified_primes\": [7, \"oops\"], \"split_primes\": []}]"),
      std::runtime_error);
  CHECK_THROWS_AS(load_seed_file("/nonexistent/seeds.json"), std::runtime_error);
}

TEST_CASE("semantic record errors keep the rest of the file") {
  // second record demands 2 split although d = -11 = 5 (mod 8)
  const std::string text = R"([
    {"label": "good", "kind": "quadratic", "sign": -1,
     "ramified_primes": [5, 7, 11, 13, 17, 19, 23, 29, 31, 37], "split_primes": [2, 3]},
    {"label": "bad-mod8", "kind": "quadratic", "sign": -1,
     "ramified_primes": [11], "split_primes": [2]},
    {"label": "bad-alpha", "kind": "external", "alpha": -1.0, "r2": 1},
    {"label": "bad-norm", "kind": "external", "alpha": 2.5, "r2": 1,
     "split_places": [{"norm": 6, "count": 1}]}
  ])";
  const SeedFile file = parse_seed_records(text);
  REQUIRE(file.records.size() == 1);
  CHECK(file.records[0].label == "good");
  REQUIRE(file.record_errors.size() == 3);
  CHECK(file.record_errors[0].index == 1);
  CHECK(file.record_errors[0].label == "bad-mod8");
  CHECK(file.record_errors[1].index == 2);
  CHECK(file.record_errors[2].index == 3);
}
