#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ekbounds/towers.hpp"

// Seed file format: a JSON array of tower records.  Structural problems
// throw; semantic problems (a prime that does not split, a bad congruence)
// are collected per record so one bad record does not sink the file.

namespace ekbounds {

namespace {

using ordered_json = nlohmann::ordered_json;

std::uint64_t get_u64(const ordered_json& j, const char* key, std::size_t index) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<std::int64_t>() < 0)
    throw std::runtime_error("seed record " + std::to_string(index) + ": field '" + key +
                             "' must be a nonnegative integer");
  return j[key].get<std::uint64_t>();
}

std::vector<std::uint64_t> get_u64_list(const ordered_json& j, const char* key,
                                        std::size_t index) {
  if (!j.contains(key) || !j[key].is_array())
    throw std::runtime_error("seed record " + std::to_string(index) + ": field '" + key +
                             "' must be an array of integers");
  std::vector<std::uint64_t> out;
  for (const auto& e : j[key]) {
    if (!e.is_number_integer() || e.get<std::int64_t>() < 0)
      throw std::runtime_error("seed record " + std::to_string(index) + ": field '" + key +
                               "' must contain nonnegative integers");
    out.push_back(e.get<std::uint64_t>());
  }
  return out;
}

SeedRecord parse_one(const ordered_json& j, std::size_t index) {
  if (!j.is_object())
    throw std::runtime_error("seed record " + std::to_string(index) + ": not a JSON object");
  if (!j.contains("label") || !j["label"].is_string())
    throw std::runtime_error("seed record " + std::to_string(index) + ": missing string 'label'");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw std::runtime_error("seed record " + std::to_string(index) + ": missing string 'kind'");

  SeedRecord record;
  record.label = j["label"].get<std::string>();
  record.source = j.value("source", std::string{});
  const std::string kind = j["kind"].get<std::string>();

  if (kind == "quadratic") {
    if (!j.contains("sign") || !j["sign"].is_number_integer())
      throw std::runtime_error("seed record " + std::to_string(index) +
                               ": quadratic record needs integer 'sign'");
    QuadraticSeed quad;
    quad.sign = j["sign"].get<int>();
    quad.ramified_primes = get_u64_list(j, "ramified_primes", index);
    quad.split_primes = get_u64_list(j, "split_primes", index);
    record.quadratic = quad;
    record.seed = tower_seed_from_quadratic(quad, record.label, record.source);
  } else if (kind == "external") {
    if (!j.contains("alpha") || !j["alpha"].is_number())
      throw std::runtime_error("seed record " + std::to_string(index) +
                               ": external record needs numeric 'alpha'");
    TowerSeed seed;
    seed.label = record.label;
    seed.source = record.source;
    seed.alpha = j["alpha"].get<double>();
    if (!(seed.alpha > 0.0))
      throw std::domain_error("external seed '" + record.label + "': alpha must be positive");
    seed.r1 = static_cast<unsigned>(j.contains("r1") ? get_u64(j, "r1", index) : 0);
    seed.r2 = static_cast<unsigned>(j.contains("r2") ? get_u64(j, "r2", index) : 0);
    if (j.contains("split_places")) {
      if (!j["split_places"].is_array())
        throw std::runtime_error("seed record " + std::to_string(index) +
                                 ": 'split_places' must be an array");
      for (const auto& e : j["split_places"]) {
        SplitPlace place;
        place.norm = get_u64(e, "norm", index);
        place.count = static_cast<unsigned>(get_u64(e, "count", index));
        if (place.count < 1)
          throw std::domain_error("external seed '" + record.label +
                                  "': split place count must be >= 1");
        seed.split_places.push_back(place);
      }
    }
    record.seed = seed;
    tower_phi(record.seed);  // validates place norms and alpha
  } else {
    throw std::runtime_error("seed record " + std::to_string(index) +
                             ": kind must be \"quadratic\" or \"external\"");
  }
  return record;
}

}  // namespace

SeedFile parse_seed_records(const std::string& json_text) {
  ordered_json root;
  try {
    root = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("seed file: JSON parse error: ") + e.what());
  }
  if (!root.is_array()) throw std::runtime_error("seed file: top level must be a JSON array");

  SeedFile out;
  for (std::size_t i = 0; i < root.size(); ++i) {
    try {
      out.records.push_back(parse_one(root[i], i));
    } catch (const std::domain_error& e) {
      const std::string label =
          root[i].is_object() && root[i].contains("label") && root[i]["label"].is_string()
              ? root[i]["label"].get<std::string>()
              : std::string{};
      out.record_errors.push_back({i, label, e.what()});
    }
  }
  return out;
}

SeedFile load_seed_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("seed file: cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_seed_records(buffer.str());
}

std::string seed_records_to_json(const std::vector<SeedRecord>& records) {
  ordered_json root = ordered_json::array();
  for (const SeedRecord& record : records) {
    ordered_json j;
    j["label"] = record.label;
    if (record.quadratic) {
      j["kind"] = "quadratic";
      j["sign"] = record.quadratic->sign;
      j["ramified_primes"] = record.quadratic->ramified_primes;
      j["split_primes"] = record.quadratic->split_primes;
    } else {
      j["kind"] = "external";
      j["alpha"] = record.seed.alpha;
      j["r1"] = record.seed.r1;
      j["r2"] = record.seed.r2;
      ordered_json places = ordered_json::array();
      for (const SplitPlace& place : record.seed.split_places)
        places.push_back({{"norm", place.norm}, {"count", place.count}});
      j["split_places"] = places;
    }
    j["source"] = record.source;
    root.push_back(j);
  }
  return root.dump(2) + "\n";
}

const std::vector<SeedRecord>& bundled_seeds() {
  static const std::vector<SeedRecord> records = [] {
    std::vector<SeedRecord> out;

    auto quad = [&](std::string label, int sign, std::vector<std::uint64_t> ramified,
                    std::vector<std::uint64_t> split, std::string source) {
      SeedRecord record;
      record.label = label;
      record.source = source;
      QuadraticSeed seed{sign, std::move(ramified), std::move(split)};
      record.quadratic = seed;
      record.seed = tower_seed_from_quadratic(seed, std::move(label), std::move(source));
      out.push_back(std::move(record));
    };

    quad("real-split-2-3-5-7", +1, {11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67},
         {2, 3, 5, 7},
         "real quadratic field, 15 ramified primes, 2,3,5,7 totally split; infinite 2-class tower");
    quad("imag-split-2-3-5-7-11", -1,
         {13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 73, 79}, {2, 3, 5, 7, 11},
         "imaginary quadratic field, 15 ramified primes, 2,3,5,7,11 totally split");
    quad("imag-split-2-3-5-a", -1, {7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 79}, {2, 3, 5},
         "imaginary quadratic field, 12 ramified primes, 2,3,5 totally split");
    quad("imag-split-2-3-5-b", -1, {7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 47, 59}, {2, 3, 5},
         "imaginary quadratic field, 12 ramified primes, 2,3,5 totally split");
    quad("zykin", -1, {5, 7, 11, 13, 17, 19, 23, 29, 31, 37}, {2, 3},
         "imaginary quadratic field, 10 ramified primes, 2,3 totally split (Zykin's example)");

    {
      SeedRecord record;
      record.label = "martinet";
      record.source =
          "Martinet field Q(cos(2pi/11), sqrt(2), sqrt(-23)): totally imaginary, degree 20, "
          "root discriminant 92.368";
      record.seed.label = record.label;
      record.seed.source = record.source;
      record.seed.alpha = 10.0 * std::log(92.368);
      record.seed.r1 = 0;
      record.seed.r2 = 10;
      record.seed.provenance = SeedProvenance::External;
      out.push_back(std::move(record));
    }
    {
      SeedRecord record;
      record.label = "hajir-maire";
      record.source =
          "Hajir-Maire tower, totally imaginary, root discriminant 82.10; only r2/alpha = "
          "1/log(rd) enters the limit, so the record is normalized to r2 = 1";
      record.seed.label = record.label;
      record.seed.source = record.source;
      record.seed.alpha = std::log(82.10);
      record.seed.r1 = 0;
      record.seed.r2 = 1;
      record.seed.provenance = SeedProvenance::External;
      out.push_back(std::move(record));
    }
    return out;
  }();
  return records;
}

}  // namespace ekbounds
