// ekbound — bounds for the Euler-Kronecker constant ratio gamma_K/alpha_K
// over families of global fields: optimizer bounds (greedy + LP), cutoff
// sweeps, explicit tower evaluation, quadratic seed search, and a one-shot
// reproduction table.
//
// Exit codes: 0 success / all rows match, 1 computation mismatch or record
// errors, 2 usage or input errors.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ekbounds/constants.hpp"
#include "ekbounds/optimizer.hpp"
#include "ekbounds/report.hpp"
#include "ekbounds/search.hpp"
#include "ekbounds/towers.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace ekbounds;

constexpr double kSolverAgreementTol = 1e-9;

std::string fmt7(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7g", v);
  return buf;
}

const char* carrier_name(Carrier c) {
  switch (c) {
    case Carrier::R: return "R";
    case Carrier::C: return "C";
    case Carrier::None: return "none";
  }
  return "?";
}

CoefficientFamily family_for(const std::string& mode, std::optional<double> arch_override) {
  CoefficientFamily family;
  if (mode == "grh")
    family = CoefficientFamily::grh();
  else if (mode == "uncond-full")
    family = CoefficientFamily::unconditional_full();
  else
    family = CoefficientFamily::unconditional_first_term();
  family.arch_override = arch_override;
  return family;
}

Objective objective_for(const std::string& name) {
  return name == "gamma-tilde" ? Objective::gamma_tilde() : Objective::gamma();
}

ordered_json phi_to_json(const PhiVector& phi) {
  ordered_json j;
  ordered_json finite = ordered_json::object();
  for (const auto& [q, v] : phi.finite_masses()) finite[std::to_string(q)] = v;
  j["finite"] = finite;
  j["phi_R"] = phi.phi_r();
  j["phi_C"] = phi.phi_c();
  return j;
}

ordered_json bound_to_json(const BoundResult& r, const CoefficientFamily& family) {
  ordered_json j;
  j["solver"] = r.solver == SolverKind::Greedy ? "greedy" : "lp";
  j["value"] = r.value;
  j["liminf_bound"] = -r.value;
  j["carrier"] = carrier_name(r.carrier);
  j["included_primes"] = r.included_primes;
  if (r.first_rejected) {
    j["first_rejected"] = {{"p", r.first_rejected->p}, {"rho", r.first_rejected->rho}};
  } else {
    j["first_rejected"] = nullptr;
  }
  j["phi"] = phi_to_json(r.phi);
  j["constraint_slack"] = validate(r.phi, family).basic_inequality_slack;
  if (r.solver == SolverKind::Lp) j["pivots"] = r.lp_pivots;
  return j;
}

void print_bound_text(const BoundResult& r, const CoefficientFamily& family) {
  std::printf("%-18s %s\n", "solver:", r.solver == SolverKind::Greedy ? "greedy" : "lp");
  std::printf("%-18s %s\n", "optimum:", fmt7(r.value).c_str());
  std::printf("%-18s %s\n", "liminf bound:", fmt7(-r.value).c_str());
  std::printf("%-18s %s\n", "carrier:", carrier_name(r.carrier));
  std::printf("%-18s", "included primes:");
  for (std::uint64_t p : r.included_primes) std::printf(" %llu", (unsigned long long)p);
  std::printf("\n");
  if (r.first_rejected)
    std::printf("%-18s %llu (rho = %s)\n", "first rejected:",
                (unsigned long long)r.first_rejected->p, fmt7(r.first_rejected->rho).c_str());
  std::printf("%-18s phi_R = %s, phi_C = %s", "phi:", fmt7(r.phi.phi_r()).c_str(),
              fmt7(r.phi.phi_c()).c_str());
  for (const auto& [q, v] : r.phi.finite_masses())
    std::printf(", phi_%llu = %s", (unsigned long long)q, fmt7(v).c_str());
  std::printf("\n");
  std::printf("%-18s %s\n", "constraint slack:",
              fmt7(validate(r.phi, family).basic_inequality_slack).c_str());
}

struct BoundArgs {
  std::string mode = "grh";
  std::string objective = "gamma";
  std::string field = "nf";
  std::string solver = "both";
  std::string format = "text";
  std::uint64_t q0 = 0;
  std::uint64_t prime_cutoff = 100;
  unsigned m_max = 3;
  bool has_m_max = false;
  double arch_override = 0.0;
  bool has_override = false;
};

int run_bound(const BoundArgs& args) {
  const Objective objective = objective_for(args.objective);

  if (args.field == "ff") {
    if (args.q0 < 2) {
      std::fprintf(stderr, "error: --field ff requires --q <prime power>\n");
      return 2;
    }
    if (objective.kind == ObjectiveKind::GammaTilde) {
      std::fprintf(stderr, "error: gamma-tilde is undefined for function fields\n");
      return 2;
    }
    if (args.solver == "greedy") {
      std::fprintf(stderr, "error: the greedy solver covers number fields only; "
                           "function fields use --solver lp or the closed form\n");
      return 2;
    }
    const FfBound closed = ff_closed_form(args.q0);
    const unsigned m_max = args.has_m_max ? args.m_max : 8;
    const BoundResult lp =
        lp_bound(CoefficientFamily::function_field(args.q0), objective, args.q0, m_max);
    const double diff = std::abs(lp.value - closed.value);
    if (args.format == "json") {
      ordered_json j;
      j["field"] = "ff";
      j["q"] = args.q0;
      j["closed_form_value"] = closed.value;
      j["liminf_bound"] = -closed.value;
      j["lp"] = bound_to_json(lp, CoefficientFamily::function_field(args.q0));
      j["agreement"] = diff;
      std::printf("%s\n", j.dump(2).c_str());
    } else {
      std::printf("%-18s q = %llu\n", "function field:", (unsigned long long)args.q0);
      std::printf("%-18s %s\n", "closed form:", fmt7(closed.value).c_str());
      std::printf("%-18s %s\n", "liminf bound:", fmt7(-closed.value).c_str());
      print_bound_text(lp, CoefficientFamily::function_field(args.q0));
      std::printf("%-18s %s\n", "lp vs closed:", fmt7(diff).c_str());
    }
    return diff <= kSolverAgreementTol ? 0 : 1;
  }

  const CoefficientFamily family = family_for(
      args.mode, args.has_override ? std::optional<double>(args.arch_override) : std::nullopt);

  std::vector<BoundResult> results;
  if (args.solver == "greedy" || args.solver == "both")
    results.push_back(greedy_bound(family, objective, args.prime_cutoff));
  if (args.solver == "lp" || args.solver == "both")
    results.push_back(lp_bound(family, objective, args.prime_cutoff, args.m_max));

  double agreement = 0.0;
  if (results.size() == 2) agreement = std::abs(results[0].value - results[1].value);

  if (args.format == "json") {
    ordered_json j;
    j["mode"] = args.mode;
    j["objective"] = args.objective;
    j["prime_cutoff"] = args.prime_cutoff;
    ordered_json arr = ordered_json::array();
    for (const BoundResult& r : results) arr.push_back(bound_to_json(r, family));
    j["results"] = arr;
    if (results.size() == 2) j["agreement"] = agreement;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("%-18s %s\n", "mode:", args.mode.c_str());
    std::printf("%-18s %s\n", "objective:", args.objective.c_str());
    std::printf("%-18s %llu\n", "prime cutoff:", (unsigned long long)args.prime_cutoff);
    for (const BoundResult& r : results) {
      std::printf("\n");
      print_bound_text(r, family);
    }
    if (results.size() == 2) std::printf("\n%-18s %s\n", "greedy vs lp:", fmt7(agreement).c_str());
  }
  return agreement <= kSolverAgreementTol ? 0 : 1;
}

struct SweepArgs {
  std::string mode;
  std::string objective = "gamma";
  std::string format = "text";
  std::vector<std::uint64_t> cutoffs = {17, 1000, 100000};
  double arch_override = 0.0;
  bool has_override = false;
};

int run_sweep(const SweepArgs& args) {
  const UncondMode mode = args.mode == "uncond-full" ? UncondMode::Full : UncondMode::FirstTerm;
  const auto points = sweep_unconditional(
      objective_for(args.objective), args.cutoffs, mode,
      args.has_override ? std::optional<double>(args.arch_override) : std::nullopt);
  if (args.format == "json") {
    ordered_json j;
    j["mode"] = args.mode;
    j["objective"] = args.objective;
    ordered_json arr = ordered_json::array();
    for (const auto& [cutoff, value] : points)
      arr.push_back({{"cutoff", cutoff}, {"value", value}, {"liminf_bound", -value}});
    j["points"] = arr;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("%-12s %-12s %s\n", "cutoff", "optimum", "liminf bound");
    for (const auto& [cutoff, value] : points)
      std::printf("%-12llu %-12s %s\n", (unsigned long long)cutoff, fmt7(value).c_str(),
                  fmt7(-value).c_str());
  }
  return 0;
}

struct EvaluateArgs {
  std::string input;
  std::string format = "text";
};

int run_evaluate(const EvaluateArgs& args) {
  SeedFile file;
  if (args.input.empty()) {
    file.records = bundled_seeds();
  } else {
    file = load_seed_file(args.input);
  }

  const Objective gamma = Objective::gamma();
  const Objective gamma_tilde = Objective::gamma_tilde();

  if (args.format == "json") {
    ordered_json j;
    ordered_json rows = ordered_json::array();
    for (const SeedRecord& record : file.records)
      rows.push_back({{"label", record.label},
                      {"alpha", record.seed.alpha},
                      {"gamma", evaluate_seed(record.seed, gamma)},
                      {"gamma_tilde", evaluate_seed(record.seed, gamma_tilde)},
                      {"source", record.source}});
    j["rows"] = rows;
    ordered_json errors = ordered_json::array();
    for (const SeedRecordError& e : file.record_errors)
      errors.push_back({{"index", e.index}, {"label", e.label}, {"message", e.message}});
    j["record_errors"] = errors;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("%-24s %-12s %-12s %s\n", "label", "alpha", "gamma", "gamma~");
    for (const SeedRecord& record : file.records)
      std::printf("%-24s %-12s %-12s %s\n", record.label.c_str(),
                  fmt7(record.seed.alpha).c_str(), fmt7(evaluate_seed(record.seed, gamma)).c_str(),
                  fmt7(evaluate_seed(record.seed, gamma_tilde)).c_str());
    for (const SeedRecordError& e : file.record_errors)
      std::fprintf(stderr, "record %zu (%s): %s\n", e.index, e.label.c_str(), e.message.c_str());
  }
  return file.record_errors.empty() ? 0 : 1;
}

struct SearchArgs {
  std::vector<std::uint64_t> split;
  unsigned ramified_count = 0;
  std::uint64_t pool = 0;
  int sign = -1;
  unsigned top_k = 10;
  std::string input;
  std::string format = "text";
};

std::string radicand_string(const QuadraticSeed& seed) {
  std::string out = seed.sign < 0 ? "-(" : "+(";
  for (std::size_t i = 0; i < seed.ramified_primes.size(); ++i) {
    if (i) out += "*";
    out += std::to_string(seed.ramified_primes[i]);
  }
  return out + ")";
}

int run_search(const SearchArgs& args) {
  SearchSpec spec;
  if (!args.input.empty()) {
    std::ifstream in(args.input);
    if (!in) {
      std::fprintf(stderr, "error: cannot open search spec '%s'\n", args.input.c_str());
      return 2;
    }
    ordered_json j;
    try {
      j = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      std::fprintf(stderr, "error: search spec: %s\n", e.what());
      return 2;
    }
    spec.split_primes = j.value("split_primes", std::vector<std::uint64_t>{});
    spec.ramified_count = j.value("ramified_count", 0u);
    spec.pool_limit = j.value("pool_limit", std::uint64_t{0});
    spec.sign = j.value("sign", -1);
    spec.top_k = j.value("top_k", 10u);
  } else {
    spec.split_primes = args.split;
    spec.ramified_count = args.ramified_count;
    spec.pool_limit = args.pool;
    spec.sign = args.sign;
    spec.top_k = args.top_k;
  }
  if (spec.ramified_count == 0 || spec.pool_limit < 3) {
    std::fprintf(stderr, "error: search needs --ramified-count >= 1 and --pool >= 3\n");
    return 2;
  }

  const SearchOutcome outcome = search_quadratic(spec);

  if (args.format == "json") {
    ordered_json j;
    j["spec"] = {{"split_primes", spec.split_primes},
                 {"ramified_count", spec.ramified_count},
                 {"pool_limit", spec.pool_limit},
                 {"sign", spec.sign},
                 {"top_k", spec.top_k}};
    j["exhaustive"] = outcome.exhaustive;
    j["candidates_examined"] = outcome.candidates_examined;
    j["congruence_rejections"] = outcome.congruence_rejections;
    j["conditional_on_predicate"] = true;
    ordered_json hits = ordered_json::array();
    for (const SearchHit& hit : outcome.hits)
      hits.push_back({{"value", hit.value},
                      {"radicand", radicand_string(hit.seed)},
                      {"ramified_primes", hit.seed.ramified_primes},
                      {"split_primes", hit.seed.split_primes},
                      {"feasible", hit.feasible},
                      {"congruences_ok", hit.congruences_ok}});
    j["hits"] = hits;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("%s search over %llu candidates (%llu congruence rejections)\n",
                outcome.exhaustive ? "exhaustive" : "best-first",
                (unsigned long long)outcome.candidates_examined,
                (unsigned long long)outcome.congruence_rejections);
    std::printf("note: tower existence is conditional on the feasibility predicate\n");
    std::printf("%-12s %s\n", "value", "radicand");
    for (const SearchHit& hit : outcome.hits)
      std::printf("%-12s %s\n", fmt7(hit.value).c_str(), radicand_string(hit.seed).c_str());
  }
  return 0;
}

int run_table(const std::string& format) {
  const std::vector<ReportRow> rows = reproduction_table();
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const ReportRow& r : rows)
      arr.push_back({{"label", r.label},
                     {"computed", r.computed},
                     {"reference", r.reference},
                     {"tolerance", r.tolerance},
                     {"status", to_string(r.status)}});
    std::printf("%s\n", arr.dump(2).c_str());
  } else {
    std::printf("%-15s %-58s %-12s %-12s %s\n", "status", "label", "computed", "reference",
                "tolerance");
    for (const ReportRow& r : rows)
      std::printf("%-15s %-58s %-12s %-12s %s\n", to_string(r.status).c_str(), r.label.c_str(),
                  fmt7(r.computed).c_str(), fmt7(r.reference).c_str(), fmt7(r.tolerance).c_str());
  }
  return all_match(rows) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bounds for the Euler-Kronecker constant ratio over families of global fields"};
  app.require_subcommand(1);

  BoundArgs bound_args;
  CLI::App* bound = app.add_subcommand("bound", "compute a liminf bound (greedy and/or LP)");
  bound->add_option("--mode", bound_args.mode, "coefficient family")
      ->check(CLI::IsMember({"grh", "uncond-full", "uncond-first-term"}));
  bound->add_option("--objective", bound_args.objective, "objective")
      ->check(CLI::IsMember({"gamma", "gamma-tilde"}));
  bound->add_option("--field", bound_args.field, "number field or function field")
      ->check(CLI::IsMember({"nf", "ff"}));
  bound->add_option("--q", bound_args.q0, "function-field base prime power");
  bound->add_option("--prime-cutoff", bound_args.prime_cutoff, "largest prime considered");
  bound->add_option("--m-max", bound_args.m_max, "largest prime-power exponent in the LP");
  bound->add_option("--solver", bound_args.solver, "solver selection")
      ->check(CLI::IsMember({"greedy", "lp", "both"}));
  bound->add_option("--arch-override", bound_args.arch_override, "replace the a_C coefficient");
  bound->add_option("--format", bound_args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "greedy bound per prime cutoff (unconditional)");
  sweep->add_option("--mode", sweep_args.mode, "coefficient family")
      ->required()
      ->check(CLI::IsMember({"uncond-full", "uncond-first-term"}));
  sweep->add_option("--objective", sweep_args.objective, "objective")
      ->check(CLI::IsMember({"gamma", "gamma-tilde"}));
  sweep->add_option("--cutoffs", sweep_args.cutoffs, "ascending prime cutoffs")->delimiter(',');
  sweep->add_option("--arch-override", sweep_args.arch_override, "replace the a_C coefficient");
  sweep->add_option("--format", sweep_args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  EvaluateArgs evaluate_args;
  CLI::App* evaluate = app.add_subcommand("evaluate", "evaluate tower seed records");
  evaluate->add_option("--input", evaluate_args.input,
                       "seed JSON file (default: bundled records)");
  evaluate->add_option("--format", evaluate_args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand("search", "search quadratic seeds with prescribed splitting");
  search->add_option("--split", search_args.split, "primes required to split")->delimiter(',');
  search->add_option("--ramified-count", search_args.ramified_count, "ramified prime count t");
  search->add_option("--pool", search_args.pool, "candidate prime bound");
  search->add_option("--sign", search_args.sign, "radicand sign (+1 or -1)");
  search->add_option("--top-k", search_args.top_k, "hits to keep");
  search->add_option("--input", search_args.input, "search spec JSON file");
  search->add_option("--format", search_args.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string table_format = "text";
  CLI::App* table = app.add_subcommand("table", "reproduce every reference value");
  table->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  bound_args.has_override = bound->count("--arch-override") > 0;
  bound_args.has_m_max = bound->count("--m-max") > 0;
  sweep_args.has_override = sweep->count("--arch-override") > 0;

  try {
    if (bound->parsed()) return run_bound(bound_args);
    if (sweep->parsed()) return run_sweep(sweep_args);
    if (evaluate->parsed()) return run_evaluate(evaluate_args);
    if (search->parsed()) return run_search(search_args);
    if (table->parsed()) return run_table(table_format);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
