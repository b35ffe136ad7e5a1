#include "ekbounds/optimizer.hpp"

#include <cmath>
#include <future>
#include <map>
#include <stdexcept>

#include "ekbounds/simplex.hpp"

namespace ekbounds {

namespace {

constexpr double kTieTol = 1e-14;

struct GreedyRun {
  double value = 0.0;
  double carrier_mass = 0.0;  // phi_R or phi_C
  std::vector<std::uint64_t> included;
  std::optional<RejectedPrime> first_rejected;
};

// One scan under a fixed carrier.  `weight` is the prime mass per unit of
// carrier mass at a binding budget: 2 for C (phi_R + 2 phi_C), 1 for R.
GreedyRun greedy_scan(const CoefficientFamily& family, double b_arch, double a_arch,
                      double weight, const std::vector<std::uint64_t>& primes) {
  GreedyRun run;
  double sum_a = 0.0;
  double sum_b = 0.0;
  auto current = [&] { return (weight * sum_b + b_arch) / (weight * sum_a + a_arch); };
  for (std::uint64_t p : primes) {
    const PrimePower pp{p, 1, p};
    const double a = coeff_a(family, pp);
    const double b = coeff_b(p);
    const double rho = b / a;
    if (rho > current() - kTieTol) {
      run.included.push_back(p);
      sum_a += a;
      sum_b += b;
    } else {
      run.first_rejected = RejectedPrime{p, rho};
      break;
    }
  }
  run.value = current();
  run.carrier_mass = 1.0 / (weight * sum_a + a_arch);
  return run;
}

BoundResult pack_greedy(const GreedyRun& run, Carrier carrier, std::uint64_t cutoff) {
  BoundResult result;
  result.value = run.value;
  result.carrier = carrier;
  result.included_primes = run.included;
  result.first_rejected = run.first_rejected;
  result.solver = SolverKind::Greedy;
  result.prime_cutoff = cutoff;
  result.m_max = 1;
  const double weight = carrier == Carrier::C ? 2.0 : 1.0;
  if (carrier == Carrier::C)
    result.phi.set_phi_c(run.carrier_mass);
  else
    result.phi.set_phi_r(run.carrier_mass);
  for (std::uint64_t p : run.included) result.phi.set_mass(p, weight * run.carrier_mass);
  return result;
}

}  // namespace

BoundResult greedy_bound(const CoefficientFamily& family, const Objective& objective,
                         std::uint64_t prime_cutoff) {
  if (family.is_function_field())
    throw std::domain_error("greedy_bound: use lp_bound or ff_closed_form for FF families");
  if (prime_cutoff < 2)
    throw std::invalid_argument("greedy_bound: prime_cutoff must be >= 2");

  const ArchCoeffs arch = arch_coeffs(family);
  auto snapshot = cached_primes(prime_cutoff);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p : *snapshot) {
    if (p > prime_cutoff) break;
    primes.push_back(p);
  }

  const GreedyRun with_c = greedy_scan(family, objective.b_c, arch.a_c, 2.0, primes);
  const GreedyRun with_r = greedy_scan(family, objective.b_r, arch.a_r, 1.0, primes);
  if (with_r.value > with_c.value + kTieTol)
    return pack_greedy(with_r, Carrier::R, prime_cutoff);
  return pack_greedy(with_c, Carrier::C, prime_cutoff);
}

LpProblem build_lp_problem(const CoefficientFamily& family, const Objective& objective,
                           std::uint64_t p_max, unsigned m_max) {
  if (p_max < 2 || m_max < 1)
    throw std::invalid_argument("lp_bound: need p_max >= 2 and m_max >= 1");

  LpProblem problem;
  if (family.is_function_field()) {
    const PrimePower& base = family.ff_base;
    std::uint64_t q = base.q;
    for (unsigned j = 1; j <= m_max; ++j) {
      problem.variables.push_back(PrimePower{base.p, base.m * j, q});
      if (q > kMaxPrimePower / base.q) break;
      q *= base.q;
    }
  } else {
    problem.variables = prime_powers(p_max, m_max);
    problem.has_arch = true;
  }
  const std::size_t n_pp = problem.variables.size();
  const std::size_t n = problem.column_count();
  if (n > 10000) throw std::invalid_argument("lp_bound: variable count exceeds 10^4");

  if (problem.has_arch) {
    // One budget row per prime: sum_m m.x_{p^m} - x_R - 2 x_C <= 0.
    std::map<std::uint64_t, std::vector<std::size_t>> by_prime;
    for (std::size_t j = 0; j < n_pp; ++j) by_prime[problem.variables[j].p].push_back(j);
    for (const auto& [p, idxs] : by_prime) {
      std::vector<double> row(n, 0.0);
      for (std::size_t j : idxs) row[j] = static_cast<double>(problem.variables[j].m);
      row[n_pp] = -1.0;
      row[n_pp + 1] = -2.0;
      problem.rows.push_back(std::move(row));
      problem.rhs.push_back(0.0);
    }
  }

  std::vector<double> basic_row(n, 0.0);
  for (std::size_t j = 0; j < n_pp; ++j) basic_row[j] = coeff_a(family, problem.variables[j]);
  problem.objective.assign(n, 0.0);
  for (std::size_t j = 0; j < n_pp; ++j) problem.objective[j] = coeff_b(problem.variables[j].q);
  if (problem.has_arch) {
    const ArchCoeffs arch = arch_coeffs(family);
    basic_row[n_pp] = arch.a_r;
    basic_row[n_pp + 1] = arch.a_c;
    problem.objective[n_pp] = objective.b_r;
    problem.objective[n_pp + 1] = objective.b_c;
  }
  problem.rows.push_back(std::move(basic_row));
  problem.rhs.push_back(1.0);
  return problem;
}

BoundResult lp_bound(const CoefficientFamily& family, const Objective& objective,
                     std::uint64_t p_max, unsigned m_max) {
  const LpProblem problem = build_lp_problem(family, objective, p_max, m_max);
  const std::vector<PrimePower>& vars = problem.variables;
  const std::size_t n_pp = vars.size();

  const LpResult lp = solve_lp_max(problem.rows, problem.rhs, problem.objective);
  if (lp.status != LpResult::Status::Optimal)
    throw std::runtime_error("lp_bound: simplex failed to reach an optimum");

  BoundResult result;
  result.value = lp.value;
  result.solver = SolverKind::Lp;
  result.prime_cutoff = p_max;
  result.m_max = m_max;
  result.lp_pivots = lp.pivots;
  for (std::size_t j = 0; j < n_pp; ++j)
    if (lp.x[j] != 0.0) result.phi.set_mass(vars[j].q, lp.x[j]);
  if (!family.is_function_field()) {
    result.phi.set_phi_r(lp.x[n_pp]);
    result.phi.set_phi_c(lp.x[n_pp + 1]);
  }
  const unsigned unit_m = family.is_function_field() ? family.ff_base.m : 1;
  for (std::size_t j = 0; j < n_pp; ++j)
    if (vars[j].m == unit_m && lp.x[j] > 1e-12)
      result.included_primes.push_back(family.is_function_field() ? vars[j].q : vars[j].p);
  if (result.phi.phi_c() > 1e-12)
    result.carrier = Carrier::C;
  else if (result.phi.phi_r() > 1e-12)
    result.carrier = Carrier::R;
  else
    result.carrier = Carrier::None;
  return result;
}

std::vector<std::pair<std::uint64_t, double>> sweep_unconditional(
    const Objective& objective, const std::vector<std::uint64_t>& cutoffs, UncondMode mode,
    std::optional<double> arch_override) {
  for (std::size_t i = 1; i < cutoffs.size(); ++i)
    if (cutoffs[i] < cutoffs[i - 1])
      throw std::invalid_argument("sweep_unconditional: cutoffs must be ascending");

  CoefficientFamily family = mode == UncondMode::Full
                                 ? CoefficientFamily::unconditional_full()
                                 : CoefficientFamily::unconditional_first_term();
  family.arch_override = arch_override;

  if (!cutoffs.empty()) cached_primes(cutoffs.back());  // one shared sieve for all points

  std::vector<std::future<double>> futures;
  futures.reserve(cutoffs.size());
  for (std::uint64_t cutoff : cutoffs)
    futures.push_back(std::async(std::launch::async, [family, objective, cutoff] {
      return greedy_bound(family, objective, cutoff).value;
    }));

  std::vector<std::pair<std::uint64_t, double>> out;
  out.reserve(cutoffs.size());
  for (std::size_t i = 0; i < cutoffs.size(); ++i) out.emplace_back(cutoffs[i], futures[i].get());
  return out;
}

FfBound ff_closed_form(std::uint64_t q0) {
  auto base = as_prime_power(q0);
  if (!base) throw std::domain_error("ff_closed_form: q0 is not a prime power");
  const double sqrt_q = std::sqrt(static_cast<double>(q0));
  FfBound out;
  out.value = 1.0 / (sqrt_q + 1.0);
  out.witness.set_mass(q0, (sqrt_q - 1.0) / std::log(static_cast<double>(q0)));
  return out;
}

}  // namespace ekbounds
