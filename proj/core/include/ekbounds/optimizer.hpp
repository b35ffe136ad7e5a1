#ifndef EKBOUNDS_OPTIMIZER_HPP
#define EKBOUNDS_OPTIMIZER_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ekbounds/phi.hpp"

// Solvers for the constrained maximization behind the lower bounds:
//
//   maximize    sum_q b_q phi_q + b_R phi_R + b_C phi_C
//   subject to  phi >= 0
//               sum_m m.phi_{p^m} <= phi_R + 2 phi_C          (each prime p)
//               sum_q a_q phi_q + a_R phi_R + a_C phi_C <= 1
//
// The liminf bound on gamma_K/alpha_K is minus the optimum.  Two independent
// routes are provided: a structured greedy that mirrors the known shape of
// the optimum (single archimedean carrier, exponent-1 masses, ratio test on
// rho(p) = b_p/a_p), and a from-scratch LP over truncated variables that
// serves as its oracle.

namespace ekbounds {

enum class Carrier { R, C, None };
enum class SolverKind { Greedy, Lp };

struct RejectedPrime {
  std::uint64_t p = 0;
  double rho = 0.0;  // b_p/a_p at the rejection point
};

struct BoundResult {
  double value = 0.0;  // optimum of the maximization; the liminf bound is -value
  PhiVector phi;
  Carrier carrier = Carrier::None;
  std::vector<std::uint64_t> included_primes;
  std::optional<RejectedPrime> first_rejected;
  SolverKind solver = SolverKind::Greedy;
  std::uint64_t prime_cutoff = 0;
  unsigned m_max = 1;
  int lp_pivots = 0;
};

// Structured greedy over primes <= prime_cutoff (NF families only).  Runs
// the scan under both pure carriers and keeps the better one; ties go to C,
// matching the known optima.  Exponent > 1 variables are deliberately left
// to the LP cross-check.
BoundResult greedy_bound(const CoefficientFamily& family, const Objective& objective,
                         std::uint64_t prime_cutoff);

// The truncated LP in matrix form: one column per prime power q <= p_max
// with exponent <= m_max (for FF families: q0^j, j <= m_max), plus phi_R and
// phi_C for NF families; one budget row per prime with pattern
// (m, ..., -1, -2), then the basic-inequality row with rhs 1.
struct LpProblem {
  std::vector<PrimePower> variables;      // prime-power columns, ascending q
  bool has_arch = false;                  // phi_R, phi_C appended after the columns
  std::vector<std::vector<double>> rows;  // budget rows, then the basic-inequality row
  std::vector<double> rhs;
  std::vector<double> objective;

  std::size_t column_count() const { return variables.size() + (has_arch ? 2 : 0); }
};

LpProblem build_lp_problem(const CoefficientFamily& family, const Objective& objective,
                           std::uint64_t p_max, unsigned m_max);

// Solves the truncated LP by the dense Bland-rule simplex.
BoundResult lp_bound(const CoefficientFamily& family, const Objective& objective,
                     std::uint64_t p_max, unsigned m_max);

enum class UncondMode { Full, FirstTerm };

// Greedy bound per cutoff for the unconditional families.  Cutoffs must be
// ascending; points are evaluated concurrently and collected in order.
std::vector<std::pair<std::uint64_t, double>> sweep_unconditional(
    const Objective& objective, const std::vector<std::uint64_t>& cutoffs, UncondMode mode,
    std::optional<double> arch_override = std::nullopt);

struct FfBound {
  double value = 0.0;   // 1/(sqrt(q0)+1); the liminf bound is -value
  PhiVector witness;    // phi_{q0} = (sqrt(q0)-1)/log(q0), makes the row binding
};

// Closed form for the function-field family over F_{q0}.
FfBound ff_closed_form(std::uint64_t q0);

}  // namespace ekbounds

#endif  // EKBOUNDS_OPTIMIZER_HPP
