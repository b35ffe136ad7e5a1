#ifndef EKBOUNDS_PHI_HPP
#define EKBOUNDS_PHI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ekbounds/coefficients.hpp"

// phi-data of an asymptotically exact family: the limits of the place-count
// ratios Phi_q(K)/alpha_K plus the archimedean ratios r1/alpha_K and
// r2/alpha_K.  Only finitely supported vectors are representable; limits of
// towers and optimizer outputs always are.

namespace ekbounds {

class PhiVector {
 public:
  PhiVector() = default;

  // Masses are keyed by the prime power q; the key is validated on insert.
  // Negative values are storable (validate reports them), non-prime-power
  // keys are not.
  void set_mass(std::uint64_t q, double value);
  void add_mass(std::uint64_t q, double value);
  double mass(std::uint64_t q) const;

  void set_phi_r(double v) { phi_r_ = v; }
  void set_phi_c(double v) { phi_c_ = v; }
  double phi_r() const { return phi_r_; }
  double phi_c() const { return phi_c_; }

  // Ascending-q iteration order; summations over this map are deterministic.
  const std::map<std::uint64_t, double>& finite_masses() const { return masses_; }

  bool empty() const { return masses_.empty() && phi_r_ == 0.0 && phi_c_ == 0.0; }

  PhiVector scaled(double s) const;

  friend bool operator==(const PhiVector&, const PhiVector&) = default;

 private:
  std::map<std::uint64_t, double> masses_;
  double phi_r_ = 0.0;
  double phi_c_ = 0.0;
};

struct BudgetViolation {
  std::uint64_t prime = 0;
  double excess = 0.0;
};

struct NegativeMass {
  std::string where;  // "phi_<q>", "phi_R" or "phi_C"
  double value = 0.0;
};

struct ValidationReport {
  std::vector<BudgetViolation> budget_violations;
  std::vector<NegativeMass> negative_mass_violations;
  double basic_inequality_lhs = 0.0;
  double basic_inequality_slack = 0.0;  // 1 - lhs

  bool feasible(double slack_tol = 1e-12) const {
    return budget_violations.empty() && negative_mass_violations.empty() &&
           basic_inequality_slack >= -slack_tol;
  }
};

// The limit of gamma_K/alpha_K (or of its archimedean completion) along a
// family with invariants `phi`:  -(sum_q phi_q b_q + phi_R b_R + phi_C b_C).
double limit_value(const PhiVector& phi, const Objective& objective);

// Checks phi against the family's constraint system: nonnegativity, the
// per-prime budget sum_m m.phi_{p^m} <= phi_R + 2 phi_C (NF only), and the
// basic inequality row.  Violations are data, not errors.
ValidationReport validate(const PhiVector& phi, const CoefficientFamily& family);

}  // namespace ekbounds

#endif  // EKBOUNDS_PHI_HPP
