#include "ekbounds/phi.hpp"

#include <stdexcept>

namespace ekbounds {

namespace {

constexpr double kBudgetTol = 1e-12;

void check_key(std::uint64_t q) {
  if (!as_prime_power(q))
    throw std::domain_error("PhiVector: mass key is not a prime power");
}

}  // namespace

void PhiVector::set_mass(std::uint64_t q, double value) {
  check_key(q);
  if (value == 0.0)
    masses_.erase(q);
  else
    masses_[q] = value;
}

void PhiVector::add_mass(std::uint64_t q, double value) {
  check_key(q);
  auto [it, inserted] = masses_.try_emplace(q, value);
  if (!inserted) it->second += value;
  if (it->second == 0.0) masses_.erase(it);
}

double PhiVector::mass(std::uint64_t q) const {
  auto it = masses_.find(q);
  return it == masses_.end() ? 0.0 : it->second;
}

PhiVector PhiVector::scaled(double s) const {
  PhiVector out;
  for (const auto& [q, v] : masses_) out.set_mass(q, s * v);
  out.set_phi_r(s * phi_r_);
  out.set_phi_c(s * phi_c_);
  return out;
}

double limit_value(const PhiVector& phi, const Objective& objective) {
  double sum = 0.0;
  for (const auto& [q, v] : phi.finite_masses()) sum += v * coeff_b(q);
  sum += phi.phi_r() * objective.b_r;
  sum += phi.phi_c() * objective.b_c;
  return sum == 0.0 ? 0.0 : -sum;  // avoid the -0.0 artifact for bad families
}

ValidationReport validate(const PhiVector& phi, const CoefficientFamily& family) {
  ValidationReport report;

  for (const auto& [q, v] : phi.finite_masses())
    if (v < 0.0)
      report.negative_mass_violations.push_back({"phi_" + std::to_string(q), v});
  if (phi.phi_r() < 0.0) report.negative_mass_violations.push_back({"phi_R", phi.phi_r()});
  if (phi.phi_c() < 0.0) report.negative_mass_violations.push_back({"phi_C", phi.phi_c()});

  double lhs = 0.0;
  if (family.is_function_field()) {
    if (phi.phi_r() != 0.0 || phi.phi_c() != 0.0)
      throw std::domain_error("validate: FF family with archimedean mass");
    for (const auto& [q, v] : phi.finite_masses())
      lhs += v * coeff_a(family, *as_prime_power(q));
  } else {
    // Per-prime budget rows: sum_m m.phi_{p^m} <= phi_R + 2 phi_C.
    const double budget = phi.phi_r() + 2.0 * phi.phi_c();
    std::map<std::uint64_t, double> weighted;  // prime -> sum_m m.phi_{p^m}
    for (const auto& [q, v] : phi.finite_masses()) {
      const PrimePower pp = *as_prime_power(q);
      weighted[pp.p] += static_cast<double>(pp.m) * v;
      lhs += v * coeff_a(family, pp);
    }
    for (const auto& [p, used] : weighted)
      if (used > budget + kBudgetTol)
        report.budget_violations.push_back({p, used - budget});

    const ArchCoeffs arch = arch_coeffs(family);
    lhs += phi.phi_r() * arch.a_r + phi.phi_c() * arch.a_c;
  }

  report.basic_inequality_lhs = lhs;
  report.basic_inequality_slack = 1.0 - lhs;
  return report;
}

}  // namespace ekbounds
