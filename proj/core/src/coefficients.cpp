#include "ekbounds/coefficients.hpp"

#include <cmath>
#include <stdexcept>

#include "ekbounds/constants.hpp"

namespace ekbounds {

namespace {

// sum_{m>=1} 1/(q^m + 1).  Terms decay geometrically; long double
// accumulation keeps the relative error well under 1e-15.  Stops once q^m
// passes 1e18 or the term is below 1e-18 of the partial sum.
double reciprocal_qm_plus_one_sum(std::uint64_t q) {
  long double sum = 0.0L;
  long double qm = static_cast<long double>(q);
  while (true) {
    const long double term = 1.0L / (qm + 1.0L);
    sum += term;
    if (qm > 1e18L || term < 1e-18L * sum) break;
    qm *= static_cast<long double>(q);
  }
  return static_cast<double>(sum);
}

}  // namespace

CoefficientFamily CoefficientFamily::grh() { return {FamilyKind::NfGrh, {}, {}}; }

CoefficientFamily CoefficientFamily::unconditional_full() {
  return {FamilyKind::NfUncondFull, {}, {}};
}

CoefficientFamily CoefficientFamily::unconditional_first_term() {
  return {FamilyKind::NfUncondFirstTerm, {}, {}};
}

CoefficientFamily CoefficientFamily::function_field(std::uint64_t q0) {
  auto base = as_prime_power(q0);
  if (!base) throw std::domain_error("function_field: q0 is not a prime power");
  return {FamilyKind::FunctionField, *base, {}};
}

double coeff_a(const CoefficientFamily& family, const PrimePower& q) {
  if (q.q < 2) throw std::domain_error("coeff_a: invalid prime power");
  const double logq = std::log(static_cast<double>(q.q));
  switch (family.kind) {
    case FamilyKind::NfGrh:
      return logq / (std::sqrt(static_cast<double>(q.q)) - 1.0);
    case FamilyKind::NfUncondFull:
      return 2.0 * logq * reciprocal_qm_plus_one_sum(q.q);
    case FamilyKind::NfUncondFirstTerm:
      return 2.0 * logq / (static_cast<double>(q.q) + 1.0);
    case FamilyKind::FunctionField: {
      // q must be q0^j for the family base q0 = p^m0.
      const PrimePower& base = family.ff_base;
      if (q.p != base.p || q.m % base.m != 0)
        throw std::domain_error("coeff_a: q is not a power of the FF base");
      return logq / (std::sqrt(static_cast<double>(q.q)) - 1.0);
    }
  }
  throw std::logic_error("coeff_a: unreachable");
}

double coeff_b(std::uint64_t q) {
  if (q < 2) throw std::domain_error("coeff_b: q must be >= 2");
  return std::log(static_cast<double>(q)) / (static_cast<double>(q) - 1.0);
}

ArchCoeffs arch_coeffs(const CoefficientFamily& family) {
  ArchCoeffs arch;
  switch (family.kind) {
    case FamilyKind::NfGrh:
      arch.a_r = 0.5 * kLog8Pi + 0.25 * kPi + 0.5 * kEulerGamma;
      arch.a_c = kLog8Pi + kEulerGamma;
      break;
    case FamilyKind::NfUncondFull:
    case FamilyKind::NfUncondFirstTerm:
      // gamma/2 + 1/2 + log(2 sqrt(pi)) = gamma/2 + 1/2 + log(4 pi)/2
      arch.a_r = 0.5 * kEulerGamma + 0.5 + 0.5 * kLog4Pi;
      arch.a_c = kEulerGamma + kLog4Pi;
      break;
    case FamilyKind::FunctionField:
      throw std::domain_error("arch_coeffs: FF families have no archimedean places");
  }
  if (family.arch_override) arch.a_c = *family.arch_override;
  return arch;
}

Objective Objective::gamma() { return {ObjectiveKind::Gamma, 0.0, 0.0}; }

Objective Objective::gamma_tilde() {
  return {ObjectiveKind::GammaTilde, 0.5 * (kEulerGamma + kLog4Pi), kEulerGamma + kLog2Pi};
}

}  // namespace ekbounds
