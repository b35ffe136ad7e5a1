#ifndef EKBOUNDS_COEFFICIENTS_HPP
#define EKBOUNDS_COEFFICIENTS_HPP

#include <cstdint>
#include <optional>

#include "ekbounds/primes.hpp"

// Coefficient tables for the linear bounds on gamma_K/alpha_K.
//
// Every bound instance is "maximize sum b_q.phi_q (+ archimedean terms)
// subject to sum a_q.phi_q + a_R.phi_R + a_C.phi_C <= 1 and the per-prime
// budget".  The family fixes the a-side, the objective fixes the b-side:
//
//   NF_GRH              a_q = log q / (sqrt(q) - 1)
//   NF_UNCOND_FULL      a_q = 2 log q * sum_{m>=1} 1/(q^m + 1)
//   NF_UNCOND_FIRST     a_q = 2 log q / (q + 1)
//   FF(q0), q = q0^j    a_q = j log q0 / (q0^{j/2} - 1)   (no archimedean)
//
// and b_q = log q / (q - 1) in every family.

namespace ekbounds {

enum class FamilyKind { NfGrh, NfUncondFull, NfUncondFirstTerm, FunctionField };

struct ArchCoeffs {
  double a_r = 0.0;
  double a_c = 0.0;
};

struct CoefficientFamily {
  FamilyKind kind = FamilyKind::NfGrh;
  // Base prime power q0 for the function-field family; unused otherwise.
  PrimePower ff_base{};
  // Replaces a_C when set (the unconditional-gamma configuration is ambiguous
  // in the literature, so the archimedean coefficient stays configurable).
  std::optional<double> arch_override;

  static CoefficientFamily grh();
  static CoefficientFamily unconditional_full();
  static CoefficientFamily unconditional_first_term();
  static CoefficientFamily function_field(std::uint64_t q0);

  bool is_function_field() const { return kind == FamilyKind::FunctionField; }
};

// Constraint-side coefficient a_q.  For the FF family q must be a power of
// the family base, otherwise a domain error is thrown.
double coeff_a(const CoefficientFamily& family, const PrimePower& q);

// Objective-side coefficient b_q = log q / (q - 1); family-independent.
double coeff_b(std::uint64_t q);

// Archimedean coefficients (a_R, a_C); domain error for FF families.
ArchCoeffs arch_coeffs(const CoefficientFamily& family);

enum class ObjectiveKind { Gamma, GammaTilde };

struct Objective {
  ObjectiveKind kind = ObjectiveKind::Gamma;
  double b_r = 0.0;
  double b_c = 0.0;

  static Objective gamma();
  static Objective gamma_tilde();
};

}  // namespace ekbounds

#endif  // EKBOUNDS_COEFFICIENTS_HPP
