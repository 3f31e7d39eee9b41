#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pellkit/intkit.hpp"

namespace pellkit {

/// Primitive indefinite form a x^2 + b x y + c y^2 of discriminant
/// D = b^2 - 4ac > 0. Coefficients are machine integers: cycle enumeration is
/// only feasible far below the int64 range, and kMaxDiscriminant guards it.
struct IndefiniteForm {
  std::int64_t a;
  std::int64_t b;
  std::int64_t c;

  std::int64_t discriminant() const;

  auto operator<=>(const IndefiniteForm&) const = default;
  std::string to_string() const;
};

inline constexpr std::int64_t kMaxDiscriminant = 1'000'000'000'000;  // 10^12

/// 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b, compared exactly.
bool is_reduced(const IndefiniteForm& f);

/// Equivalent reduced form via repeated normalized rho steps.
IndefiniteForm reduce(const IndefiniteForm& f);

/// Cycle successor of a reduced form.
IndefiniteForm rho(const IndefiniteForm& f);

/// All reduced primitive forms of discriminant D, sorted.
std::vector<IndefiniteForm> reduced_forms(std::int64_t D);

/// Partition of reduced_forms(D) into rho-cycles, each listed from its least
/// member; cycles ordered by that member.
std::vector<std::vector<IndefiniteForm>> form_cycles(std::int64_t D);

bool is_fundamental_discriminant(const Int& D);

Int discriminant_of(const Int& m);

/// Narrow class number h+ of the fundamental discriminant D.
std::int64_t narrow_class_number(const Int& D);

/// Whether the principal form and its negative share a cycle, which happens
/// exactly when the fundamental unit has norm -1.
bool principal_cycle_is_ambiguous(const Int& D);

struct ClassData {
  Int m;
  Int D;
  std::int64_t h_narrow;
  std::int64_t h_wide;
  int unit_norm;
};

ClassData class_number(const Int& m);

}  // namespace pellkit
