#pragma once

#include <cstddef>
#include <vector>

#include "pellkit/intkit.hpp"

namespace pellkit {

/// (P + sqrt(D)) / Q with Q | D - P^2. One step of the PQa recurrence
/// yields the next partial quotient and successor state.
struct SurdState {
  Int P;
  Int Q;
  Int D;

  /// Validates Q != 0, Q | D - P^2 and D a positive nonsquare.
  static SurdState make(Int P, Int Q, Int D);

  /// floor((P + sqrt(D)) / Q), given root = isqrt(D).
  Int floor_value(const Int& root) const;

  /// Advances to the complete quotient after subtracting `a` and inverting.
  SurdState next(const Int& a) const;

  bool operator==(const SurdState& o) const { return P == o.P && Q == o.Q && D == o.D; }
};

/// Periodic expansion of a quadratic surd: preperiod terms followed by a
/// repeating block. For sqrt(m) the preperiod is exactly [a0].
struct SurdExpansion {
  std::vector<Int> preperiod;
  std::vector<Int> period;

  /// Partial quotient a_k.
  const Int& term(std::size_t k) const;
};

SurdExpansion expand_surd(const SurdState& start);

struct CFExpansion {
  Int m;
  Int a0;
  std::vector<Int> period;

  std::size_t period_length() const { return period.size(); }
  const Int& term(std::size_t k) const { return k == 0 ? a0 : period[(k - 1) % period.size()]; }
};

struct Convergent {
  std::size_t index;
  Int numerator;
  Int denominator;
  Int pell_value;  // numerator^2 - m * denominator^2
};

/// Continued fraction of sqrt(m); throws ErrorCode::perfect_square for square
/// m and invalid_argument for m < 2.
CFExpansion cf_sqrt(const Int& m);

std::size_t period_length(const Int& m);

/// Incremental convergents p_k/q_k of sqrt(m). Numerators grow exponentially,
/// so callers pull as many as they need.
class ConvergentStream {
 public:
  explicit ConvergentStream(const CFExpansion& exp);

  Convergent next();

 private:
  const CFExpansion* exp_;
  std::size_t k_ = 0;
  Int p_prev_ = 1, p_prev2_ = 0;
  Int q_prev_ = 0, q_prev2_ = 1;
};

std::vector<Convergent> convergents(const CFExpansion& exp, std::size_t count);

}  // namespace pellkit
