#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "pellkit/error.hpp"

namespace pellkit {

using Int = mpz_class;

struct IsqrtResult {
  Int root;
  bool exact;
};

/// floor(sqrt(n)) and whether n is a perfect square. Throws on n < 0.
IsqrtResult isqrt(const Int& n);

/// Nonnegative gcd; gcd(0, 0) = 0.
Int gcd(const Int& a, const Int& b);

/// Deterministic Miller-Rabin with the first twelve prime bases is exact
/// below this bound. Larger inputs raise ErrorCode::out_of_range unless they
/// are rejected earlier by trial division.
extern const Int kDeterministicPrimeBound;

bool is_prime(const Int& n);

struct PrimePower {
  Int prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

struct Factorization {
  Int value;
  std::vector<PrimePower> factors;  // strictly increasing primes

  Int recompose() const;
};

/// Trial division bound used when none is given. Reads PELLKIT_TRIAL_BOUND
/// from the environment once; falls back to 10^7.
std::uint64_t default_trial_bound();

/// Exact factorization by trial division up to `trial_bound`; a leftover
/// cofactor must either be below bound^2 or certify as prime, otherwise
/// ErrorCode::factorization_incomplete is raised.
Factorization factorize(const Int& n, std::uint64_t trial_bound);
Factorization factorize(const Int& n);

struct SquarefreeCore {
  Int core;
  Int square_root_part;  // n = square_root_part^2 * core
  bool is_squarefree;
};

SquarefreeCore squarefree_core(const Int& n);
SquarefreeCore squarefree_core(const Factorization& f);

/// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(const Int& a, const Int& n);

Int euler_phi(const Int& n);
Int euler_phi(const Factorization& f);

}  // namespace pellkit
