#include "pellkit/intkit.hpp"

#include <array>
#include <cstdlib>
#include <string>

namespace pellkit {

// psi_12 (Sorenson & Webster): smallest strong pseudoprime to the first 12
// prime bases.
const Int kDeterministicPrimeBound("318665857834031151167461");

namespace {

constexpr std::array<unsigned, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(const Int& n, const Int& d, unsigned s, unsigned base) {
  const Int n_minus_1 = n - 1;
  Int x;
  const Int a = base;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

void require_positive(const Int& n, const char* what) {
  if (sgn(n) <= 0) throw Error(ErrorCode::invalid_argument, std::string(what) + ": argument must be positive");
}

}  // namespace

IsqrtResult isqrt(const Int& n) {
  if (sgn(n) < 0) throw Error(ErrorCode::invalid_argument, "isqrt: negative argument");
  IsqrtResult r;
  Int rem;
  mpz_sqrtrem(r.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  r.exact = (rem == 0);
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int x = abs(a), y = abs(b);
  while (y != 0) {
    Int t = x % y;
    x = y;
    y = t;
  }
  return x;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  if (n >= kDeterministicPrimeBound)
    throw Error(ErrorCode::out_of_range, "is_prime: " + n.get_str() + " exceeds the deterministic witness range");

  Int d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (unsigned base : kWitnesses)
    if (!strong_probable_prime(n, d, s, base)) return false;
  return true;
}

Int Factorization::recompose() const {
  Int v = 1;
  for (const auto& f : factors) {
    Int pp;
    mpz_pow_ui(pp.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    v *= pp;
  }
  return v;
}

std::uint64_t default_trial_bound() {
  static const std::uint64_t bound = [] {
    if (const char* env = std::getenv("PELLKIT_TRIAL_BOUND")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v >= 2) return static_cast<std::uint64_t>(v);
    }
    return std::uint64_t{10'000'000};
  }();
  return bound;
}

namespace {

// 64-bit fast path; `rest` is reduced in place.
void trial_divide_u64(std::uint64_t& rest, std::uint64_t bound, std::vector<PrimePower>& out) {
  auto take = [&](std::uint64_t p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) out.push_back({Int(static_cast<unsigned long>(p)), e});
  };
  take(2);
  for (std::uint64_t p = 3; p <= bound && p * p <= rest; p += 2) take(p);
}

void trial_divide_big(Int& rest, std::uint64_t bound, std::vector<PrimePower>& out) {
  auto take = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e) out.push_back({Int(p), e});
  };
  take(2);
  for (unsigned long p = 3; p <= bound && Int(p) * p <= rest; p += 2) {
    take(p);
    if (rest.fits_ulong_p()) {
      std::uint64_t small = rest.get_ui();
      std::vector<PrimePower> tail;
      // continue from the next odd p on the fast path
      auto keep = [&](std::uint64_t q) {
        unsigned e = 0;
        while (small % q == 0) {
          small /= q;
          ++e;
        }
        if (e) tail.push_back({Int(static_cast<unsigned long>(q)), e});
      };
      for (std::uint64_t q = p + 2; q <= bound && q * q <= small; q += 2) keep(q);
      out.insert(out.end(), tail.begin(), tail.end());
      rest = static_cast<unsigned long>(small);
      return;
    }
  }
}

}  // namespace

Factorization factorize(const Int& n, std::uint64_t trial_bound) {
  require_positive(n, "factorize");
  Factorization f{n, {}};
  Int rest;
  if (n.fits_ulong_p()) {
    std::uint64_t r = n.get_ui();
    trial_divide_u64(r, trial_bound, f.factors);
    rest = static_cast<unsigned long>(r);
  } else {
    rest = n;
    trial_divide_big(rest, trial_bound, f.factors);
  }
  if (rest > 1) {
    const Int b = static_cast<unsigned long>(trial_bound);
    // every prime <= bound has been removed, so a cofactor below (bound+1)^2 is prime
    if (rest <= b * b || is_prime(rest)) {
      f.factors.push_back({rest, 1});
    } else {
      throw Error(ErrorCode::factorization_incomplete,
                  "factorize: composite cofactor " + rest.get_str() + " of " + n.get_str() +
                      " has no factor below the trial bound " + std::to_string(trial_bound));
    }
  }
  return f;
}

Factorization factorize(const Int& n) { return factorize(n, default_trial_bound()); }

SquarefreeCore squarefree_core(const Factorization& f) {
  SquarefreeCore r{1, 1, true};
  for (const auto& [p, e] : f.factors) {
    if (e % 2) r.core *= p;
    for (unsigned i = 0; i < e / 2; ++i) r.square_root_part *= p;
    if (e > 1) r.is_squarefree = false;
  }
  return r;
}

SquarefreeCore squarefree_core(const Int& n) { return squarefree_core(factorize(n)); }

int jacobi(const Int& a_in, const Int& n_in) {
  if (sgn(n_in) <= 0 || mpz_even_p(n_in.get_mpz_t()))
    throw Error(ErrorCode::invalid_argument, "jacobi: modulus must be odd and positive");
  Int n = n_in;
  Int a = a_in % n;
  if (a < 0) a += n;
  int t = 1;
  while (a != 0) {
    while (mpz_even_p(a.get_mpz_t())) {
      a >>= 1;
      const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (r == 3 || r == 5) t = -t;
    }
    swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

Int euler_phi(const Factorization& f) {
  Int phi = 1;
  for (const auto& [p, e] : f.factors) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

Int euler_phi(const Int& n) { return euler_phi(factorize(n)); }

}  // namespace pellkit
