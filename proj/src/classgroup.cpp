#include "pellkit/classgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "pellkit/pell.hpp"

namespace pellkit {

namespace {

using i128 = __int128;

std::int64_t isqrt64(std::int64_t D) {
  auto r = static_cast<std::int64_t>(isqrt(Int(static_cast<long>(D))).root.get_si());
  return r;
}

// floor division for a positive divisor
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t pos_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void check_discriminant(std::int64_t D, const char* what) {
  if (D <= 0) throw Error(ErrorCode::invalid_argument, std::string(what) + ": discriminant must be positive");
  if (D > kMaxDiscriminant)
    throw Error(ErrorCode::out_of_range, std::string(what) + ": discriminant " + std::to_string(D) + " exceeds 10^12");
  if (D % 4 != 0 && D % 4 != 1)
    throw Error(ErrorCode::invalid_argument, std::string(what) + ": discriminant must be 0 or 1 mod 4");
  const std::int64_t s = isqrt64(D);
  if (s * s == D) throw Error(ErrorCode::perfect_square, std::string(what) + ": discriminant is a perfect square");
}

std::int64_t to_i64(const Int& v, const char* what) {
  if (v > kMaxDiscriminant || v < -kMaxDiscriminant)
    throw Error(ErrorCode::out_of_range, std::string(what) + ": " + v.get_str() + " exceeds 10^12");
  return v.get_si();
}

bool is_primitive(const IndefiniteForm& f) {
  return std::gcd(std::gcd(f.a, f.b), f.c) == 1;
}

IndefiniteForm with_c(std::int64_t a, std::int64_t b, std::int64_t D) {
  const i128 num = static_cast<i128>(b) * b - D;
  return {a, b, static_cast<std::int64_t>(num / (4 * static_cast<i128>(a)))};
}

// Normalized rho: b' = -b (mod 2|c|), taken in (sqrt(D) - 2|c|, sqrt(D)) when
// |c| < sqrt(D), else in (-|c|, |c|].
IndefiniteForm rho_step(const IndefiniteForm& f, std::int64_t D, std::int64_t s) {
  const std::int64_t c = f.c;
  const std::int64_t two_c = 2 * std::llabs(c);
  std::int64_t b;
  if (std::llabs(c) <= s) {
    // largest b <= s with b = -b_old (mod 2|c|)
    b = s - pos_mod(s + f.b, two_c);
  } else {
    b = pos_mod(-f.b, two_c);
    if (b > std::llabs(c)) b -= two_c;
  }
  return with_c(c, b, D);
}

}  // namespace

std::int64_t IndefiniteForm::discriminant() const {
  return static_cast<std::int64_t>(static_cast<i128>(b) * b - 4 * static_cast<i128>(a) * c);
}

std::string IndefiniteForm::to_string() const {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

bool is_reduced(const IndefiniteForm& f) {
  const std::int64_t D = f.discriminant();
  if (D <= 0) return false;
  const std::int64_t s = isqrt64(D);
  const std::int64_t two_a = 2 * std::llabs(f.a);
  // sqrt(D) is irrational: x < sqrt(D) <=> x <= s, x > sqrt(D) <=> x >= s + 1
  return f.b > 0 && f.b <= s && two_a + f.b >= s + 1 && two_a - f.b <= s;
}

IndefiniteForm rho(const IndefiniteForm& f) {
  if (!is_reduced(f)) throw Error(ErrorCode::invalid_argument, "rho: " + f.to_string() + " is not reduced");
  const std::int64_t D = f.discriminant();
  return rho_step(f, D, isqrt64(D));
}

IndefiniteForm reduce(const IndefiniteForm& f) {
  if (f.a == 0 || f.c == 0) throw Error(ErrorCode::invalid_argument, "reduce: degenerate form");
  const i128 D128 = static_cast<i128>(f.b) * f.b - 4 * static_cast<i128>(f.a) * f.c;
  if (D128 <= 0 || D128 > kMaxDiscriminant)
    throw Error(ErrorCode::invalid_argument, "reduce: discriminant must be positive and at most 10^12");
  const auto D = static_cast<std::int64_t>(D128);
  check_discriminant(D, "reduce");
  if (!is_primitive(f)) throw Error(ErrorCode::invalid_argument, "reduce: " + f.to_string() + " is not primitive");
  const std::int64_t s = isqrt64(D);
  IndefiniteForm g = f;
  while (!is_reduced(g)) g = rho_step(g, D, s);
  return g;
}

std::vector<IndefiniteForm> reduced_forms(std::int64_t D) {
  check_discriminant(D, "reduced_forms");
  const std::int64_t s = isqrt64(D);
  std::vector<IndefiniteForm> out;
  for (std::int64_t b = (D % 2 == 0) ? 2 : 1; b <= s; b += 2) {
    const std::int64_t n = (D - b * b) / 4;  // |a c|
    // s + 1 - b <= 2|a| <= s + b
    const std::int64_t lo = std::max<std::int64_t>(1, floor_div(s + 1 - b + 1, 2));
    const std::int64_t hi = (s + b) / 2;
    for (std::int64_t a = lo; a <= hi; ++a) {
      if (n % a != 0) continue;
      const std::int64_t c = n / a;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      out.push_back({a, b, -c});
      out.push_back({-a, b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<IndefiniteForm>> form_cycles(std::int64_t D) {
  const std::vector<IndefiniteForm> forms = reduced_forms(D);
  const std::int64_t s = isqrt64(D);
  std::vector<char> visited(forms.size(), 0);
  auto index_of = [&](const IndefiniteForm& f) {
    auto it = std::lower_bound(forms.begin(), forms.end(), f);
    if (it == forms.end() || *it != f)
      throw Error(ErrorCode::internal, "form_cycles: rho left the reduced set at " + f.to_string());
    return static_cast<std::size_t>(it - forms.begin());
  };
  std::vector<std::vector<IndefiniteForm>> cycles;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (visited[i]) continue;
    std::vector<IndefiniteForm> cycle;
    std::size_t j = i;
    while (!visited[j]) {
      visited[j] = 1;
      cycle.push_back(forms[j]);
      j = index_of(rho_step(forms[j], D, s));
    }
    if (j != i) throw Error(ErrorCode::internal, "form_cycles: rho is not a permutation");
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

bool is_fundamental_discriminant(const Int& D) {
  if (D < 2) return false;
  const unsigned long r = mpz_fdiv_ui(D.get_mpz_t(), 4);
  if (r == 1) return squarefree_core(D).is_squarefree;
  if (r != 0) return false;
  const Int m = D / 4;
  const unsigned long mr = mpz_fdiv_ui(m.get_mpz_t(), 4);
  return (mr == 2 || mr == 3) && squarefree_core(m).is_squarefree;
}

Int discriminant_of(const Int& m) {
  if (m < 2) throw Error(ErrorCode::invalid_argument, "discriminant_of: m must be at least 2");
  if (!squarefree_core(m).is_squarefree)
    throw Error(ErrorCode::not_squarefree, "discriminant_of: " + m.get_str() + " is not square-free");
  return mpz_fdiv_ui(m.get_mpz_t(), 4) == 1 ? m : Int(4 * m);
}

namespace {

std::int64_t fundamental_d64(const Int& D, const char* what) {
  const std::int64_t d = to_i64(D, what);
  check_discriminant(d, what);
  if (!is_fundamental_discriminant(D))
    throw Error(ErrorCode::invalid_argument, std::string(what) + ": " + D.get_str() + " is not a fundamental discriminant");
  return d;
}

}  // namespace

std::int64_t narrow_class_number(const Int& D) {
  return static_cast<std::int64_t>(form_cycles(fundamental_d64(D, "narrow_class_number")).size());
}

bool principal_cycle_is_ambiguous(const Int& D) {
  const std::int64_t d = fundamental_d64(D, "principal_cycle_is_ambiguous");
  // x^2 + b x y - ((D - b^2)/4) y^2 with b = D (mod 2)
  const IndefiniteForm principal = reduce(with_c(1, d % 2, d));
  const IndefiniteForm negative = reduce(with_c(-1, d % 2, d));
  IndefiniteForm f = principal;
  do {
    if (f == negative) return true;
    f = rho(f);
  } while (f != principal);
  return false;
}

ClassData class_number(const Int& m) {
  const Int D = discriminant_of(m);
  ClassData data{m, D, narrow_class_number(D), 0, unit_norm(m)};
  if (data.unit_norm == 1) {
    if (data.h_narrow % 2 != 0)
      throw Error(ErrorCode::internal, "class_number: odd narrow class number with a norm +1 unit for m = " + m.get_str());
    data.h_wide = data.h_narrow / 2;
  } else {
    data.h_wide = data.h_narrow;
  }
  return data;
}

}  // namespace pellkit
