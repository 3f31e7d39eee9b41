#include "pellkit/cfrac.hpp"

#include <map>
#include <utility>

namespace pellkit {

SurdState SurdState::make(Int P, Int Q, Int D) {
  if (sgn(D) <= 0) throw Error(ErrorCode::invalid_argument, "surd: D must be positive");
  if (isqrt(D).exact) throw Error(ErrorCode::perfect_square, "surd: D = " + D.get_str() + " is a perfect square");
  if (Q == 0) throw Error(ErrorCode::invalid_argument, "surd: Q must be nonzero");
  if (!mpz_divisible_p(Int(D - P * P).get_mpz_t(), Q.get_mpz_t()))
    throw Error(ErrorCode::invalid_argument, "surd: Q does not divide D - P^2");
  return {std::move(P), std::move(Q), std::move(D)};
}

Int SurdState::floor_value(const Int& root) const {
  // sqrt(D) is irrational, so (P + sqrt(D))/Q is never an integer
  Int a;
  if (Q > 0) {
    Int num = P + root;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
  } else {
    Int num = P + root + 1;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
  }
  return a;
}

SurdState SurdState::next(const Int& a) const {
  SurdState s;
  s.P = a * Q - P;
  s.Q = (D - s.P * s.P) / Q;
  s.D = D;
  return s;
}

const Int& SurdExpansion::term(std::size_t k) const {
  if (k < preperiod.size()) return preperiod[k];
  return period[(k - preperiod.size()) % period.size()];
}

SurdExpansion expand_surd(const SurdState& start) {
  const Int root = isqrt(start.D).root;
  std::map<std::pair<Int, Int>, std::size_t> seen;
  std::vector<Int> terms;
  SurdState s = start;
  for (;;) {
    auto [it, fresh] = seen.try_emplace({s.P, s.Q}, terms.size());
    if (!fresh) {
      const std::size_t start_of_period = it->second;
      SurdExpansion e;
      e.preperiod.assign(terms.begin(), terms.begin() + start_of_period);
      e.period.assign(terms.begin() + start_of_period, terms.end());
      return e;
    }
    Int a = s.floor_value(root);
    s = s.next(a);
    terms.push_back(std::move(a));
  }
}

CFExpansion cf_sqrt(const Int& m) {
  if (m < 2) throw Error(ErrorCode::invalid_argument, "cf_sqrt: m must be at least 2");
  auto [root, exact] = isqrt(m);
  if (exact) throw Error(ErrorCode::perfect_square, "cf_sqrt: " + m.get_str() + " is a perfect square");

  // After a0 the state (P, Q) of sqrt(m) is reduced, so the expansion is
  // purely periodic from index 1 and returns first to (a0, m - a0^2).
  CFExpansion e{m, root, {}};
  const SurdState first{root, m - root * root, m};
  SurdState s = first;
  do {
    Int a = s.floor_value(root);
    s = s.next(a);
    e.period.push_back(std::move(a));
  } while (!(s.P == first.P && s.Q == first.Q));
  return e;
}

std::size_t period_length(const Int& m) { return cf_sqrt(m).period_length(); }

ConvergentStream::ConvergentStream(const CFExpansion& exp) : exp_(&exp) {}

Convergent ConvergentStream::next() {
  const Int& a = exp_->term(k_);
  Int p = a * p_prev_ + p_prev2_;
  Int q = a * q_prev_ + q_prev2_;
  p_prev2_ = std::move(p_prev_);
  q_prev2_ = std::move(q_prev_);
  p_prev_ = p;
  q_prev_ = q;
  Convergent c{k_++, std::move(p), std::move(q), 0};
  c.pell_value = c.numerator * c.numerator - exp_->m * c.denominator * c.denominator;
  return c;
}

std::vector<Convergent> convergents(const CFExpansion& exp, std::size_t count) {
  if (count == 0) throw Error(ErrorCode::invalid_argument, "convergents: count must be positive");
  std::vector<Convergent> out;
  out.reserve(count);
  ConvergentStream stream(exp);
  for (std::size_t i = 0; i < count; ++i) out.push_back(stream.next());
  return out;
}

}  // namespace pellkit
