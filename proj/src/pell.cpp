#include "pellkit/pell.hpp"

#include <algorithm>

namespace pellkit {

namespace {

void require_nonsquare(const Int& m, const char* what) {
  if (m < 2) throw Error(ErrorCode::invalid_argument, std::string(what) + ": m must be at least 2");
  if (isqrt(m).exact) throw Error(ErrorCode::perfect_square, std::string(what) + ": " + m.get_str() + " is a perfect square");
}

bool is_odd(const Int& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

}  // namespace

QuadraticInteger QuadraticInteger::make(Int a, Int b, Int m, unsigned denom) {
  require_nonsquare(m, "quadratic integer");
  if (denom != 1 && denom != 2) throw Error(ErrorCode::invalid_argument, "quadratic integer: denominator must be 1 or 2");
  QuadraticInteger q;
  q.a_ = std::move(a);
  q.b_ = std::move(b);
  q.m_ = std::move(m);
  q.denom_ = denom;
  if (denom == 2) {
    if (mpz_fdiv_ui(q.m_.get_mpz_t(), 4) != 1 || is_odd(q.a_) != is_odd(q.b_))
      throw Error(ErrorCode::invalid_argument, "quadratic integer: (" + q.a_.get_str() + " + " + q.b_.get_str() +
                                                   " sqrt(" + q.m_.get_str() + "))/2 is not an algebraic integer");
  }
  q.normalize();
  return q;
}

void QuadraticInteger::normalize() {
  if (denom_ == 2 && !is_odd(a_) && !is_odd(b_)) {
    a_ /= 2;
    b_ /= 2;
    denom_ = 1;
  }
}

Int QuadraticInteger::norm() const { return (a_ * a_ - m_ * b_ * b_) / (denom_ * denom_); }

QuadraticInteger QuadraticInteger::conjugate() const { return make(a_, -b_, m_, denom_); }

QuadraticInteger QuadraticInteger::operator*(const QuadraticInteger& o) const {
  if (m_ != o.m_) throw Error(ErrorCode::invalid_argument, "quadratic integer: product of different fields");
  Int a = a_ * o.a_ + m_ * b_ * o.b_;
  Int b = a_ * o.b_ + b_ * o.a_;
  unsigned d = denom_ * o.denom_;
  if (d == 4) {
    // product of two half-integral elements lies in the order again
    a /= 2;
    b /= 2;
    d = 2;
  }
  return make(std::move(a), std::move(b), m_, d);
}

std::string QuadraticInteger::to_string() const {
  std::string s = a_.get_str() + (sgn(b_) < 0 ? " - " : " + ") + Int(abs(b_)).get_str() + "*sqrt(" + m_.get_str() + ")";
  return denom_ == 1 ? s : "(" + s + ")/2";
}

const std::vector<PellPair>& PellCertificate::solutions() const {
  static const std::vector<PellPair> none;
  if (auto* s = std::get_if<Solutions>(&outcome)) return s->pairs;
  return none;
}

namespace {

// First convergent with pell value +1 or -1, at index l-1 of the period.
Convergent first_unit_convergent(const CFExpansion& exp) {
  ConvergentStream stream(exp);
  Convergent c;
  for (std::size_t k = 0; k < exp.period_length(); ++k) c = stream.next();
  if (abs(c.pell_value) != 1) throw Error(ErrorCode::internal, "pell: period end does not carry a unit");
  return c;
}

}  // namespace

PellPair pell_fundamental(const Int& m) {
  require_nonsquare(m, "pell_fundamental");
  const CFExpansion exp = cf_sqrt(m);
  Convergent c = first_unit_convergent(exp);
  if (c.pell_value == 1) return {c.numerator, c.denominator};
  // odd period: square the norm -1 solution
  return {c.numerator * c.numerator + m * c.denominator * c.denominator, 2 * c.numerator * c.denominator};
}

std::optional<PellPair> neg_pell(const Int& m) {
  require_nonsquare(m, "neg_pell");
  const CFExpansion exp = cf_sqrt(m);
  if (exp.period_length() % 2 == 0) return std::nullopt;
  Convergent c = first_unit_convergent(exp);
  return PellPair{c.numerator, c.denominator};
}

QuadraticInteger fundamental_unit(const Int& m) {
  require_nonsquare(m, "fundamental_unit");
  if (!squarefree_core(m).is_squarefree)
    throw Error(ErrorCode::not_squarefree, "fundamental_unit: " + m.get_str() + " is not square-free");

  if (mpz_fdiv_ui(m.get_mpz_t(), 4) != 1) {
    const Convergent c = first_unit_convergent(cf_sqrt(m));
    return QuadraticInteger::make(c.numerator, c.denominator, m);
  }

  // Maximal order Z[w], w = (1 + sqrt(m))/2. A unit x + y w with y > 0 has
  // x/y a convergent of w - 1, i.e. x = p_k - q_k for a convergent p_k/q_k
  // of w, giving (2p_k - q_k + q_k sqrt(m)) / 2.
  const SurdExpansion exp = expand_surd(SurdState::make(1, 2, m));
  const std::size_t limit = exp.preperiod.size() + 2 * exp.period.size();
  Int p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
  for (std::size_t k = 0; k < limit; ++k) {
    const Int& a = exp.term(k);
    Int p = a * p_prev + p_prev2;
    Int q = a * q_prev + q_prev2;
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
    Int x = 2 * p - q;
    Int n = x * x - m * q * q;  // 4 * norm
    if (n == 4 || n == -4) return QuadraticInteger::make(std::move(x), std::move(q), m, 2);
  }
  // Z[sqrt(m)] always has a unit; reaching here means the w expansion missed it.
  const Convergent c = first_unit_convergent(cf_sqrt(m));
  return QuadraticInteger::make(c.numerator, c.denominator, m);
}

int unit_norm(const Int& m) { return fundamental_unit(m).norm() > 0 ? 1 : -1; }

const char* to_string(RDFamily f) {
  switch (f) {
    case RDFamily::d2_minus_1: return "D2MINUS1";
    case RDFamily::d2_plus_3: return "D2PLUS3";
    case RDFamily::d2_plus_2: return "D2PLUS2";
    case RDFamily::d2_minus_2: return "D2MINUS2";
  }
  return "?";
}

std::optional<RDFamily> rd_family_from_string(const std::string& s) {
  for (RDFamily f : {RDFamily::d2_minus_1, RDFamily::d2_plus_3, RDFamily::d2_plus_2, RDFamily::d2_minus_2})
    if (s == to_string(f)) return f;
  return std::nullopt;
}

Int rd_modulus(RDFamily family, const Int& d) {
  const Int d2 = d * d;
  switch (family) {
    case RDFamily::d2_minus_1: return d2 - 1;
    case RDFamily::d2_plus_3: return d2 + 3;
    case RDFamily::d2_plus_2: return d2 + 2;
    case RDFamily::d2_minus_2: return d2 - 2;
  }
  throw Error(ErrorCode::internal, "rd_modulus: unknown family");
}

QuadraticInteger rd_unit(RDFamily family, const Int& d) {
  auto reject = [&](const char* why) -> QuadraticInteger {
    throw Error(ErrorCode::invalid_argument,
                std::string("rd_unit: d = ") + d.get_str() + " incompatible with " + to_string(family) + " (" + why + ")");
  };
  const Int m = rd_modulus(family, d);
  const Int d2 = d * d;
  switch (family) {
    case RDFamily::d2_minus_1:
      if (d < 2 || is_odd(d)) return reject("d must be even and >= 2");
      return QuadraticInteger::make(d, 1, m);
    case RDFamily::d2_plus_3: {
      if (d < 3 || !mpz_divisible_ui_p(d.get_mpz_t(), 3)) return reject("d must be a positive multiple of 3");
      const Int a = 2 * d2 + 3;
      const Int b = 2 * d;
      if (!mpz_divisible_ui_p(a.get_mpz_t(), 3) || !mpz_divisible_ui_p(b.get_mpz_t(), 3))
        throw Error(ErrorCode::internal, "rd_unit: division by 3 is not exact");
      return QuadraticInteger::make(a / 3, b / 3, m);
    }
    case RDFamily::d2_plus_2:
      if (d < 3) return reject("d must be >= 3");
      return QuadraticInteger::make(d2 + 1, d, m);
    case RDFamily::d2_minus_2:
      if (d < 3) return reject("d must be >= 3");
      return QuadraticInteger::make(d2 - 1, d, m);
  }
  throw Error(ErrorCode::internal, "rd_unit: unknown family");
}

namespace {

// (x + y sqrt(m)) * e^(+-1)
PellPair times_unit(const PellPair& s, const PellPair& e, const Int& m, bool inverse) {
  const Int ey = inverse ? Int(-e.y) : e.y;
  return {s.x * e.x + m * s.y * ey, s.y * e.x + s.x * ey};
}

bool in_quadrant(const PellPair& s) { return sgn(s.x) >= 0 && sgn(s.y) > 0; }

bool is_orbit_start(const PellPair& s, const PellPair& eps, const Int& m) {
  return in_quadrant(s) && !in_quadrant(times_unit(s, eps, m, true));
}

void sort_unique(std::vector<PellPair>& v) {
  std::sort(v.begin(), v.end(), [](const PellPair& l, const PellPair& r) {
    return l.y != r.y ? l.y < r.y : l.x < r.x;
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

PellCertificate convergent_scan(const Int& m, const Int& N, const PellPair& eps) {
  // Solutions with gcd(x, y) = f are f times primitive solutions of N / f^2,
  // and those are convergents by Lagrange's criterion since |N| < sqrt(m).
  struct Scaled {
    Int reduced;
    Int f;
  };
  std::vector<Scaled> targets;
  for (Int f = 1; f * f <= abs(N); ++f) {
    const Int f2 = f * f;
    if (mpz_divisible_p(N.get_mpz_t(), f2.get_mpz_t())) targets.push_back({N / f2, f});
  }

  const CFExpansion exp = cf_sqrt(m);
  const std::size_t scan = 2 * exp.period_length();
  std::vector<PellPair> reps;
  ConvergentStream stream(exp);
  for (std::size_t k = 0; k < scan; ++k) {
    const Convergent c = stream.next();
    for (const auto& t : targets) {
      if (c.pell_value != t.reduced) continue;
      PellPair s{c.numerator * t.f, c.denominator * t.f};
      if (is_orbit_start(s, eps, m)) reps.push_back(std::move(s));
    }
  }
  sort_unique(reps);
  PellCertificate cert{m, N, SolveMethod::convergent_scan, NoSolution{static_cast<unsigned long>(scan)}};
  if (!reps.empty()) cert.outcome = Solutions{std::move(reps)};
  return cert;
}

PellCertificate class_search(const Int& m, const Int& N, const PellPair& eps) {
  const Int y_bound = nagell_y_bound(eps, N);
  std::vector<PellPair> reps;
  Int t, u;
  for (Int v = 0; v <= y_bound; ++v) {
    t = m * v * v + N;
    if (sgn(t) < 0 || !mpz_perfect_square_p(t.get_mpz_t())) continue;
    mpz_sqrt(u.get_mpz_t(), t.get_mpz_t());
    for (const Int& x : {Int(u), Int(-u)}) {
      PellPair s{x, v};
      // pick the sign making x + y sqrt(m) > 0, then climb into the quadrant
      const bool negative = (sgn(s.x) <= 0 && sgn(s.y) <= 0) ||
                            (sgn(s.x) < 0 && s.x * s.x > m * s.y * s.y) ||
                            (sgn(s.y) < 0 && m * s.y * s.y > s.x * s.x);
      if (negative) s = {-s.x, -s.y};
      while (!in_quadrant(s)) s = times_unit(s, eps, m, false);
      reps.push_back(std::move(s));
    }
  }
  sort_unique(reps);
  PellCertificate cert{m, N, SolveMethod::class_search, NoSolution{y_bound + 1}};
  if (!reps.empty()) cert.outcome = Solutions{std::move(reps)};
  return cert;
}

}  // namespace

Int nagell_y_bound(const PellPair& eps, const Int& N) {
  // N > 0: y <= y1 sqrt(N / (2(x1 + 1)));  N < 0: y <= y1 sqrt(|N| / (2(x1 - 1)))
  const Int denom = 2 * (sgn(N) > 0 ? Int(eps.x + 1) : Int(eps.x - 1));
  const Int radicand = eps.y * eps.y * abs(N) / denom;
  return isqrt(radicand).root;
}

PellCertificate solve_pm_N(const Int& m, const Int& N) {
  require_nonsquare(m, "solve_pm_N");
  if (N == 0) throw Error(ErrorCode::invalid_argument, "solve_pm_N: N must be nonzero");
  const PellPair eps = pell_fundamental(m);
  return N * N < m ? convergent_scan(m, N, eps) : class_search(m, N, eps);
}

std::vector<PellPair> brute_force_solve(const Int& m, const Int& N, const Int& y_max) {
  if (y_max < 1) throw Error(ErrorCode::invalid_argument, "brute_force_solve: y_max must be positive");
  std::vector<PellPair> out;
  Int t, root;
  for (Int y = 1; y <= y_max; ++y) {
    t = m * y * y + N;
    if (sgn(t) < 0) continue;
    if (mpz_perfect_square_p(t.get_mpz_t())) {
      mpz_sqrt(root.get_mpz_t(), t.get_mpz_t());
      out.push_back({root, y});
    }
  }
  return out;
}

}  // namespace pellkit
