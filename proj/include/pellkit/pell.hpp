#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pellkit/cfrac.hpp"

namespace pellkit {

/// (a + b*sqrt(m)) / denom with denom in {1, 2}. A half-integral value needs
/// m = 1 (mod 4) and a = b (mod 2); values that are integral are always
/// stored with denom 1.
class QuadraticInteger {
 public:
  static QuadraticInteger make(Int a, Int b, Int m, unsigned denom = 1);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& m() const { return m_; }
  unsigned denom() const { return denom_; }

  Int norm() const;
  QuadraticInteger conjugate() const;

  QuadraticInteger operator*(const QuadraticInteger& o) const;
  bool operator==(const QuadraticInteger& o) const = default;

  std::string to_string() const;

 private:
  QuadraticInteger() = default;
  void normalize();

  Int a_, b_, m_;
  unsigned denom_ = 1;
};

struct PellPair {
  Int x;
  Int y;

  bool operator==(const PellPair&) const = default;
};

struct Solutions {
  std::vector<PellPair> pairs;  // sorted by y
};

struct NoSolution {
  Int scan_length;  // convergents examined, or y values for a class search
};

enum class SolveMethod {
  convergent_scan,  // 0 < |N| < sqrt(m): two periods of convergents
  class_search,     // |N| >= sqrt(m): y up to Nagell's bound on class representatives
};

struct PellCertificate {
  Int m;
  Int target;
  SolveMethod method;
  std::variant<Solutions, NoSolution> outcome;

  bool solvable() const { return std::holds_alternative<Solutions>(outcome); }
  const std::vector<PellPair>& solutions() const;
};

/// Least positive solution of x^2 - m y^2 = 1.
PellPair pell_fundamental(const Int& m);

/// Least positive solution of x^2 - m y^2 = -1; present iff the period of
/// sqrt(m) is odd.
std::optional<PellPair> neg_pell(const Int& m);

/// Fundamental unit > 1 of the maximal order of Q(sqrt(m)), m square-free.
QuadraticInteger fundamental_unit(const Int& m);

int unit_norm(const Int& m);

/// Richaud-Degert shapes m = d^2 + r covered by the closed-form units.
enum class RDFamily { d2_minus_1, d2_plus_3, d2_plus_2, d2_minus_2 };

const char* to_string(RDFamily f);
std::optional<RDFamily> rd_family_from_string(const std::string& s);

/// d^2 + r for the family's r.
Int rd_modulus(RDFamily family, const Int& d);

/// Closed-form unit of norm +1:
///   d^2-1 (d even):   d + sqrt(m)
///   d^2+3 (3 | d):    ((2d^2+3) + 2d sqrt(m)) / 3
///   d^2+2 (d >= 3):   (d^2+1) + d sqrt(m)
///   d^2-2 (d >= 3):   (d^2-1) + d sqrt(m)
QuadraticInteger rd_unit(RDFamily family, const Int& d);

/// Decides x^2 - m y^2 = N for N != 0. With |N| < sqrt(m) it scans two
/// periods of convergents of sqrt(m) (non-primitive solutions come from
/// N / f^2); otherwise it searches y up to Nagell's bound, which every
/// solution class meets. Either way the answer is complete.
///
/// Reported pairs have x >= 0, y > 0 and are the least such member of their
/// orbit under the Pell unit e: dividing by e leaves that quadrant.
PellCertificate solve_pm_N(const Int& m, const Int& N);

/// Largest y Nagell's bound allows for a class representative of N, given
/// the fundamental Pell solution.
Int nagell_y_bound(const PellPair& eps, const Int& N);

/// Every (x, y) with 1 <= y <= y_max, x >= 0 and x^2 - m y^2 = N.
std::vector<PellPair> brute_force_solve(const Int& m, const Int& N, const Int& y_max);

}  // namespace pellkit
