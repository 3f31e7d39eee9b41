#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pellkit/classgroup.hpp"
#include "pellkit/pell.hpp"

namespace pellkit {

/// F1: (2np)^2 - 1,  F2: (2np)^2 + 3 with 3 | n,
/// F3: ((2n+1)p)^2 + 2,  F4: ((2n+1)p)^2 - 2.
enum class Family { F1 = 1, F2 = 2, F3 = 3, F4 = 4 };

const char* to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);
RDFamily rd_family(Family f);

/// d = 2np for F1/F2, (2n+1)p for F3/F4.
Int family_d(Family f, const Int& p, const Int& n);
Int family_m(Family f, const Int& p, const Int& n);

/// Congruence hypothesis on p of the class-number statement for the family:
/// F1 p = 1 (4); F2 p odd; F3 p = +-1 (8); F4 p = 1, 3 (8) and p != 3.
bool congruence_holds(Family f, const Int& p);

struct MemberFlags {
  bool p_is_prime = false;
  bool m_is_squarefree = false;
  bool congruence_ok = false;
  bool phi_gt_4 = false;
};

struct FamilyMember {
  Family family;
  Int p;
  Int n;
  Int d;
  Int m;
  MemberFlags flags;
};

FamilyMember make_member(Family f, const Int& p, const Int& n);

struct GenOptions {
  bool require_congruence = false;
  /// Admit n = 0 for F3/F4, which puts d = p (the d = 3 exceptional case).
  bool allow_n0 = false;
};

/// Members over primes p <= p_max and n <= n_max, sorted by (p, n).
std::vector<FamilyMember> gen_members(Family f, std::uint64_t p_max, std::uint64_t n_max, GenOptions opts = {});

struct VerificationReport {
  FamilyMember member;
  PellCertificate cert_plus;
  PellCertificate cert_minus;
  bool exceptional = false;  // F4 with d = 3
  bool theorem_upheld = false;
  std::optional<std::int64_t> h_wide;  // absent when m is not square-free
  bool class_conclusion = false;       // h_wide > 1
};

VerificationReport verify_member(const FamilyMember& member);

/// Verifies members on up to `threads` workers; output sorted by (family, p, n).
std::vector<VerificationReport> verify_members(const std::vector<FamilyMember>& members, unsigned threads = 0);

bool check_yamaguchi_hypothesis(const Int& m);

struct ClassConclusion {
  bool h_gt_1;
  bool implied_by_lemma;  // h > 1 and phi(m) > 4
};

ClassConclusion class_conclusion(const Int& m);

// Printed tables.

struct PrintedRow {
  int p;
  int n;
  std::int64_t m;
  std::int64_t h;
  bool starred;
};

struct PrintedTable {
  int id;
  Family family;
  std::vector<PrintedRow> rows;
};

const std::vector<PrintedTable>& printed_tables();
const PrintedTable& printed_table(int id);

struct ClassAtM {
  Int m;
  Int core;
  bool squarefree;
  std::int64_t h;  // class number of Q(sqrt(core))
};

struct TableRow {
  PrintedRow printed;
  Int m_recomputed;
  ClassAtM at_recomputed;
  std::optional<ClassAtM> at_printed;  // only when the printed m differs
  bool match_m;
  bool match_h;                  // printed h vs h at the recomputed m
  bool match_h_at_printed_m;     // printed h vs h at the printed m, typo rows only
};

std::vector<TableRow> reproduce_table(int id, unsigned threads = 0);

}  // namespace pellkit
