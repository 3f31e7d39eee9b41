#include "pellkit/families.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <tuple>

namespace pellkit {

const char* to_string(Family f) {
  switch (f) {
    case Family::F1: return "F1";
    case Family::F2: return "F2";
    case Family::F3: return "F3";
    case Family::F4: return "F4";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
  for (Family f : {Family::F1, Family::F2, Family::F3, Family::F4})
    if (s == to_string(f)) return f;
  return std::nullopt;
}

RDFamily rd_family(Family f) {
  switch (f) {
    case Family::F1: return RDFamily::d2_minus_1;
    case Family::F2: return RDFamily::d2_plus_3;
    case Family::F3: return RDFamily::d2_plus_2;
    case Family::F4: return RDFamily::d2_minus_2;
  }
  throw Error(ErrorCode::internal, "rd_family: unknown family");
}

Int family_d(Family f, const Int& p, const Int& n) {
  return (f == Family::F1 || f == Family::F2) ? Int(2 * n * p) : Int((2 * n + 1) * p);
}

Int family_m(Family f, const Int& p, const Int& n) { return rd_modulus(rd_family(f), family_d(f, p, n)); }

bool congruence_holds(Family f, const Int& p) {
  const unsigned long r4 = mpz_fdiv_ui(p.get_mpz_t(), 4);
  const unsigned long r8 = mpz_fdiv_ui(p.get_mpz_t(), 8);
  switch (f) {
    case Family::F1: return r4 == 1;
    case Family::F2: return r4 == 1 || r4 == 3;
    case Family::F3: return r8 == 1 || r8 == 7;
    case Family::F4: return (r8 == 1 || r8 == 3) && p != 3;
  }
  return false;
}

FamilyMember make_member(Family f, const Int& p, const Int& n) {
  FamilyMember mem{f, p, n, family_d(f, p, n), family_m(f, p, n), {}};
  if (mem.m < 2 || isqrt(mem.m).exact)
    throw Error(ErrorCode::invalid_argument, std::string("make_member: ") + to_string(f) + " p=" + p.get_str() +
                                                 " n=" + n.get_str() + " does not give a nonsquare m >= 2");
  const Factorization fm = factorize(mem.m);
  mem.flags.p_is_prime = is_prime(p);
  mem.flags.m_is_squarefree = squarefree_core(fm).is_squarefree;
  mem.flags.congruence_ok = congruence_holds(f, p);
  mem.flags.phi_gt_4 = euler_phi(fm) > 4;
  return mem;
}

std::vector<FamilyMember> gen_members(Family f, std::uint64_t p_max, std::uint64_t n_max, GenOptions opts) {
  if (p_max < 1 || n_max < 1) throw Error(ErrorCode::invalid_argument, "gen_members: bounds must be at least 1");
  const bool n0_ok = opts.allow_n0 && (f == Family::F3 || f == Family::F4);
  std::vector<FamilyMember> out;
  for (std::uint64_t p = 2; p <= p_max; ++p) {
    const Int P = static_cast<unsigned long>(p);
    if (!is_prime(P)) continue;
    if (opts.require_congruence && !congruence_holds(f, P)) continue;
    for (std::uint64_t n = n0_ok ? 0 : 1; n <= n_max; ++n) {
      if (f == Family::F2 && n % 3 != 0) continue;
      out.push_back(make_member(f, P, Int(static_cast<unsigned long>(n))));
    }
  }
  return out;
}

VerificationReport verify_member(const FamilyMember& mem) {
  // n >= 1 keeps p below sqrt(m), so both signs go through the convergent
  // scan; the n = 0 members fall back to the class search.
  if (mem.n >= 1 && mem.p * mem.p >= mem.m)
    throw Error(ErrorCode::internal, "verify_member: p is not below sqrt(m) for m = " + mem.m.get_str());
  VerificationReport r{.member = mem, .cert_plus = solve_pm_N(mem.m, mem.p), .cert_minus = solve_pm_N(mem.m, -mem.p), .h_wide = std::nullopt};
  r.exceptional = mem.family == Family::F4 && mem.d == 3;
  if (r.exceptional) {
    const std::vector<PellPair> expected = {{2, 1}, {5, 2}};
    r.theorem_upheld = !r.cert_plus.solvable() && r.cert_minus.solutions() == expected;
  } else {
    r.theorem_upheld = !r.cert_plus.solvable() && !r.cert_minus.solvable();
  }
  if (mem.flags.m_is_squarefree) {
    r.h_wide = class_number(mem.m).h_wide;
    r.class_conclusion = *r.h_wide > 1;
  }
  return r;
}

namespace {

template <class In, class Out, class Fn>
std::vector<Out> parallel_map(const std::vector<In>& in, unsigned threads, Fn fn) {
  std::vector<std::optional<Out>> slots(in.size());
  std::vector<std::exception_ptr> errors(in.size());
  std::atomic<std::size_t> next{0};
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, in.size())));
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < in.size();) {
      try {
        slots[i].emplace(fn(in[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Out> out;
  out.reserve(in.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace

std::vector<VerificationReport> verify_members(const std::vector<FamilyMember>& members, unsigned threads) {
  auto reports = parallel_map<FamilyMember, VerificationReport>(members, threads, verify_member);
  std::sort(reports.begin(), reports.end(), [](const VerificationReport& l, const VerificationReport& r) {
    return std::tie(l.member.family, l.member.p, l.member.n) < std::tie(r.member.family, r.member.p, r.member.n);
  });
  return reports;
}

bool check_yamaguchi_hypothesis(const Int& m) {
  if (m < 1) throw Error(ErrorCode::invalid_argument, "check_yamaguchi_hypothesis: m must be positive");
  return euler_phi(m) > 4;
}

ClassConclusion class_conclusion(const Int& m) {
  const bool h_gt_1 = class_number(m).h_wide > 1;
  return {h_gt_1, h_gt_1 && check_yamaguchi_hypothesis(m)};
}

namespace {

ClassAtM class_at(const Int& m) {
  const SquarefreeCore core = squarefree_core(m);
  return {m, core.core, core.is_squarefree, class_number(core.core).h_wide};
}

}  // namespace

std::vector<TableRow> reproduce_table(int id, unsigned threads) {
  const PrintedTable& table = printed_table(id);
  return parallel_map<PrintedRow, TableRow>(table.rows, threads, [&](const PrintedRow& row) {
    TableRow r{row, family_m(table.family, row.p, row.n), {}, std::nullopt, false, false, false};
    r.at_recomputed = class_at(r.m_recomputed);
    r.match_m = r.m_recomputed == Int(static_cast<long>(row.m));
    r.match_h = r.at_recomputed.h == row.h;
    if (!r.match_m) {
      r.at_printed = class_at(Int(static_cast<long>(row.m)));
      r.match_h_at_printed_m = r.at_printed->h == row.h;
    }
    return r;
  });
}

}  // namespace pellkit
