#include "pellkit/pellkit.h"

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "pellkit/families.hpp"

using namespace pellkit;

struct pk_factorization {
  Factorization f;
  std::vector<std::string> primes;
  std::string core, square_part;
  bool squarefree;
};

struct pk_expansion {
  CFExpansion exp;
  std::string m, a0;
  std::vector<std::string> period;
  std::unique_ptr<ConvergentStream> stream;
  std::vector<std::array<std::string, 3>> convergents;
};

struct pk_certificate {
  std::string m, target, scan_length;
  pk_solve_mode mode;
  bool complete;
  std::vector<std::pair<std::string, std::string>> solutions;
};

struct pk_unit {
  std::string a, b, m;
  unsigned denom;
  int norm;
};

struct pk_class_data {
  std::string m, D;
  long long h_narrow, h_wide;
  int unit_norm;
};

struct pk_verification {
  struct Row {
    pk_family family;
    std::string p, n, d, m;
    MemberFlags flags;
    pk_certificate plus, minus;
    bool exceptional, upheld;
    long long h_wide;
    bool class_conclusion;
  };
  std::vector<Row> rows;
};

struct pk_table {
  struct Row {
    pk_table_row view;
    std::string m_recomputed, core, square_part;
  };
  pk_family family;
  std::vector<Row> rows;
};

namespace {

thread_local std::string g_last_error;

pk_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_argument: return PK_ERR_INVALID_ARGUMENT;
    case ErrorCode::perfect_square: return PK_ERR_PERFECT_SQUARE;
    case ErrorCode::not_squarefree: return PK_ERR_NOT_SQUAREFREE;
    case ErrorCode::factorization_incomplete: return PK_ERR_FACTORIZATION_INCOMPLETE;
    case ErrorCode::out_of_range: return PK_ERR_OUT_OF_RANGE;
    case ErrorCode::internal: return PK_ERR_INTERNAL;
  }
  return PK_ERR_INTERNAL;
}

template <class Fn>
pk_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return PK_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PK_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return PK_ERR_INTERNAL;
  }
}

pk_status null_arg(const char* what) {
  g_last_error = std::string(what) + ": null argument";
  return PK_ERR_NULL_POINTER;
}

Int parse_int(const char* s, const char* what) {
  if (!s) throw Error(ErrorCode::invalid_argument, std::string(what) + ": null integer");
  std::string str(s);
  std::size_t i = (!str.empty() && (str[0] == '-' || str[0] == '+')) ? 1 : 0;
  if (i == str.size()) throw Error(ErrorCode::invalid_argument, std::string(what) + ": '" + str + "' is not an integer");
  for (std::size_t k = i; k < str.size(); ++k)
    if (str[k] < '0' || str[k] > '9')
      throw Error(ErrorCode::invalid_argument, std::string(what) + ": '" + str + "' is not an integer");
  if (str[0] == '+') str.erase(0, 1);
  return Int(str, 10);
}

pk_certificate to_handle(const PellCertificate& c) {
  pk_certificate h;
  h.m = c.m.get_str();
  h.target = c.target.get_str();
  h.mode = c.method == SolveMethod::convergent_scan ? PK_SOLVE_CONVERGENT_SCAN : PK_SOLVE_CLASS_SEARCH;
  h.complete = true;
  if (auto* none = std::get_if<NoSolution>(&c.outcome)) h.scan_length = none->scan_length.get_str();
  for (const auto& s : c.solutions()) h.solutions.emplace_back(s.x.get_str(), s.y.get_str());
  if (h.scan_length.empty()) h.scan_length = "0";
  return h;
}

pk_unit to_handle(const QuadraticInteger& q) {
  return {q.a().get_str(), q.b().get_str(), q.m().get_str(), q.denom(), q.norm() > 0 ? 1 : -1};
}

}  // namespace

extern "C" {

const char* pk_status_name(pk_status s) {
  switch (s) {
    case PK_OK: return "ok";
    case PK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PK_ERR_PERFECT_SQUARE: return "perfect square";
    case PK_ERR_NOT_SQUAREFREE: return "not square-free";
    case PK_ERR_FACTORIZATION_INCOMPLETE: return "factorization incomplete";
    case PK_ERR_OUT_OF_RANGE: return "out of range";
    case PK_ERR_NULL_POINTER: return "null pointer";
    case PK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pk_last_error(void) { return g_last_error.c_str(); }

const char* pk_version(void) { return "0.1.0"; }

// factorization

pk_status pk_factorize(const char* n, pk_factorization** out) {
  if (!out) return null_arg("pk_factorize");
  *out = nullptr;
  return guarded([&] {
    auto h = std::make_unique<pk_factorization>();
    h->f = factorize(parse_int(n, "pk_factorize"));
    for (const auto& pp : h->f.factors) h->primes.push_back(pp.prime.get_str());
    const SquarefreeCore core = squarefree_core(h->f);
    h->core = core.core.get_str();
    h->square_part = core.square_root_part.get_str();
    h->squarefree = core.is_squarefree;
    *out = h.release();
  });
}

void pk_factorization_free(pk_factorization* f) { delete f; }
size_t pk_factorization_count(const pk_factorization* f) { return f ? f->primes.size() : 0; }
const char* pk_factorization_prime(const pk_factorization* f, size_t i) {
  return f && i < f->primes.size() ? f->primes[i].c_str() : nullptr;
}
unsigned pk_factorization_exponent(const pk_factorization* f, size_t i) {
  return f && i < f->f.factors.size() ? f->f.factors[i].exponent : 0;
}
const char* pk_factorization_core(const pk_factorization* f) { return f ? f->core.c_str() : nullptr; }
const char* pk_factorization_square_part(const pk_factorization* f) { return f ? f->square_part.c_str() : nullptr; }
int pk_factorization_is_squarefree(const pk_factorization* f) { return f && f->squarefree; }

pk_status pk_is_prime(const char* n, int* out) {
  if (!out) return null_arg("pk_is_prime");
  return guarded([&] { *out = is_prime(parse_int(n, "pk_is_prime")); });
}

pk_status pk_jacobi(const char* a, const char* n, int* out) {
  if (!out) return null_arg("pk_jacobi");
  return guarded([&] { *out = jacobi(parse_int(a, "pk_jacobi"), parse_int(n, "pk_jacobi")); });
}

// continued fractions

pk_status pk_cf_sqrt(const char* m, pk_expansion** out) {
  if (!out) return null_arg("pk_cf_sqrt");
  *out = nullptr;
  return guarded([&] {
    auto h = std::make_unique<pk_expansion>();
    h->exp = cf_sqrt(parse_int(m, "pk_cf_sqrt"));
    h->m = h->exp.m.get_str();
    h->a0 = h->exp.a0.get_str();
    for (const auto& a : h->exp.period) h->period.push_back(a.get_str());
    h->stream = std::make_unique<ConvergentStream>(h->exp);
    *out = h.release();
  });
}

void pk_expansion_free(pk_expansion* e) { delete e; }
const char* pk_expansion_m(const pk_expansion* e) { return e ? e->m.c_str() : nullptr; }
const char* pk_expansion_a0(const pk_expansion* e) { return e ? e->a0.c_str() : nullptr; }
size_t pk_expansion_period_length(const pk_expansion* e) { return e ? e->period.size() : 0; }
const char* pk_expansion_period_term(const pk_expansion* e, size_t i) {
  return e && i < e->period.size() ? e->period[i].c_str() : nullptr;
}

pk_status pk_expansion_convergent(pk_expansion* e, size_t k, const char** p, const char** q, const char** v) {
  if (!e || !p || !q || !v) return null_arg("pk_expansion_convergent");
  return guarded([&] {
    while (e->convergents.size() <= k) {
      Convergent c = e->stream->next();
      e->convergents.push_back({c.numerator.get_str(), c.denominator.get_str(), c.pell_value.get_str()});
    }
    *p = e->convergents[k][0].c_str();
    *q = e->convergents[k][1].c_str();
    *v = e->convergents[k][2].c_str();
  });
}

// Pell-type equations

pk_status pk_solve(const char* m, const char* N, pk_certificate** out) {
  if (!out) return null_arg("pk_solve");
  *out = nullptr;
  return guarded([&] {
    auto c = solve_pm_N(parse_int(m, "pk_solve"), parse_int(N, "pk_solve"));
    *out = new pk_certificate(to_handle(c));
  });
}

pk_status pk_brute_force(const char* m, const char* N, const char* y_max, pk_certificate** out) {
  if (!out) return null_arg("pk_brute_force");
  *out = nullptr;
  return guarded([&] {
    const Int mm = parse_int(m, "pk_brute_force");
    const Int NN = parse_int(N, "pk_brute_force");
    const Int ym = parse_int(y_max, "pk_brute_force");
    if (mm < 1) throw Error(ErrorCode::invalid_argument, "pk_brute_force: m must be positive");
    if (NN == 0) throw Error(ErrorCode::invalid_argument, "pk_brute_force: N must be nonzero");
    auto h = std::make_unique<pk_certificate>();
    h->m = mm.get_str();
    h->target = NN.get_str();
    h->mode = PK_SOLVE_BOUNDED;
    h->complete = false;
    h->scan_length = ym.get_str();
    for (const auto& s : brute_force_solve(mm, NN, ym)) h->solutions.emplace_back(s.x.get_str(), s.y.get_str());
    *out = h.release();
  });
}

void pk_certificate_free(pk_certificate* c) { delete c; }
const char* pk_certificate_m(const pk_certificate* c) { return c ? c->m.c_str() : nullptr; }
const char* pk_certificate_target(const pk_certificate* c) { return c ? c->target.c_str() : nullptr; }
pk_solve_mode pk_certificate_mode(const pk_certificate* c) { return c ? c->mode : PK_SOLVE_BOUNDED; }
int pk_certificate_complete(const pk_certificate* c) { return c && c->complete; }
const char* pk_certificate_scan_length(const pk_certificate* c) { return c ? c->scan_length.c_str() : nullptr; }
size_t pk_certificate_solution_count(const pk_certificate* c) { return c ? c->solutions.size() : 0; }
const char* pk_certificate_x(const pk_certificate* c, size_t i) {
  return c && i < c->solutions.size() ? c->solutions[i].first.c_str() : nullptr;
}
const char* pk_certificate_y(const pk_certificate* c, size_t i) {
  return c && i < c->solutions.size() ? c->solutions[i].second.c_str() : nullptr;
}

// units

pk_status pk_fundamental_unit(const char* m, pk_unit** out) {
  if (!out) return null_arg("pk_fundamental_unit");
  *out = nullptr;
  return guarded([&] { *out = new pk_unit(to_handle(fundamental_unit(parse_int(m, "pk_fundamental_unit")))); });
}

pk_status pk_pell_fundamental(const char* m, pk_unit** out) {
  if (!out) return null_arg("pk_pell_fundamental");
  *out = nullptr;
  return guarded([&] {
    const Int mm = parse_int(m, "pk_pell_fundamental");
    const PellPair s = pell_fundamental(mm);
    *out = new pk_unit(to_handle(QuadraticInteger::make(s.x, s.y, mm)));
  });
}

pk_status pk_neg_pell(const char* m, pk_unit** out) {
  if (!out) return null_arg("pk_neg_pell");
  *out = nullptr;
  return guarded([&] {
    const Int mm = parse_int(m, "pk_neg_pell");
    if (auto s = neg_pell(mm)) *out = new pk_unit(to_handle(QuadraticInteger::make(s->x, s->y, mm)));
  });
}

pk_status pk_rd_unit(pk_rd_family family, const char* d, pk_unit** out) {
  if (!out) return null_arg("pk_rd_unit");
  *out = nullptr;
  return guarded([&] {
    RDFamily f;
    switch (family) {
      case PK_RD_D2_MINUS_1: f = RDFamily::d2_minus_1; break;
      case PK_RD_D2_PLUS_3: f = RDFamily::d2_plus_3; break;
      case PK_RD_D2_PLUS_2: f = RDFamily::d2_plus_2; break;
      case PK_RD_D2_MINUS_2: f = RDFamily::d2_minus_2; break;
      default: throw Error(ErrorCode::invalid_argument, "pk_rd_unit: unknown family");
    }
    *out = new pk_unit(to_handle(rd_unit(f, parse_int(d, "pk_rd_unit"))));
  });
}

void pk_unit_free(pk_unit* u) { delete u; }
const char* pk_unit_a(const pk_unit* u) { return u ? u->a.c_str() : nullptr; }
const char* pk_unit_b(const pk_unit* u) { return u ? u->b.c_str() : nullptr; }
const char* pk_unit_m(const pk_unit* u) { return u ? u->m.c_str() : nullptr; }
unsigned pk_unit_denom(const pk_unit* u) { return u ? u->denom : 0; }
int pk_unit_norm(const pk_unit* u) { return u ? u->norm : 0; }

// class numbers

pk_status pk_class_number(const char* m, pk_class_data** out) {
  if (!out) return null_arg("pk_class_number");
  *out = nullptr;
  return guarded([&] {
    const ClassData c = class_number(parse_int(m, "pk_class_number"));
    *out = new pk_class_data{c.m.get_str(), c.D.get_str(), c.h_narrow, c.h_wide, c.unit_norm};
  });
}

void pk_class_data_free(pk_class_data* c) { delete c; }
const char* pk_class_data_m(const pk_class_data* c) { return c ? c->m.c_str() : nullptr; }
const char* pk_class_data_discriminant(const pk_class_data* c) { return c ? c->D.c_str() : nullptr; }
long long pk_class_data_h_narrow(const pk_class_data* c) { return c ? c->h_narrow : 0; }
long long pk_class_data_h_wide(const pk_class_data* c) { return c ? c->h_wide : 0; }
int pk_class_data_unit_norm(const pk_class_data* c) { return c ? c->unit_norm : 0; }

pk_status pk_class_conclusion(const char* m, int* h_gt_1, int* implied) {
  if (!h_gt_1 || !implied) return null_arg("pk_class_conclusion");
  return guarded([&] {
    const ClassConclusion c = class_conclusion(parse_int(m, "pk_class_conclusion"));
    *h_gt_1 = c.h_gt_1;
    *implied = c.implied_by_lemma;
  });
}

// families

pk_status pk_verify(pk_family family, unsigned long long p_max, unsigned long long n_max, unsigned flags,
                    unsigned threads, pk_verification** out) {
  if (!out) return null_arg("pk_verify");
  *out = nullptr;
  return guarded([&] {
    if (family < PK_F1 || family > PK_F4) throw Error(ErrorCode::invalid_argument, "pk_verify: unknown family");
    GenOptions opts;
    opts.require_congruence = flags & PK_VERIFY_REQUIRE_CONGRUENCE;
    opts.allow_n0 = flags & PK_VERIFY_ALLOW_N0;
    const auto members = gen_members(static_cast<Family>(family), p_max, n_max, opts);
    auto h = std::make_unique<pk_verification>();
    for (const auto& r : verify_members(members, threads)) {
      h->rows.push_back({family, r.member.p.get_str(), r.member.n.get_str(), r.member.d.get_str(),
                         r.member.m.get_str(), r.member.flags, to_handle(r.cert_plus), to_handle(r.cert_minus),
                         r.exceptional, r.theorem_upheld, r.h_wide ? *r.h_wide : -1, r.class_conclusion});
    }
    *out = h.release();
  });
}

void pk_verification_free(pk_verification* v) { delete v; }
size_t pk_verification_count(const pk_verification* v) { return v ? v->rows.size() : 0; }

pk_status pk_verification_row(const pk_verification* v, size_t i, pk_verify_row* row) {
  if (!v || !row) return null_arg("pk_verification_row");
  if (i >= v->rows.size()) {
    g_last_error = "pk_verification_row: index out of range";
    return PK_ERR_OUT_OF_RANGE;
  }
  const auto& r = v->rows[i];
  *row = {r.family,          r.p.c_str(),     r.n.c_str(),           r.d.c_str(),
          r.m.c_str(),       r.flags.p_is_prime, r.flags.m_is_squarefree, r.flags.congruence_ok,
          r.flags.phi_gt_4,  &r.plus,         &r.minus,              r.exceptional,
          r.upheld,          r.h_wide,        r.class_conclusion};
  return PK_OK;
}

// tables

pk_status pk_reproduce_table(int table_id, unsigned threads, pk_table** out) {
  if (!out) return null_arg("pk_reproduce_table");
  *out = nullptr;
  return guarded([&] {
    auto h = std::make_unique<pk_table>();
    h->family = static_cast<pk_family>(printed_table(table_id).family);
    for (const auto& r : reproduce_table(table_id, threads)) {
      pk_table::Row row;
      row.m_recomputed = r.m_recomputed.get_str();
      row.core = r.at_recomputed.core.get_str();
      row.square_part = Int(sqrt(Int(r.m_recomputed / r.at_recomputed.core))).get_str();
      row.view = {r.printed.p,
                  r.printed.n,
                  r.printed.m,
                  r.printed.h,
                  r.printed.starred,
                  nullptr,
                  nullptr,
                  nullptr,
                  r.at_recomputed.squarefree,
                  r.at_recomputed.h,
                  r.match_m,
                  r.match_h,
                  r.at_printed ? r.at_printed->h : -1,
                  r.match_h_at_printed_m};
      h->rows.push_back(std::move(row));
    }
    *out = h.release();
  });
}

pk_status pk_printed_table(int table_id, pk_table** out) {
  if (!out) return null_arg("pk_printed_table");
  *out = nullptr;
  return guarded([&] {
    const PrintedTable& t = printed_table(table_id);
    auto h = std::make_unique<pk_table>();
    h->family = static_cast<pk_family>(t.family);
    for (const auto& r : t.rows) {
      pk_table::Row row{};
      row.view.p = r.p;
      row.view.n = r.n;
      row.view.m_printed = r.m;
      row.view.h_printed = r.h;
      row.view.starred = r.starred;
      row.view.h_at_printed_m = -1;
      h->rows.push_back(std::move(row));
    }
    *out = h.release();
  });
}

void pk_table_free(pk_table* t) { delete t; }
pk_family pk_table_family(const pk_table* t) { return t ? t->family : PK_F1; }
size_t pk_table_count(const pk_table* t) { return t ? t->rows.size() : 0; }

pk_status pk_table_row_at(const pk_table* t, size_t i, pk_table_row* row) {
  if (!t || !row) return null_arg("pk_table_row_at");
  if (i >= t->rows.size()) {
    g_last_error = "pk_table_row_at: index out of range";
    return PK_ERR_OUT_OF_RANGE;
  }
  const auto& r = t->rows[i];
  *row = r.view;
  if (!r.m_recomputed.empty()) {
    row->m_recomputed = r.m_recomputed.c_str();
    row->core = r.core.c_str();
    row->square_part = r.square_part.c_str();
  }
  return PK_OK;
}

}  // extern "C"
