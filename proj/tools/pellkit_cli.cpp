// pellkit command-line interface. Talks to the library only through the C API.
//
// Exit codes: 0 success / solutions found, 1 proven negative or table
// mismatch, 2 usage or input error, 3 theorem counterexample.

#include <chrono>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "pellkit/pellkit.h"
#include "render.hpp"

namespace {

using namespace pellkit::cli;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(pk_status s) {
  if (s != PK_OK) throw UsageError(std::string(pk_status_name(s)) + ": " + pk_last_error());
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
template <class T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, Deleter<T, Free>>;

using Expansion = Handle<pk_expansion, pk_expansion_free>;
using Certificate = Handle<pk_certificate, pk_certificate_free>;
using Unit = Handle<pk_unit, pk_unit_free>;
using ClassData = Handle<pk_class_data, pk_class_data_free>;
using Factorization = Handle<pk_factorization, pk_factorization_free>;
using Verification = Handle<pk_verification, pk_verification_free>;
using Table = Handle<pk_table, pk_table_free>;

struct Output {
  Format format = Format::human;

  // Emits machine formats; returns false when the caller should print its
  // own human rendering.
  bool machine(const Document& doc) const {
    if (format == Format::human) return false;
    render_machine(doc, format, std::cout, std::cerr);
    return true;
  }
};

std::string signed_norm(int n) { return n > 0 ? "+1" : "-1"; }

// cf

int cmd_cf(const Output& out, const std::string& m) {
  pk_expansion* raw = nullptr;
  check(pk_cf_sqrt(m.c_str(), &raw));
  Expansion e(raw);
  std::vector<Integer> period;
  for (std::size_t i = 0; i < pk_expansion_period_length(e.get()); ++i)
    period.push_back({pk_expansion_period_term(e.get(), i)});

  Document doc;
  doc.record = {{"m", integer(pk_expansion_m(e.get()))},
                {"a0", integer(pk_expansion_a0(e.get()))},
                {"period", period},
                {"period_length", integer(static_cast<long long>(period.size()))}};
  if (!out.machine(doc)) {
    std::string terms;
    for (std::size_t i = 0; i < period.size(); ++i) terms += (i ? ", " : "") + period[i].digits;
    std::cout << "sqrt(" << pk_expansion_m(e.get()) << ") = [" << pk_expansion_a0(e.get()) << "; " << terms
              << "], period " << period.size() << '\n';
  }
  return kExitOk;
}

// solve

std::string mode_name(pk_solve_mode m) {
  switch (m) {
    case PK_SOLVE_CONVERGENT_SCAN: return "convergent_scan";
    case PK_SOLVE_CLASS_SEARCH: return "class_search";
    case PK_SOLVE_BOUNDED: return "bounded";
  }
  return "unknown";
}

bool square_below(const std::string& N, const std::string& m) {
  // N^2 < m decided by the library: the convergent scan accepts exactly these
  pk_certificate* raw = nullptr;
  if (pk_solve(m.c_str(), N.c_str(), &raw) != PK_OK) return false;
  Certificate c(raw);
  return pk_certificate_mode(c.get()) == PK_SOLVE_CONVERGENT_SCAN;
}

int cmd_solve(const Output& out, const std::string& m, const std::string& N, const std::string& ymax) {
  pk_certificate* raw = nullptr;
  if (!ymax.empty() && !square_below(N, m))
    check(pk_brute_force(m.c_str(), N.c_str(), ymax.c_str(), &raw));
  else
    check(pk_solve(m.c_str(), N.c_str(), &raw));
  Certificate c(raw);

  const std::size_t count = pk_certificate_solution_count(c.get());
  const pk_solve_mode mode = pk_certificate_mode(c.get());
  const bool complete = pk_certificate_complete(c.get());

  Document doc;
  doc.columns = {"m", "N", "x", "y"};
  for (std::size_t i = 0; i < count; ++i)
    doc.rows.push_back({integer(pk_certificate_m(c.get())), integer(pk_certificate_target(c.get())),
                        integer(pk_certificate_x(c.get(), i)), integer(pk_certificate_y(c.get(), i))});
  doc.summary = {{"m", integer(pk_certificate_m(c.get()))},
                 {"N", integer(pk_certificate_target(c.get()))},
                 {"method", mode_name(mode)},
                 {"complete", complete},
                 {"solutions", integer(static_cast<long long>(count))}};
  if (mode == PK_SOLVE_BOUNDED)
    doc.summary.emplace_back("ymax", integer(pk_certificate_scan_length(c.get())));
  else if (count == 0)
    doc.summary.emplace_back("scan_length", integer(pk_certificate_scan_length(c.get())));

  if (!out.machine(doc)) {
    const std::string scanned = pk_certificate_scan_length(c.get());
    if (count > 0) {
      for (std::size_t i = 0; i < count; ++i)
        std::cout << (i ? ", " : "") << '(' << pk_certificate_x(c.get(), i) << ',' << pk_certificate_y(c.get(), i)
                  << ')';
      if (mode == PK_SOLVE_BOUNDED) std::cout << " (bounded search, y <= " << scanned << "; incomplete beyond ymax)";
      std::cout << '\n';
    } else if (mode == PK_SOLVE_CONVERGENT_SCAN) {
      std::cout << "no solution (complete scan, " << scanned << " convergents)\n";
    } else if (mode == PK_SOLVE_CLASS_SEARCH) {
      std::cout << "no solution (complete class search, " << scanned << " values of y)\n";
    } else {
      std::cout << "no solution with y <= " << scanned << " (bounded search, incomplete beyond ymax)\n";
    }
  }
  return count > 0 ? kExitOk : kExitNegative;
}

// unit

int cmd_unit(const Output& out, const std::string& value, const std::string& rd) {
  pk_unit* raw = nullptr;
  if (rd.empty()) {
    check(pk_fundamental_unit(value.c_str(), &raw));
  } else {
    pk_rd_family f;
    if (rd == "D2MINUS1" || rd == "F1") f = PK_RD_D2_MINUS_1;
    else if (rd == "D2PLUS3" || rd == "F2") f = PK_RD_D2_PLUS_3;
    else if (rd == "D2PLUS2" || rd == "F3") f = PK_RD_D2_PLUS_2;
    else if (rd == "D2MINUS2" || rd == "F4") f = PK_RD_D2_MINUS_2;
    else throw UsageError("unknown family '" + rd + "'");
    check(pk_rd_unit(f, value.c_str(), &raw));
  }
  Unit u(raw);
  Document doc;
  doc.record = {{"m", integer(pk_unit_m(u.get()))},
                {"a", integer(pk_unit_a(u.get()))},
                {"b", integer(pk_unit_b(u.get()))},
                {"denom", integer(pk_unit_denom(u.get()))},
                {"norm", integer(pk_unit_norm(u.get()))}};
  if (!out.machine(doc)) {
    std::string b = pk_unit_b(u.get());
    std::string s = std::string(pk_unit_a(u.get())) + (b[0] == '-' ? " - " : " + ") +
                    (b[0] == '-' ? b.substr(1) : b) + "*sqrt(" + pk_unit_m(u.get()) + ")";
    if (pk_unit_denom(u.get()) == 2) s = "(" + s + ")/2";
    std::cout << s << ", norm " << signed_norm(pk_unit_norm(u.get())) << '\n';
  }
  return kExitOk;
}

// classno

int cmd_classno(const Output& out, const std::string& m) {
  pk_factorization* fraw = nullptr;
  check(pk_factorize(m.c_str(), &fraw));
  Factorization f(fraw);
  const std::string core = pk_factorization_core(f.get());
  const std::string square = pk_factorization_square_part(f.get());
  if (core == "1") throw UsageError(m + " is a perfect square; Q(sqrt(m)) is not a real quadratic field");

  pk_class_data* raw = nullptr;
  check(pk_class_number(core.c_str(), &raw));
  ClassData c(raw);

  Document doc;
  doc.record = {{"m", integer(m)},
                {"core", integer(core)},
                {"square_part", integer(square)},
                {"D", integer(pk_class_data_discriminant(c.get()))},
                {"h", integer(pk_class_data_h_wide(c.get()))},
                {"h_narrow", integer(pk_class_data_h_narrow(c.get()))},
                {"unit_norm", integer(pk_class_data_unit_norm(c.get()))}};
  if (!out.machine(doc)) {
    if (!pk_factorization_is_squarefree(f.get()))
      std::cout << m << " = " << square << "²·" << core << "; h computed for " << core << '\n';
    std::cout << "h=" << pk_class_data_h_wide(c.get()) << " (h_narrow=" << pk_class_data_h_narrow(c.get())
              << ", unit norm " << signed_norm(pk_class_data_unit_norm(c.get()))
              << ", D=" << pk_class_data_discriminant(c.get()) << ")\n";
  }
  return kExitOk;
}

// verify

std::string solutions_token(const pk_certificate* c) {
  const std::size_t n = pk_certificate_solution_count(c);
  if (n == 0) return "none";
  std::string s;
  for (std::size_t i = 0; i < n; ++i)
    s += std::string(i ? ";" : "") + pk_certificate_x(c, i) + ":" + pk_certificate_y(c, i);
  return s;
}

int cmd_verify(const Output& out, const std::string& family, unsigned long long pmax, unsigned long long nmax,
               bool congruence, bool allow_n0, unsigned threads) {
  pk_family f;
  if (family == "F1") f = PK_F1;
  else if (family == "F2") f = PK_F2;
  else if (family == "F3") f = PK_F3;
  else if (family == "F4") f = PK_F4;
  else throw UsageError("unknown family '" + family + "' (expected F1..F4)");
  unsigned flags = 0;
  if (congruence) flags |= PK_VERIFY_REQUIRE_CONGRUENCE;
  if (allow_n0) flags |= PK_VERIFY_ALLOW_N0;

  pk_verification* raw = nullptr;
  check(pk_verify(f, pmax, nmax, flags, threads, &raw));
  Verification v(raw);

  Document doc;
  doc.columns = {"family", "p", "n", "d", "m", "p_prime", "squarefree", "congruence", "phi_gt_4",
                 "plus", "minus", "exceptional", "upheld", "h", "h_gt_1"};
  long long upheld = 0, exceptions = 0, counterexamples = 0, skipped = 0, h_gt_1 = 0;
  for (std::size_t i = 0; i < pk_verification_count(v.get()); ++i) {
    pk_verify_row r;
    check(pk_verification_row(v.get(), i, &r));
    upheld += r.theorem_upheld;
    exceptions += r.exceptional && r.theorem_upheld;
    counterexamples += !r.theorem_upheld;
    skipped += r.h_wide < 0;
    h_gt_1 += r.class_conclusion;
    doc.rows.push_back({family, integer(r.p), integer(r.n), integer(r.d), integer(r.m), bool(r.p_is_prime),
                        bool(r.m_is_squarefree), bool(r.congruence_ok), bool(r.phi_gt_4),
                        solutions_token(r.cert_plus), solutions_token(r.cert_minus), bool(r.exceptional),
                        bool(r.theorem_upheld), r.h_wide < 0 ? Cell{} : integer(r.h_wide),
                        r.h_wide < 0 ? Cell{} : Cell{bool(r.class_conclusion)}});
  }
  doc.summary = {{"family", family},
                 {"members", integer(static_cast<long long>(doc.rows.size()))},
                 {"upheld", integer(upheld)},
                 {"exceptions", integer(exceptions)},
                 {"counterexamples", integer(counterexamples)},
                 {"class_number_skipped", integer(skipped)},
                 {"h_gt_1", integer(h_gt_1)}};
  if (!out.machine(doc)) render_human_table(doc, std::cout);
  return counterexamples > 0 ? kExitCounterexample : kExitOk;
}

// tables

std::string table_flag(const pk_table_row& r) {
  std::string s;
  auto add = [&](const std::string& t) { s += (s.empty() ? "" : ";") + t; };
  if (r.starred) add("starred");
  if (!r.match_m) add("m_typo");
  if (!r.m_squarefree) add("not_squarefree");
  if (r.match_m && !r.match_h) add("h_mismatch");
  return s.empty() ? "ok" : s;
}

int cmd_tables(const Output& out, const std::string& which, unsigned threads) {
  std::vector<int> ids;
  if (which == "all") ids = {1, 2, 3, 4};
  else if (which.size() == 1 && which[0] >= '1' && which[0] <= '4') ids = {which[0] - '0'};
  else throw UsageError("table id must be 1, 2, 3, 4 or all");

  Document doc;
  doc.columns = {"table", "p", "n", "m_printed", "m_recomputed", "h_printed", "h_computed", "core",
                 "match_m", "match_h", "h_at_printed_m", "flag"};
  long long typos = 0, mismatches = 0;
  for (int id : ids) {
    pk_table* raw = nullptr;
    check(pk_reproduce_table(id, threads, &raw));
    Table t(raw);
    for (std::size_t i = 0; i < pk_table_count(t.get()); ++i) {
      pk_table_row r;
      check(pk_table_row_at(t.get(), i, &r));
      typos += !r.match_m;
      mismatches += r.match_m && !r.match_h;
      doc.rows.push_back({integer(id), integer(r.p), integer(r.n), integer(r.m_printed), integer(r.m_recomputed),
                          integer(r.h_printed), integer(r.h_computed), integer(r.core), bool(r.match_m),
                          bool(r.match_h), r.h_at_printed_m < 0 ? Cell{} : integer(r.h_at_printed_m),
                          table_flag(r)});
    }
  }
  doc.summary = {{"rows", integer(static_cast<long long>(doc.rows.size()))},
                 {"m_typo_rows", integer(typos)},
                 {"h_mismatches", integer(mismatches)}};
  if (!out.machine(doc)) render_human_table(doc, std::cout);
  return mismatches > 0 ? kExitNegative : kExitOk;
}

int cmd_seed_tables(const Output& out) {
  Document doc;
  doc.columns = {"table", "family", "p", "n", "m", "h", "starred"};
  for (int id = 1; id <= 4; ++id) {
    pk_table* raw = nullptr;
    check(pk_printed_table(id, &raw));
    Table t(raw);
    for (std::size_t i = 0; i < pk_table_count(t.get()); ++i) {
      pk_table_row r;
      check(pk_table_row_at(t.get(), i, &r));
      doc.rows.push_back({integer(id), "F" + std::to_string(pk_table_family(t.get())), integer(r.p),
                          integer(r.n), integer(r.m_printed), integer(r.h_printed), bool(r.starred)});
    }
  }
  if (!out.machine(doc)) render_human_table(doc, std::cout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pellkit: Pell-type equations, units and class numbers of real quadratic fields"};
  app.set_version_flag("--version", pk_version());

  std::string format_name = "human";
  bool timing = false;
  bool seed_tables = false;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"human", "csv", "json", "markdown"}));
  app.add_flag("--timing", timing, "Report elapsed time on stderr");
  app.add_flag("--seed-tables", seed_tables, "Print the embedded printed tables and exit");
  app.require_subcommand(0, 1);

  std::string cf_m;
  auto* cf = app.add_subcommand("cf", "Continued fraction of sqrt(m)");
  cf->add_option("m", cf_m, "Positive nonsquare integer")->required();

  std::string solve_m, solve_n, solve_ymax;
  auto* solve = app.add_subcommand("solve", "Decide x^2 - m y^2 = N");
  solve->add_option("m", solve_m, "Positive nonsquare integer")->required();
  auto* n_pos = solve->add_option("N", solve_n, "Nonzero right-hand side (use -- before a negative value)");
  auto* n_opt = solve->add_option("--rhs", solve_n, "Right-hand side, e.g. --rhs=-3");
  n_pos->excludes(n_opt);
  solve->add_option("--ymax", solve_ymax, "Brute-force bound when N^2 >= m");

  std::string unit_value, unit_family;
  auto* unit = app.add_subcommand("unit", "Fundamental unit of Q(sqrt(m)), or a closed-form unit with --rd");
  unit->add_option("value", unit_value, "m, or d when --rd is given")->required();
  unit->add_option("--rd", unit_family, "Closed form: D2MINUS1, D2PLUS3, D2PLUS2, D2MINUS2 (or F1..F4)");

  std::string classno_m;
  auto* classno = app.add_subcommand("classno", "Class number of Q(sqrt(m))");
  classno->add_option("m", classno_m, "Integer m >= 2")->required();

  std::string verify_family;
  unsigned long long pmax = 20, nmax = 5;
  bool congruence = false, allow_n0 = false;
  unsigned threads = 0;
  auto* verify = app.add_subcommand("verify", "Check the non-solvability statements over a family");
  verify->add_option("family", verify_family, "F1, F2, F3 or F4")->required();
  verify->add_option("--pmax", pmax, "Largest prime p")->check(CLI::PositiveNumber);
  verify->add_option("--nmax", nmax, "Largest n")->check(CLI::PositiveNumber);
  verify->add_flag("--congruence", congruence, "Keep only p meeting the class-number congruence");
  verify->add_flag("--allow-n0", allow_n0, "Admit n = 0 (F3/F4), exercising d = p");
  verify->add_option("--threads", threads, "Worker threads (0 = hardware)");

  std::string table_id = "all";
  auto* tables = app.add_subcommand("tables", "Reproduce the printed class-number tables");
  tables->add_option("table", table_id, "1, 2, 3, 4 or all");
  tables->add_option("--threads", threads, "Worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Output out;
  out.format = *parse_format(format_name);
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (seed_tables) code = cmd_seed_tables(out);
    else if (*cf) code = cmd_cf(out, cf_m);
    else if (*solve) {
      if (solve_n.empty()) throw UsageError("solve: N is required (positional or --rhs)");
      code = cmd_solve(out, solve_m, solve_n, solve_ymax);
    } else if (*unit) code = cmd_unit(out, unit_value, unit_family);
    else if (*classno) code = cmd_classno(out, classno_m);
    else if (*verify) code = cmd_verify(out, verify_family, pmax, nmax, congruence, allow_n0, threads);
    else if (*tables) code = cmd_tables(out, table_id, threads);
    else {
      std::cerr << app.help();
      code = kExitUsage;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = kExitUsage;
  }
  if (timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cerr << "elapsed_ms: " << ms.count() << '\n';
  }
  return code;
}
