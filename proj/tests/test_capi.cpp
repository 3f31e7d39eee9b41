#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <thread>

#include "pellkit/pellkit.h"

namespace {

std::string s(const char* p) { return p ? p : "<null>"; }

}  // namespace

TEST_CASE("status names and version") {
  CHECK(s(pk_status_name(PK_OK)) == "ok");
  CHECK(s(pk_status_name(PK_ERR_PERFECT_SQUARE)) == "perfect square");
  CHECK(std::strlen(pk_version()) > 0);
}

TEST_CASE("factorization handle") {
  pk_factorization* f = nullptr;
  REQUIRE(pk_factorize("7227", &f) == PK_OK);
  CHECK(pk_factorization_count(f) == 3);
  CHECK(s(pk_factorization_prime(f, 0)) == "3");
  CHECK(pk_factorization_exponent(f, 0) == 2);
  CHECK(s(pk_factorization_prime(f, 2)) == "73");
  CHECK(pk_factorization_prime(f, 3) == nullptr);
  CHECK(s(pk_factorization_core(f)) == "803");
  CHECK(s(pk_factorization_square_part(f)) == "3");
  CHECK_FALSE(pk_factorization_is_squarefree(f));
  pk_factorization_free(f);

  f = reinterpret_cast<pk_factorization*>(0x1);
  CHECK(pk_factorize("0", &f) == PK_ERR_INVALID_ARGUMENT);
  CHECK(f == nullptr);
  CHECK(s(pk_last_error()).find("factorize") != std::string::npos);
  CHECK(pk_factorize("12x", &f) == PK_ERR_INVALID_ARGUMENT);
  CHECK(pk_factorize("", &f) == PK_ERR_INVALID_ARGUMENT);
  CHECK(pk_factorize(nullptr, &f) == PK_ERR_INVALID_ARGUMENT);
  CHECK(pk_factorize("12", nullptr) == PK_ERR_NULL_POINTER);
  pk_factorization_free(nullptr);
}

TEST_CASE("primality and jacobi") {
  int v = -5;
  REQUIRE(pk_is_prime("53", &v) == PK_OK);
  CHECK(v == 1);
  REQUIRE(pk_is_prime("+7227", &v) == PK_OK);
  CHECK(v == 0);
  CHECK(pk_is_prime("618970019642690137449562111", &v) == PK_ERR_OUT_OF_RANGE);
  REQUIRE(pk_jacobi("-1", "5", &v) == PK_OK);
  CHECK(v == 1);
  CHECK(pk_jacobi("2", "4", &v) == PK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("continued fraction handle") {
  pk_expansion* e = nullptr;
  REQUIRE(pk_cf_sqrt("7", &e) == PK_OK);
  CHECK(s(pk_expansion_m(e)) == "7");
  CHECK(s(pk_expansion_a0(e)) == "2");
  REQUIRE(pk_expansion_period_length(e) == 4);
  CHECK(s(pk_expansion_period_term(e, 3)) == "4");
  CHECK(pk_expansion_period_term(e, 4) == nullptr);
  const char *p, *q, *v;
  REQUIRE(pk_expansion_convergent(e, 3, &p, &q, &v) == PK_OK);
  CHECK(s(p) == "8");
  CHECK(s(q) == "3");
  CHECK(s(v) == "1");
  REQUIRE(pk_expansion_convergent(e, 0, &p, &q, &v) == PK_OK);
  CHECK(s(p) == "2");
  REQUIRE(pk_expansion_convergent(e, 60, &p, &q, &v) == PK_OK);
  CHECK(std::strlen(p) > 18);
  pk_expansion_free(e);

  CHECK(pk_cf_sqrt("16", &e) == PK_ERR_PERFECT_SQUARE);
  CHECK(pk_cf_sqrt("1", &e) == PK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("certificates") {
  pk_certificate* c = nullptr;
  REQUIRE(pk_solve("399", "5", &c) == PK_OK);
  CHECK(pk_certificate_mode(c) == PK_SOLVE_CONVERGENT_SCAN);
  CHECK(pk_certificate_complete(c));
  CHECK(pk_certificate_solution_count(c) == 0);
  CHECK(s(pk_certificate_scan_length(c)) == "4");
  pk_certificate_free(c);

  REQUIRE(pk_solve("7", "-3", &c) == PK_OK);
  CHECK(pk_certificate_mode(c) == PK_SOLVE_CLASS_SEARCH);
  CHECK(s(pk_certificate_target(c)) == "-3");
  REQUIRE(pk_certificate_solution_count(c) == 2);
  CHECK(s(pk_certificate_x(c, 1)) == "5");
  CHECK(s(pk_certificate_y(c, 1)) == "2");
  CHECK(pk_certificate_x(c, 2) == nullptr);
  pk_certificate_free(c);

  REQUIRE(pk_brute_force("10", "7", "100", &c) == PK_OK);
  CHECK(pk_certificate_mode(c) == PK_SOLVE_BOUNDED);
  CHECK_FALSE(pk_certificate_complete(c));
  CHECK(s(pk_certificate_scan_length(c)) == "100");
  pk_certificate_free(c);

  CHECK(pk_solve("7", "0", &c) == PK_ERR_INVALID_ARGUMENT);
  CHECK(pk_brute_force("7", "-3", "0", &c) == PK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("units") {
  pk_unit* u = nullptr;
  REQUIRE(pk_fundamental_unit("5", &u) == PK_OK);
  CHECK(s(pk_unit_a(u)) == "1");
  CHECK(s(pk_unit_b(u)) == "1");
  CHECK(pk_unit_denom(u) == 2);
  CHECK(pk_unit_norm(u) == -1);
  pk_unit_free(u);

  REQUIRE(pk_rd_unit(PK_RD_D2_PLUS_3, "18", &u) == PK_OK);
  CHECK(s(pk_unit_a(u)) == "217");
  CHECK(s(pk_unit_b(u)) == "12");
  CHECK(s(pk_unit_m(u)) == "327");
  pk_unit_free(u);

  REQUIRE(pk_pell_fundamental("7", &u) == PK_OK);
  CHECK(s(pk_unit_a(u)) == "8");
  pk_unit_free(u);

  REQUIRE(pk_neg_pell("13", &u) == PK_OK);
  REQUIRE(u != nullptr);
  CHECK(s(pk_unit_a(u)) == "18");
  CHECK(pk_unit_norm(u) == -1);
  pk_unit_free(u);

  REQUIRE(pk_neg_pell("399", &u) == PK_OK);
  CHECK(u == nullptr);

  CHECK(pk_fundamental_unit("12", &u) == PK_ERR_NOT_SQUAREFREE);
  CHECK(pk_rd_unit(PK_RD_D2_MINUS_1, "3", &u) == PK_ERR_INVALID_ARGUMENT);
  CHECK(pk_rd_unit(static_cast<pk_rd_family>(9), "3", &u) == PK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("class numbers") {
  pk_class_data* c = nullptr;
  REQUIRE(pk_class_number("399", &c) == PK_OK);
  CHECK(s(pk_class_data_discriminant(c)) == "1596");
  CHECK(pk_class_data_h_narrow(c) == 16);
  CHECK(pk_class_data_h_wide(c) == 8);
  CHECK(pk_class_data_unit_norm(c) == 1);
  pk_class_data_free(c);
  CHECK(pk_class_number("7227", &c) == PK_ERR_NOT_SQUAREFREE);

  int h = -1, implied = -1;
  REQUIRE(pk_class_conclusion("5", &h, &implied) == PK_OK);
  CHECK(h == 0);
  CHECK(implied == 0);
  REQUIRE(pk_class_conclusion("399", &h, &implied) == PK_OK);
  CHECK(h == 1);
  CHECK(implied == 1);
}

TEST_CASE("verification") {
  pk_verification* v = nullptr;
  REQUIRE(pk_verify(PK_F4, 3, 1, PK_VERIFY_ALLOW_N0, 2, &v) == PK_OK);
  REQUIRE(pk_verification_count(v) == 4);  // p in {2, 3}, n in {0, 1}
  pk_verify_row r;
  bool saw_exception = false;
  for (size_t i = 0; i < pk_verification_count(v); ++i) {
    REQUIRE(pk_verification_row(v, i, &r) == PK_OK);
    if (r.exceptional) {
      saw_exception = true;
      CHECK(s(r.m) == "7");
      CHECK(r.theorem_upheld);
      CHECK(pk_certificate_solution_count(r.cert_minus) == 2);
    }
  }
  CHECK(saw_exception);
  CHECK(pk_verification_row(v, 99, &r) == PK_ERR_OUT_OF_RANGE);
  pk_verification_free(v);
  CHECK(pk_verify(static_cast<pk_family>(7), 3, 1, 0, 1, &v) == PK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("tables") {
  pk_table* t = nullptr;
  REQUIRE(pk_printed_table(3, &t) == PK_OK);
  CHECK(pk_table_family(t) == PK_F3);
  CHECK(pk_table_count(t) == 32);
  pk_table_free(t);

  REQUIRE(pk_reproduce_table(2, 2, &t) == PK_OK);
  REQUIRE(pk_table_count(t) == 30);
  int typos = 0;
  pk_table_row r;
  for (size_t i = 0; i < pk_table_count(t); ++i) {
    REQUIRE(pk_table_row_at(t, i, &r) == PK_OK);
    if (!r.match_m) {
      ++typos;
      CHECK(r.h_at_printed_m > 0);
    } else {
      CHECK(r.h_at_printed_m == -1);
      CHECK(r.match_h);
    }
  }
  CHECK(typos == 2);
  pk_table_free(t);
  CHECK(pk_reproduce_table(0, 1, &t) == PK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("last error is per thread") {
  pk_factorization* f = nullptr;
  REQUIRE(pk_factorize("0", &f) != PK_OK);
  const std::string here = pk_last_error();
  std::string there;
  std::thread([&] {
    pk_unit* u = nullptr;
    pk_fundamental_unit("12", &u);
    there = pk_last_error();
  }).join();
  CHECK(here != there);
  CHECK(s(pk_last_error()) == here);
}
