#include "doctest.h"
#include "staralg/catalog.hpp"
#include "staralg/check.hpp"
#include "staralg/parse.hpp"

using namespace staralg;

TEST_CASE("fixed entry shapes") {
  CHECK(make_H(1, 0) == parse_polynomial("[y1,y2]"));
  CHECK(make_H(5, 0) ==
        parse_polynomial("[z1,z2]*y1*[z3,z4] + [z3,z4]*y1*[z1,z2]"));
  CHECK(make_H(8, 0) ==
        parse_polynomial("[y1,z1]*[y2,z2] + [y1,z2]*[y2,z1]"));
  CHECK(make_central_a(0) == parse_polynomial("jord(z1,z2)"));
  CHECK(make_central_b(0) ==
        parse_polynomial("[y1,z1,z2] - 4*jord(z1,z2)*y1"));
  CHECK(make_central_c(3) == parse_polynomial("y1^3", 3));
  CHECK_THROWS_AS(make_central_c(0), DomainError);
  CHECK_THROWS_AS(make_H(11, 0), DomainError);
}

TEST_CASE("P family instantiation") {
  CHECK(make_P(1, 1, 0) == parse_polynomial("[y2,z1,z2]"));
  CHECK(make_P(2, 1, 0) == parse_polynomial("[y2,z2,z1]"));
  CHECK(make_P(1, 2, 0) == parse_polynomial("[y2,z1,z2]*[y3,z3]"));
  CHECK(make_P(3, 2, 0) == parse_polynomial("[y2,z3,z1]*[y3,z2]"));
  CHECK_THROWS_AS(make_P(4, 2, 0), DomainError);
  CHECK_THROWS_AS(make_P(0, 2, 0), DomainError);

  // every P_i is multilinear in y2..y_{l+1}, z1..z_{l+1}
  for (unsigned l = 1; l <= 3; ++l)
    for (unsigned i = 1; i <= l + 1; ++i) {
      auto md = multidegree(make_P(i, l, 0));
      REQUIRE(md.homogeneous());
      CHECK(md.degree->is_multilinear());
      CHECK(md.degree->total() == 2 * l + 1);
    }
}

TEST_CASE("C and D families") {
  CHECK(make_C(1, 0) == parse_polynomial("[y2,z2,z1] - [y2,z1,z2]"));
  CHECK(make_D(1, 0) ==
        parse_polynomial("y1*([y2,z2,z1]-[y2,z1,z2]) + [y1,z1]*[y2,z2]"));
  CHECK(make_C(2, 0) == -make_P(1, 2, 0) + make_P(2, 2, 0) - make_P(3, 2, 0));
}

TEST_CASE("G family") {
  CHECK(make_G(1, 0) == parse_polynomial("jord(z1,z2)"));
  CHECK(make_G(2, 0) == parse_polynomial("jord(z1,z2)*jord(z3,z4)"));
  auto md = multidegree(make_G(3, 0));
  REQUIRE(md.homogeneous());
  for (unsigned i = 1; i <= 6; ++i) CHECK(md.degree->degree_of(Indet::z(i)) == 1);
  CHECK_THROWS_AS(make_G(0, 0), DomainError);
}

TEST_CASE("eq6 residuals vanish exactly in the definitional cases") {
  CHECK(make_eq6_residual({1, 2}, 0).is_zero());
  CHECK(make_eq6_residual({1, 1}, 0).is_zero());
  CHECK(!make_eq6_residual({1, 2, 3, 4}, 0).is_zero());
  CHECK_THROWS_AS(make_eq6_residual({1, 2, 3}, 0), DomainError);
}

TEST_CASE("eq8 shape") {
  CHECK(make_eq8_residual(1, 0) ==
        parse_polynomial("jord(z1,z2)*y1 - 1/4*[y1,z1,z2]"));
  CHECK(make_eq8_residual(2, 0) ==
        parse_polynomial(
            "jord(z1,z2)*jord(z3,z4)*y1 - 1/16*[y1,z1,z2,z3,z4]"));
}

TEST_CASE("every catalog status is machine-checked") {
  for (auto& e : catalog_entries(0)) {
    CAPTURE(e.name);
    CheckConfig cc{Strategy::Symbolic};
    switch (e.expected) {
      case ExpectedStatus::Identity:
        CHECK(is_identity(e.poly, cc).holds());
        break;
      case ExpectedStatus::Central: {
        auto r = is_central(e.poly, cc);
        CHECK(r.holds());
        break;
      }
      case ExpectedStatus::Neither: {
        CHECK(is_identity(e.poly, cc).verdict == Verdict::Fails);
        CHECK(is_central(e.poly, cc).verdict == Verdict::Fails);
        break;
      }
    }
  }
}

TEST_CASE("the half-normalized coefficient variants are rejected by R") {
  // with jord(a,b) = (ab+ba)/2 the coefficient must be 4, not 2
  CHECK(is_central(parse_polynomial("[y1,z1,z2] - 2*jord(z1,z2)*y1"),
                   {Strategy::Symbolic})
            .verdict == Verdict::Fails);
  CHECK(is_identity(parse_polynomial(
                        "[y1,z1,z2,z3] - 2*jord(z1,z2)*[y1,z3]"),
                    {Strategy::Symbolic})
            .verdict == Verdict::Fails);
  CHECK(is_central(parse_polynomial("jord(z1,z2)*y1 - 1/2*[y1,z1,z2]"),
                   {Strategy::Symbolic})
            .verdict == Verdict::Fails);
}

TEST_CASE("eq1 residuals are identities (small sizes)") {
  for (unsigned l = 1; l <= 2; ++l)
    for (unsigned i = 1; i <= l + 1; ++i) {
      CAPTURE(l);
      CAPTURE(i);
      CHECK(is_identity(make_eq1_residual(i, l, 0), {Strategy::Symbolic})
                .holds());
    }
}

TEST_CASE("swap families") {
  CHECK(make_swap_product({1, 2}, {2, 1}, 0) ==
        parse_polynomial("[y1,z1]*[y2,z2] + [y1,z2]*[y2,z1]"));
  CHECK(is_identity(make_swap_product({2, 1}, {2, 1}, 0)).holds());
  CHECK(is_identity(make_swap_nested({2, 1}, 0)).holds());
  CHECK(make_swap_nested({1}, 0).is_zero());
  CHECK_THROWS_AS(make_swap_product({1, 3}, {1, 2}, 0), DomainError);
}

TEST_CASE("catalog_get dispatch") {
  CHECK(catalog_get("H4", {}, 0) == make_H(4, 0));
  CHECK(catalog_get("C", {2}, 0) == make_C(2, 0));
  CHECK(catalog_get("eq1", {1, 2}, 0) == make_eq1_residual(1, 2, 0));
  CHECK(catalog_get("eq6", {1, 2, 1, 2}, 0) == make_eq6_residual({1, 2, 1, 2}, 0));
  CHECK_THROWS_AS(catalog_get("nope", {}, 0), DomainError);
  CHECK_THROWS_AS(catalog_get("C", {}, 0), DomainError);
}
