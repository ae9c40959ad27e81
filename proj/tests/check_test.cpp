#include <random>

#include "doctest.h"
#include "staralg/catalog.hpp"
#include "staralg/check.hpp"
#include "staralg/parse.hpp"
#include "test_util.hpp"

using namespace staralg;
using namespace staralg::testutil;

namespace {

Assignment example_assignment() {
  GrassmannElement z = GrassmannElement::zero(4, 0);
  GrassmannElement u = GrassmannElement::unit(4, 0);
  GrassmannElement e1 = GrassmannElement::generator(1, 4, 0);
  Assignment a;
  a.images.emplace(Indet::y(1), M11Element::symmetric(z, e1));
  a.images.emplace(Indet::z(1), M11Element::skew(u, z));
  return a;
}

}  // namespace

TEST_CASE("evaluation is the substitution homomorphism") {
  Assignment a = example_assignment();
  a.validate();

  CHECK(evaluate(parse_polynomial("y1"), a) == a.images.at(Indet::y(1)));

  // [y1, z1] at (((0,e1),(0,0)), diag(1,-1)) = ((0,-2e1),(0,0))
  M11Element v = evaluate(parse_polynomial("[y1,z1]"), a);
  GrassmannElement zg = GrassmannElement::zero(4, 0);
  GrassmannElement m2e1 =
      Scalar::integer(-2) * GrassmannElement::generator(1, 4, 0);
  CHECK(v == M11Element::symmetric(zg, m2e1));

  // jord(z1,z2) at (J, J) = I
  Assignment b;
  GrassmannElement u = GrassmannElement::unit(4, 0);
  b.images.emplace(Indet::z(1), M11Element::skew(u, zg));
  b.images.emplace(Indet::z(2), M11Element::skew(u, zg));
  CHECK(evaluate(parse_polynomial("jord(z1,z2)"), b) ==
        M11Element::identity(4, 0));

  CHECK_THROWS_AS(evaluate(parse_polynomial("y2"), a), DomainError);
  Assignment bad;
  bad.images.emplace(Indet::y(1), M11Element::skew(u, zg));
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("identity verdicts with witnesses") {
  CHECK(is_identity(parse_polynomial("z1*z2*z3 - z3*z2*z1")).holds());
  CHECK(is_identity(parse_polynomial("[y1,y2]")).holds());

  CheckReport r = is_identity(parse_polynomial("[y1,z1]"));
  REQUIRE(r.verdict == Verdict::Fails);
  REQUIRE(r.witness.has_value());
  // the witness re-evaluates to a nonzero element
  M11Element again =
      evaluate(r.witness->checked, r.witness->assignment);
  CHECK(!again.is_zero());
  CHECK(again == r.witness->value);
}

TEST_CASE("zero and constants") {
  CHECK(is_identity(StarPolynomial::zero()).holds());
  CheckReport r = is_identity(parse_polynomial("3"));
  CHECK(r.verdict == Verdict::Fails);
  CHECK(is_central(parse_polynomial("3")).holds());
}

TEST_CASE("centrality verdicts") {
  CheckReport a = is_central(parse_polynomial("jord(z1,z2)"));
  CHECK(a.holds());
  CHECK_FALSE(*a.identity_itself);

  CheckReport b = is_central(make_central_b(0));
  CHECK(b.holds());
  CHECK_FALSE(*b.identity_itself);

  CheckReport y = is_central(parse_polynomial("y1"));
  REQUIRE(y.verdict == Verdict::Fails);
  REQUIRE(y.witness.has_value());
  CHECK(!evaluate(y.witness->checked, y.witness->assignment).is_zero());

  // identities are centrally trivial
  CheckReport h = is_central(make_H(3, 0));
  CHECK(h.holds());
  CHECK(*h.identity_itself);
}

TEST_CASE("witnesses for multihomogeneous failures re-evaluate") {
  // two components, only one of which fails
  StarPolynomial f = parse_polynomial("[y1,y2] + [y1,z1]");
  CheckReport r = is_identity(f);
  REQUIRE(r.verdict == Verdict::Fails);
  REQUIRE(r.witness.has_value());
  M11Element v = evaluate(f, r.witness->assignment);
  CHECK(!v.is_zero());

  // non-multilinear failure found through polarization maps back
  StarPolynomial g = parse_polynomial("y1*y1*z1");
  CheckReport rg = is_identity(g);
  REQUIRE(rg.verdict == Verdict::Fails);
  CHECK(!evaluate(g, rg.witness->assignment).is_zero());
}

TEST_CASE("strategies agree on multilinear catalog entries") {
  for (unsigned k : {1u, 2u, 3u, 8u}) {
    StarPolynomial f = make_H(k, 0);
    CHECK(is_identity(f, {Strategy::Symbolic}).holds());
    CHECK(is_identity(f, {Strategy::Exhaustive}).holds());
  }
  StarPolynomial bad = parse_polynomial("[y1,z1]");
  CHECK(is_identity(bad, {Strategy::Symbolic}).verdict == Verdict::Fails);
}

TEST_CASE("exhaustive agrees with 500 randomized trials") {
  std::vector<StarPolynomial> targets{make_H(1, 0), make_H(2, 0), make_H(3, 0),
                                      make_central_a(0) /* central, not id */};
  std::mt19937_64 rng(61);
  // a couple of random multilinear polynomials of degree <= 5
  for (int i = 0; i < 2; ++i) {
    Word w{Indet::y(1), Indet::z(1), Indet::z(2)};
    std::shuffle(w.begin(), w.end(), rng);
    StarPolynomial f = StarPolynomial::word(w);
    std::shuffle(w.begin(), w.end(), rng);
    f -= StarPolynomial::word(w);
    if (!f.is_zero()) targets.push_back(f);
  }
  for (auto& f : targets) {
    bool exact = is_identity(f).holds();
    CheckConfig rc;
    rc.strategy = Strategy::Random;
    rc.random_trials = 500;
    rc.seed = 99;
    CheckReport rr = is_identity(f, rc);
    if (exact) {
      CHECK(rr.holds());  // no randomized counterexample may exist
      CHECK(rr.completeness == Completeness::Heuristic);
    } else {
      // a randomized failure, when found, is sound
      if (!rr.holds()) CHECK(!evaluate(f, rr.witness->assignment).is_zero());
    }
  }
}

TEST_CASE("congruent polynomials get the same centrality verdict") {
  // f - g an identity  =>  identical verdicts
  std::vector<std::pair<StarPolynomial, StarPolynomial>> pairs;
  {
    StarPolynomial a = make_central_a(0);
    StarPolynomial f = a + make_H(3, 0);  // H3 has z1..z4; (a) has z1, z2
    pairs.push_back({f, a});
    StarPolynomial y = parse_polynomial("y1*jord(z1,z2)");
    pairs.push_back({y + make_H(1, 0), y});
  }
  for (auto& [f, g] : pairs) {
    CHECK(is_identity(f - g).holds());
    CHECK(is_central(f, {Strategy::Symbolic}).holds() ==
          is_central(g, {Strategy::Symbolic}).holds());
  }
}

TEST_CASE("symmetric/skew decomposition of central polynomials") {
  CHECK(check_sym_skew_theorem(make_central_a(0)));
  CHECK(check_sym_skew_theorem(make_central_b(0)));
  CHECK(check_sym_skew_theorem(make_G(2, 0)));
  CHECK_THROWS_AS(check_sym_skew_theorem(parse_polynomial("y1")), DomainError);
}

TEST_CASE("forced truncations that are too small are reported") {
  CheckConfig cfg;
  cfg.truncation = 1;
  CHECK_THROWS_AS(is_identity(make_H(3, 0), cfg), TruncationError);
  CheckConfig ok;
  ok.truncation = 32;
  CHECK(is_identity(make_H(3, 0), ok).holds());
}

TEST_CASE("report serialization shape") {
  auto j = is_central(parse_polynomial("jord(z1,z2)")).to_json();
  CHECK(j["schema"] == "staralg/check-report/v1");
  CHECK(j["verdict"] == "holds");
  CHECK(j.contains("strategy"));
  CHECK(j.contains("truncation"));
  CHECK(j.contains("char"));
  CHECK(j.contains("completeness"));
  auto jf = is_identity(parse_polynomial("[y1,z1]")).to_json();
  CHECK(jf["verdict"] == "fails");
  CHECK(jf.contains("witness"));
}
