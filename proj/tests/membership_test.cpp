#include "doctest.h"
#include "staralg/catalog.hpp"
#include "staralg/check.hpp"
#include "staralg/membership.hpp"
#include "staralg/parse.hpp"

using namespace staralg;

namespace {

MultiDegree deg_of(const StarPolynomial& f) { return *multidegree(f).degree; }

}  // namespace

TEST_CASE("consequences of a single commutator") {
  GeneratorSet s{{make_H(1, 0)}, ClosureMode::StarSpace, "space(H1)"};
  MultiDegree d;
  d.set(Indet::y(1), 1);
  d.set(Indet::y(2), 1);
  auto cons = consequences(s, d);
  REQUIRE(cons.size() == 2);
  bool has12 = false, has21 = false;
  for (auto& c : cons) {
    has12 = has12 || c == parse_polynomial("[y1,y2]");
    has21 = has21 || c == parse_polynomial("[y2,y1]");
  }
  CHECK(has12);
  CHECK(has21);
}

TEST_CASE("consequences include jordan-type substitutions") {
  GeneratorSet s{{make_central_a(0)}, ClosureMode::StarSpace, "space(a)"};
  MultiDegree d;
  d.set(Indet::y(1), 1);
  d.set(Indet::z(1), 1);
  d.set(Indet::z(2), 1);
  auto cons = consequences(s, d);
  StarPolynomial wanted = jordan(jordan(parse_polynomial("y1"),
                                        parse_polynomial("z1")),
                                 parse_polynomial("z2"));
  bool found = false;
  for (auto& c : cons) found = found || c == wanted;
  CHECK(found);
}

TEST_CASE("C1 is a consequence of (b)") {
  std::vector<GeneratorSet> sets{
      GeneratorSet{{make_central_b(0)}, ClosureMode::StarSpace, "space(b)"}};
  auto cert = is_member(make_C(1, 0), sets);
  REQUIRE(cert.has_value());
  CHECK(cert->recombine(sets) == make_C(1, 0));
  CHECK(!cert->rows.empty());
}

TEST_CASE("variable permutations are instances") {
  std::vector<GeneratorSet> sets{
      GeneratorSet{{make_H(1, 0)}, ClosureMode::StarSpace, "space(H1)"}};
  StarPolynomial target = parse_polynomial("[y2,y1]");
  auto cert = is_member(target, sets);
  REQUIRE(cert.has_value());
  CHECK(cert->recombine(sets) == target);
}

TEST_CASE("y1 is not an identity consequence") {
  std::vector<GeneratorSet> sets{identity_ideal_set(0)};
  CHECK(!is_member(parse_polynomial("y1"), sets).has_value());
  // cross-check: y1 is not an identity of the algebra either
  CHECK(is_identity(parse_polynomial("y1")).verdict == Verdict::Fails);
}

TEST_CASE("enlarging the generator family preserves found verdicts") {
  StarPolynomial target = make_C(1, 0);
  std::vector<GeneratorSet> small{
      GeneratorSet{{make_central_b(0)}, ClosureMode::StarSpace, "space(b)"}};
  std::vector<GeneratorSet> big{central_space_set(0), identity_ideal_set(0)};
  CHECK(is_member(target, small).has_value());
  CHECK(is_member(target, big).has_value());
}

TEST_CASE("certified members satisfy the checker") {
  // a framed identity instance lies in the ideal and vanishes on R
  std::vector<GeneratorSet> ideal{identity_ideal_set(0)};
  StarPolynomial inst =
      parse_polynomial("z1") * make_H(1, 0) * parse_polynomial("y3");
  auto cert = is_member(inst, ideal);
  REQUIRE(cert.has_value());
  CHECK(is_identity(inst).holds());

  // a certified member of the central family is central
  std::vector<GeneratorSet> base{central_space_set(0), identity_ideal_set(0)};
  auto c1 = is_member(make_C(1, 0), base);
  REQUIRE(c1.has_value());
  CHECK(is_central(make_C(1, 0), {Strategy::Symbolic}).holds());
}

TEST_CASE("certificates survive substitution") {
  std::vector<GeneratorSet> sets{
      GeneratorSet{{make_central_b(0)}, ClosureMode::StarSpace, "space(b)"}};
  auto cert = is_member(make_C(1, 0), sets);
  REQUIRE(cert.has_value());
  // z1 -> jord(y1, z1) turns C1 into the D1 relation's instance
  auto sub = substitute_certificate(
      *cert, sets,
      {{Indet::z(1), jordan(parse_polynomial("y1"), parse_polynomial("z1"))}});
  CHECK(sub.target ==
        substitute(make_C(1, 0),
                   {{Indet::z(1), jordan(parse_polynomial("y1"),
                                         parse_polynomial("z1"))}}));
  CHECK(sub.recombine(sets) == sub.target);
}

TEST_CASE("the verification chain for the V lemma") {
  VLemmaReport rep = verify_V_lemma(2, 2);
  CHECK(rep.all_ok);
  REQUIRE(rep.steps.size() == 6);
  std::vector<GeneratorSet> base{central_space_set(0), identity_ideal_set(0)};
  for (auto& step : rep.steps) {
    CAPTURE(step.name);
    CHECK(step.ok);
    REQUIRE(step.certificate.has_value());
    if (step.name == "C1") continue;  // certified against space(b) alone
    CHECK(step.certificate->recombine(base) == step.certificate->target);
  }
}

TEST_CASE("membership requires characteristic zero and homogeneity") {
  std::vector<GeneratorSet> sets{
      GeneratorSet{{make_central_a(5)}, ClosureMode::StarSpace, "space(a)"}};
  StarPolynomial t(5);
  t = jordan(StarPolynomial::variable(Indet::z(1), 5),
             StarPolynomial::variable(Indet::z(2), 5));
  CHECK_THROWS_AS(is_member(t, sets), DomainError);
  std::vector<GeneratorSet> sets0{central_space_set(0)};
  CHECK_THROWS_AS(is_member(parse_polynomial("y1 + z1"), sets0), DomainError);
}

TEST_CASE("degree caps bound the enumeration") {
  std::vector<GeneratorSet> sets{identity_ideal_set(0)};
  MultiDegree d;
  for (unsigned i = 1; i <= 9; ++i) d.set(Indet::z(i), 1);
  CHECK_THROWS_AS(consequences(sets[0], d), DegreeCapError);
}

TEST_CASE("certificate JSON shape") {
  std::vector<GeneratorSet> sets{
      GeneratorSet{{make_central_b(0)}, ClosureMode::StarSpace, "space(b)"}};
  auto cert = is_member(make_C(1, 0), sets);
  REQUIRE(cert.has_value());
  auto j = cert->to_json(sets);
  CHECK(j["schema"] == "staralg/membership-certificate/v1");
  CHECK(j["target"] == make_C(1, 0).to_string());
  CHECK(j["rows"].is_array());
  CHECK(!j["rows"].empty());
  CHECK(j["rows"][0].contains("substitution"));
}
