#include <random>

#include "doctest.h"
#include "staralg/scalar.hpp"

using namespace staralg;

TEST_CASE("rational arithmetic stays in lowest terms") {
  Scalar a = Scalar::rational(1, 2);
  Scalar b = Scalar::rational(1, 3);
  CHECK((a + b) == Scalar::rational(5, 6));
  CHECK((a * Scalar::integer(2)) == Scalar::one());
  CHECK((a + b).to_string() == "5/6");
  CHECK(Scalar::integer(-3).to_string() == "-3");
}

TEST_CASE("prime field arithmetic") {
  CHECK((Scalar::integer(2, 5) + Scalar::integer(4, 5)) == Scalar::integer(1, 5));
  CHECK((Scalar::integer(3, 5) * Scalar::integer(4, 5)) == Scalar::integer(2, 5));
  CHECK(Scalar::rational(1, 2, 5) == Scalar::integer(3, 5));
  CHECK(Scalar::integer(7, 5) == Scalar::integer(2, 5));
}

TEST_CASE("inverse of two") {
  CHECK(Scalar::inverse_of_two(0) == Scalar::rational(1, 2));
  CHECK(Scalar::inverse_of_two(5) == Scalar::integer(3, 5));
  CHECK(Scalar::inverse_of_two(3) == Scalar::integer(2, 3));
  CHECK((Scalar::inverse_of_two(7) * Scalar::integer(2, 7)) == Scalar::one(7));
}

TEST_CASE("symbolic variables") {
  Scalar t1 = Scalar::variable(1);
  Scalar t2 = Scalar::variable(2);
  CHECK((t1 + (-t1)).is_zero());
  CHECK((t1 * t2) == (t2 * t1));
  CHECK((t1 * t2).to_string() == "t1*t2");
  CHECK((t1 * t1 + Scalar::integer(2)).to_string() == "t1^2 + 2");
  CHECK(t1.max_symbol() == 1);
  CHECK((t1 * t2).max_symbol() == 2);
  CHECK_THROWS_AS(t1.inverse(), DomainError);
}

TEST_CASE("graded lexicographic monomial order") {
  // degree dominates, then t1-heavier monomials are greater
  TMono t1 = TMono::variable(1), t2 = TMono::variable(2);
  CHECK(t1 < t1 * t2);
  CHECK(t2 < t1);
  CHECK(t2 * t2 < t1 * t2);
}

TEST_CASE("ring mismatch is rejected") {
  CHECK_THROWS_AS(Scalar::one(0) + Scalar::one(5), RingMismatchError);
  CHECK_THROWS_AS(Scalar::zero(2), DomainError);   // characteristic 2
  CHECK_THROWS_AS(Scalar::zero(9), DomainError);   // not prime
}

TEST_CASE("scalar parsing") {
  CHECK(Scalar::parse("5/6") == Scalar::rational(5, 6));
  CHECK(Scalar::parse("-3") == Scalar::integer(-3));
  CHECK(Scalar::parse(" 12 ") == Scalar::integer(12));
  CHECK(Scalar::parse("1/2", 5) == Scalar::integer(3, 5));
  CHECK_THROWS_AS(Scalar::parse("x"), ParseError);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 9);
  for (unsigned p : {0u, 5u}) {
    auto rand_scalar = [&] {
      if (p != 0) return Scalar::integer(num(rng), p);
      return Scalar::rational(num(rng), den(rng), 0);
    };
    for (int i = 0; i < 200; ++i) {
      Scalar a = rand_scalar();
      Scalar b = rand_scalar();
      Scalar c = rand_scalar();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
    }
  }
}

TEST_CASE("Frobenius additivity in characteristic p") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(0, 100);
  for (unsigned p : {3u, 5u, 7u}) {
    for (int i = 0; i < 50; ++i) {
      Scalar a = Scalar::integer(num(rng), p);
      Scalar b = Scalar::integer(num(rng), p);
      Scalar lhs = Scalar::one(p), ap = Scalar::one(p), bp = Scalar::one(p);
      for (unsigned k = 0; k < p; ++k) {
        lhs = lhs * (a + b);
        ap = ap * a;
        bp = bp * b;
      }
      CHECK(lhs == ap + bp);
    }
  }
}
