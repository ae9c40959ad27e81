#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "staralg/error.hpp"

namespace staralg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Coefficient ring selector: the rationals (characteristic 0) or a prime
/// field F_p with p an odd prime, optionally extended by commuting symbolic
/// variables t1, t2, ...
struct RingConfig {
  unsigned characteristic = 0;
  bool symbolic = false;

  void validate() const;
  bool operator==(const RingConfig&) const = default;
};

/// Monomial in the commuting symbolic variables t_k. Factors are (variable,
/// exponent) pairs with variables strictly increasing and exponents positive.
class TMono {
public:
  TMono() = default;
  static TMono variable(std::uint32_t k, std::uint32_t exp = 1);
  /// Factors must be sorted by variable with positive exponents.
  static TMono from_factors(
      std::vector<std::pair<std::uint32_t, std::uint32_t>> factors);

  bool is_unit() const { return factors_.empty(); }
  unsigned degree() const;
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& factors() const {
    return factors_;
  }

  friend TMono operator*(const TMono& a, const TMono& b);

  // Graded lexicographic: total degree first, ties broken by the exponent of
  // the smallest-index variable (t1 heaviest).
  bool operator<(const TMono& other) const;
  bool operator==(const TMono& other) const = default;

  std::string to_string() const;

private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors_;
};

/// An exact scalar: a polynomial in the t-variables over Q or F_p. Constants
/// are the common case and are stored apart from the symbolic tail. In
/// characteristic p every coefficient is kept as an integer in [0, p).
class Scalar {
public:
  Scalar() = default;  // zero of the rational ring

  static Scalar zero(unsigned characteristic = 0);
  static Scalar one(unsigned characteristic = 0);
  static Scalar integer(long v, unsigned characteristic = 0);
  static Scalar integer(const BigInt& v, unsigned characteristic = 0);
  static Scalar rational(const BigInt& num, const BigInt& den,
                         unsigned characteristic = 0);
  static Scalar of_rat(const BigRat& v, unsigned characteristic = 0);
  /// The symbolic variable t_k.
  static Scalar variable(std::uint32_t k, unsigned characteristic = 0);
  /// The ring element s with 2s = 1 (characteristic is never 2).
  static Scalar inverse_of_two(unsigned characteristic = 0);
  /// Parses "5/6", "-3", "12".
  static Scalar parse(const std::string& text, unsigned characteristic = 0);

  unsigned characteristic() const { return p_; }
  bool is_zero() const { return cst_ == 0 && tail_.empty(); }
  bool is_one() const { return cst_ == 1 && tail_.empty(); }
  bool is_constant() const { return tail_.empty(); }

  /// The coefficient of the unit monomial.
  const BigRat& constant_part() const { return cst_; }
  /// The non-constant monomials and their coefficients.
  const std::map<TMono, BigRat>& symbolic_terms() const { return tail_; }
  /// Single-monomial scalar c * m.
  static Scalar monomial(const TMono& m, const BigRat& c,
                         unsigned characteristic = 0);
  /// Value of a constant scalar; throws DomainError if symbolic terms remain.
  const BigRat& rational_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);

  /// Multiplicative inverse of a nonzero constant scalar.
  Scalar inverse() const;
  Scalar half() const { return *this * inverse_of_two(p_); }

  bool operator==(const Scalar& o) const;

  /// Number of monomials with nonzero coefficient (constant included).
  std::size_t term_count() const;
  /// Largest symbolic variable index in use (0 when constant).
  std::uint32_t max_symbol() const;
  /// True when printing needs parentheses inside a product.
  bool is_sum_like() const;

  std::string to_string() const;

private:
  unsigned p_ = 0;
  BigRat cst_;
  std::map<TMono, BigRat> tail_;

  void reduce_coeff(BigRat& c) const;
  void prune();
  static void require_same_ring(const Scalar& a, const Scalar& b);
};

/// Residue of a rational mod p (denominator inverted); value in [0, p).
BigInt rational_mod_p(const BigRat& v, unsigned p);
/// Inverse of a mod p; throws DomainError when gcd(a, p) != 1.
BigInt invert_mod_p(const BigInt& a, unsigned p);

}  // namespace staralg
