#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "staralg/scalar.hpp"

namespace staralg {

/// Basis monomial e_{i1}*...*e_{ik} of the exterior algebra, encoded as a
/// machine-word subset (generator i <-> bit i-1). Truncations above 64
/// generators are rejected up front; nothing in the library needs them.
using Blade = std::uint64_t;

/// Parity of the number of pairs (s, t) in S x T with s > t, computed with
/// masked popcounts. Multiplying e_S * e_T costs the sign (-1)^inv.
bool inversion_parity_mask(Blade s, Blade t);
/// Reference implementation on sorted index lists (two-pointer merge count);
/// the two are cross-checked in the test suite.
bool inversion_parity_merge(std::span<const std::uint32_t> s,
                            std::span<const std::uint32_t> t);

std::vector<std::uint32_t> blade_indices(Blade b);
Blade blade_from_indices(std::span<const std::uint32_t> indices,
                         unsigned truncation);

enum class Parity { Even, Odd };

/// Element of the Grassmann algebra E on generators e_1..e_n: a finite map
/// from blades to scalars. The even/odd split is by support size.
class GrassmannElement {
public:
  GrassmannElement() = default;
  GrassmannElement(unsigned truncation, unsigned characteristic);

  static GrassmannElement zero(unsigned truncation, unsigned characteristic);
  static GrassmannElement unit(unsigned truncation, unsigned characteristic);
  static GrassmannElement generator(std::uint32_t i, unsigned truncation,
                                    unsigned characteristic);
  static GrassmannElement basis(std::span<const std::uint32_t> indices,
                                unsigned truncation, unsigned characteristic);
  static GrassmannElement term(const Scalar& coeff, Blade blade,
                               unsigned truncation);

  unsigned truncation() const { return trunc_; }
  unsigned characteristic() const { return p_; }
  const std::map<Blade, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_even() const;
  bool is_odd() const;
  Scalar coefficient(Blade b) const;

  GrassmannElement parity_project(Parity parity) const;
  GrassmannElement even_part() const { return parity_project(Parity::Even); }
  GrassmannElement odd_part() const { return parity_project(Parity::Odd); }

  GrassmannElement operator-() const;
  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) {
    return a += b;
  }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) {
    return a -= b;
  }
  friend GrassmannElement operator*(const GrassmannElement& a,
                                    const GrassmannElement& b);
  friend GrassmannElement operator*(const Scalar& s, const GrassmannElement& a);

  GrassmannElement pow(unsigned k) const;

  bool operator==(const GrassmannElement& o) const;

  void add_term(Blade b, const Scalar& c);

  std::string to_string() const;

private:
  unsigned trunc_ = 0;
  unsigned p_ = 0;
  std::map<Blade, Scalar> terms_;

  static void require_compatible(const GrassmannElement& a,
                                 const GrassmannElement& b);
};

}  // namespace staralg
