#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "staralg/scalar.hpp"

namespace staralg {

/// Generators of the free algebra with involution: y_i are symmetric,
/// z_j are skewsymmetric. Indices start at 1.
enum class VarKind : std::uint8_t { Y = 0, Z = 1 };

struct Indet {
  VarKind kind;
  std::uint32_t index;

  static Indet y(std::uint32_t i) { return {VarKind::Y, i}; }
  static Indet z(std::uint32_t i) { return {VarKind::Z, i}; }

  bool operator==(const Indet&) const = default;
  bool operator<(const Indet& o) const {
    if (kind != o.kind) return kind < o.kind;
    return index < o.index;
  }
  std::string to_string() const {
    return (kind == VarKind::Y ? "y" : "z") + std::to_string(index);
  }
};

/// A word in the indeterminates; the empty word is the unit.
using Word = std::vector<Indet>;

/// Canonical word order: length first, then lexicographic by (kind, index).
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// Per-indeterminate degree map; entries are always positive.
class MultiDegree {
public:
  MultiDegree() = default;
  static MultiDegree of_word(const Word& w);

  unsigned total() const;
  unsigned degree_of(Indet v) const;
  const std::map<Indet, unsigned>& entries() const { return deg_; }
  void set(Indet v, unsigned d);

  bool is_multilinear() const;
  bool operator==(const MultiDegree&) const = default;
  bool operator<(const MultiDegree& o) const { return deg_ < o.deg_; }

  std::string to_string() const;

private:
  std::map<Indet, unsigned> deg_;
};

/// Element of the free *-algebra K<Y u Z>: a finite scalar-weighted sum of
/// words, stored sparsely with canonical iteration order.
class StarPolynomial {
public:
  StarPolynomial() = default;  // zero over the rationals
  explicit StarPolynomial(unsigned characteristic) : p_(characteristic) {}

  static StarPolynomial zero(unsigned characteristic = 0);
  static StarPolynomial unit(unsigned characteristic = 0);
  static StarPolynomial constant(const Scalar& c);
  static StarPolynomial variable(Indet v, unsigned characteristic = 0);
  static StarPolynomial word(const Word& w, unsigned characteristic = 0);
  static StarPolynomial term(const Scalar& c, const Word& w);

  unsigned characteristic() const { return p_; }
  const std::map<Word, Scalar, WordOrder>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Word& w, const Scalar& c);

  StarPolynomial operator-() const;
  StarPolynomial& operator+=(const StarPolynomial& o);
  StarPolynomial& operator-=(const StarPolynomial& o);
  friend StarPolynomial operator+(StarPolynomial a, const StarPolynomial& b) {
    return a += b;
  }
  friend StarPolynomial operator-(StarPolynomial a, const StarPolynomial& b) {
    return a -= b;
  }
  friend StarPolynomial operator*(const StarPolynomial& a, const StarPolynomial& b);
  friend StarPolynomial operator*(const Scalar& s, const StarPolynomial& a);

  StarPolynomial pow(unsigned k) const;

  bool operator==(const StarPolynomial& o) const;

  /// All indeterminates occurring in some word, in canonical order.
  std::vector<Indet> variables() const;
  /// Largest index used by the given kind (0 when none).
  std::uint32_t max_index(VarKind kind) const;
  unsigned total_degree() const;

  std::string to_string() const;

private:
  unsigned p_ = 0;
  std::map<Word, Scalar, WordOrder> terms_;

  static void require_same_ring(const StarPolynomial& a, const StarPolynomial& b);
};

/// The canonical involution: reverse each word and multiply by
/// (-1)^(number of Z letters); y's are symmetric, z's skewsymmetric.
StarPolynomial star(const StarPolynomial& f);

/// Left-normed commutator [a1,...,an] = [[a1,...,a_{n-1}], an]; n >= 2.
StarPolynomial commutator(std::span<const StarPolynomial> args);
StarPolynomial commutator(std::initializer_list<StarPolynomial> args);
/// Commutator of single letters, the common case.
StarPolynomial letter_commutator(std::span<const Indet> letters,
                                 unsigned characteristic = 0);

/// Jordan product (fg + gf) / 2.
StarPolynomial jordan(const StarPolynomial& f, const StarPolynomial& g);

/// Result of a multidegree query: either the common multidegree or a pair of
/// words witnessing inhomogeneity.
struct MultiDegreeResult {
  std::optional<MultiDegree> degree;
  std::optional<std::pair<Word, Word>> mismatch;
  bool homogeneous() const { return degree.has_value(); }
};
MultiDegreeResult multidegree(const StarPolynomial& f);

/// Splits f into its multihomogeneous components (empty map for f = 0).
std::map<MultiDegree, StarPolynomial> homogeneous_components(const StarPolynomial& f);

/// Substitutes images for indeterminates; unmapped variables stay themselves.
StarPolynomial substitute(const StarPolynomial& f,
                          const std::map<Indet, StarPolynomial>& images);

/// Full polarization of a multihomogeneous polynomial. Each variable of
/// degree d is spread over d variables of the same kind (the original plus
/// d-1 fresh ones) and the part multilinear in all of them is kept. The
/// frame records original -> replacement list so witnesses can be mapped
/// back.
struct Polarization {
  StarPolynomial poly;
  std::map<Indet, std::vector<Indet>> frame;
};
Polarization multilinearize(const StarPolynomial& f);

/// f = f_s + f_k with star(f_s) = f_s and star(f_k) = -f_k.
std::pair<StarPolynomial, StarPolynomial> sym_skew_split(const StarPolynomial& f);

}  // namespace staralg
