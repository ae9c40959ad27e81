#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "staralg/grassmann.hpp"
#include "staralg/poly.hpp"

namespace staralg {

/// Element of R = M_{1,1}(E): a 2x2 matrix ((a,b),(c,d)) with a, d even and
/// b, c odd. The involution is ((a,b),(c,d)) |-> ((d,b),(-c,a)); symmetric
/// elements have the shape ((a,b),(0,a)), skew ones ((a,0),(b,-a)).
///
/// The companion involution obtained by composing with the parity
/// automorphism gives an isomorphic structure and is not modelled separately.
class M11Element {
public:
  M11Element(GrassmannElement a, GrassmannElement b, GrassmannElement c,
             GrassmannElement d);

  static M11Element zero(unsigned truncation, unsigned characteristic);
  static M11Element identity(unsigned truncation, unsigned characteristic);
  /// ((alpha, beta), (0, alpha)) with alpha even, beta odd; star-fixed.
  static M11Element symmetric(const GrassmannElement& alpha,
                              const GrassmannElement& beta);
  /// ((alpha, 0), (beta, -alpha)) with alpha even, beta odd; star-negated.
  static M11Element skew(const GrassmannElement& alpha,
                         const GrassmannElement& beta);

  const GrassmannElement& a() const { return a_; }
  const GrassmannElement& b() const { return b_; }
  const GrassmannElement& c() const { return c_; }
  const GrassmannElement& d() const { return d_; }

  unsigned truncation() const { return a_.truncation(); }
  unsigned characteristic() const { return a_.characteristic(); }
  bool is_zero() const;

  M11Element star() const;

  M11Element operator-() const;
  M11Element& operator+=(const M11Element& o);
  M11Element& operator-=(const M11Element& o);
  friend M11Element operator+(M11Element x, const M11Element& y) { return x += y; }
  friend M11Element operator-(M11Element x, const M11Element& y) { return x -= y; }
  friend M11Element operator*(const M11Element& x, const M11Element& y);
  friend M11Element operator*(const Scalar& s, const M11Element& x);

  bool operator==(const M11Element& o) const;

  /// True iff the element commutes with the whole truncated algebra,
  /// decided against a finite test set (see is_central_element below).
  bool is_central() const;

  std::string to_string() const;

private:
  GrassmannElement a_, b_, c_, d_;
};

/// Commutes-with-everything test. The test set is the diagonal units, the
/// off-diagonal elements e12*e_i / e21*e_i for every generator i, and
/// diagonal units scaled by even monomials (size-2 representatives; larger
/// even monomials impose no further constraints since even elements are
/// central in E).
bool is_central_element(const M11Element& x);

enum class FamilyStrategy { Spanning, GenericSymbolic, Random };

/// Candidate substitutions for the variables of a polynomial. Slot i holds
/// the candidates for the i-th variable (canonical order); symmetric
/// candidates for Y-variables, skew ones for Z-variables.
struct TestFamily {
  struct Slot {
    Indet var;
    std::vector<M11Element> candidates;
  };
  std::vector<Slot> slots;
  FamilyStrategy provenance = FamilyStrategy::Spanning;
  unsigned truncation = 0;
  unsigned characteristic = 0;

  std::vector<M11Element> symmetric_members() const;
  std::vector<M11Element> skew_members() const;
};

/// Builds the per-variable test family for f.
///
/// Spanning: three candidates per slot (unit shape, a disjoint even pair,
/// a disjoint odd generator) on fresh index blocks of width 2; truncation
/// 2 * #slots. By the disjoint-support/parity argument this grid is
/// exhaustive for multilinear polynomials.
///
/// GenericSymbolic: one element per variable, the symbolic superposition of
/// the three shapes with fresh t-coefficients on index blocks of width 3.
///
/// Random: the same shapes with seeded random scalar coefficients.
///
/// `spare_generators` reserves extra Grassmann generators above the family's
/// own blocks (used by centrality probes).
TestFamily make_test_family(const StarPolynomial& f, FamilyStrategy strategy,
                            std::uint64_t seed = 0,
                            unsigned spare_generators = 0);

}  // namespace staralg
