#pragma once

#include <utility>
#include <vector>

#include "staralg/poly.hpp"

namespace staralg {

/// The unique expression f = sum_a y1^{a1}...yl^{al} * w_a with every w_a
/// proper (a sum of products of z-letters and commutators).
struct PBWDecomposition {
  /// Occurring Y-variables, ascending; exponent tuples index this frame.
  std::vector<Indet> frame;
  /// (exponent tuple, proper part), in decreasing lexicographic tuple order.
  std::vector<std::pair<std::vector<unsigned>, StarPolynomial>> entries;
  unsigned characteristic = 0;

  StarPolynomial recombine() const;
  /// The proper part for one tuple (zero when absent).
  StarPolynomial part(const std::vector<unsigned>& tuple) const;
};

/// Exact decomposition; multihomogeneous components are processed separately
/// and merged. Computed by shifting y_i -> y_i + t_i: proper polynomials are
/// exactly the shift-invariant ones, and the coefficient of t^a recovers the
/// layers triangularly from the top tuple down.
PBWDecomposition pbw_decompose(const StarPolynomial& f);

/// Lexicographically greatest exponent tuple with nonzero proper part.
/// Requires f != 0 and multihomogeneous.
std::vector<unsigned> rank_tuple(const StarPolynomial& f);

/// w_a for a = rank_tuple(f).
StarPolynomial leading_proper_part(const StarPolynomial& f);

/// True iff f lies in the span of products of z-letters and commutators,
/// i.e. f is invariant under every shift y_i -> y_i + 1.
bool is_proper(const StarPolynomial& f);

/// All products c_1...c_k of the given multidegree where each factor is a
/// z-letter or a left-normed commutator of length >= 2 in the letters. The
/// list spans the proper subspace of that component.
std::vector<StarPolynomial> proper_spanning_set(const MultiDegree& degree,
                                                unsigned characteristic = 0,
                                                unsigned degree_cap = 8);

}  // namespace staralg
