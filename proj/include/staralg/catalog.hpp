#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "staralg/poly.hpp"

namespace staralg {

enum class ExpectedStatus { Identity, Central, Neither };

/// A named polynomial with its machine-checked status and the label used by
/// the verification suite.
struct CatalogEntry {
  std::string name;
  std::string locus;
  ExpectedStatus expected;
  StarPolynomial poly;
};

/// The ten generating identities H1..H10 of T_*(R).
StarPolynomial make_H(unsigned k, unsigned characteristic = 0);

/// The central polynomials: (a) = jord(z1,z2),
/// (b) = [y1,z1,z2] - 4*jord(z1,z2)*y1, (c) = y1^p (characteristic p > 2).
StarPolynomial make_central_a(unsigned characteristic = 0);
StarPolynomial make_central_b(unsigned characteristic = 0);
StarPolynomial make_central_c(unsigned characteristic);

/// The alternative degree-3 central generator [y1,z1,z2] - [y1,z2,z1].
StarPolynomial make_alt_central_b(unsigned characteristic = 0);

/// P_i(y_2..y_{l+1}, z_1..z_{l+1}), 1 <= i <= l+1: the product of one
/// length-3 commutator and l-1 length-2 commutators.
StarPolynomial make_P(unsigned i, unsigned l, unsigned characteristic = 0);

/// C_l = sum_{n=1}^{l+1} (-1)^n P_n and its companion
/// D_l = y1*C_l + [y1,z1]...[y_{l+1},z_{l+1}].
StarPolynomial make_C(unsigned l, unsigned characteristic = 0);
StarPolynomial make_D(unsigned l, unsigned characteristic = 0);

/// G_n = jord(z1,z2) * jord(z3,z4) * ... * jord(z_{2n-1}, z_{2n}).
StarPolynomial make_G(unsigned n, unsigned characteristic = 0);

/// Residual of the bracket expansion
/// [P_i, z_{l+2}] = sum_{j<i} (-1)^{l-j} P_{j,i} + sum_{j>i} (-1)^{l+1-j} P_{i,j};
/// an identity of R for every valid (i, l).
StarPolynomial make_eq1_residual(unsigned i, unsigned l,
                                 unsigned characteristic = 0);

/// Residual of rewriting an even z-word as a product of Jordan pairs plus
/// the trailing-commutator correction; an identity of R.
StarPolynomial make_eq6_residual(const std::vector<std::uint32_t>& zword,
                                 unsigned characteristic = 0);

/// G_n * y1 - (1/4)^n [y1, z1, ..., z_{2n}]; central for every n.
StarPolynomial make_eq8_residual(unsigned n, unsigned characteristic = 0);

/// Swap identities: [y1,z1]...[yl,zl] - sgn(s)sgn(t)[y_{s(1)},z_{t(1)}]...
/// (s, t are 1-based permutations of {1..l}).
StarPolynomial make_swap_product(const std::vector<std::uint32_t>& sigma,
                                 const std::vector<std::uint32_t>& tau,
                                 unsigned characteristic = 0);
/// [y1, z_{s(1)}, ..., z_{s(l)}, z_{l+1}] - [y1, z1, ..., z_l, z_{l+1}].
StarPolynomial make_swap_nested(const std::vector<std::uint32_t>& sigma,
                                unsigned characteristic = 0);

/// The fixed-size catalog used by `catalog list` and the verification
/// suite (parameterized families are instantiated at small sizes).
std::vector<CatalogEntry> catalog_entries(unsigned characteristic = 0);

/// Looks up or instantiates a catalog polynomial by name and integer
/// parameters, e.g. ("H", {4}), ("central", {}) with name "central-a",
/// ("C", {2}), ("eq1", {2, 1}), ("eq6", {1,2,1,2}).
StarPolynomial catalog_get(const std::string& name,
                           const std::vector<std::uint32_t>& params,
                           unsigned characteristic = 0);

}  // namespace staralg
