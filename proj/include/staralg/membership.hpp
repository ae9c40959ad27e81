#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "staralg/poly.hpp"

namespace staralg {

enum class ClosureMode { StarSpace, StarIdeal };

/// A finite family of generators closed either as a *-space (linear span of
/// substitution instances) or as a *-ideal (instances framed by monomials on
/// both sides). Characteristic-0 only; generators are multilinearized before
/// enumeration so that monomial substitutions span all consequences.
struct GeneratorSet {
  std::vector<StarPolynomial> generators;
  ClosureMode mode = ClosureMode::StarSpace;
  std::string label;
};

/// One summand of a membership certificate: coeff * left * g(sub) * right,
/// where g is generators[generator_index] of set set_index (multilinearized).
struct CertificateRow {
  Scalar coeff;
  std::size_t set_index = 0;
  std::size_t generator_index = 0;
  std::map<Indet, StarPolynomial> substitution;
  Word left_frame, right_frame;

  StarPolynomial instance(const std::vector<GeneratorSet>& sets) const;
};

struct MembershipCertificate {
  StarPolynomial target;
  MultiDegree target_degree;
  std::vector<CertificateRow> rows;

  StarPolynomial recombine(const std::vector<GeneratorSet>& sets) const;
  nlohmann::json to_json(const std::vector<GeneratorSet>& sets) const;
};

/// All distinct nonzero consequences of S landing exactly in multidegree D:
/// every variable of each (multilinearized) generator is replaced by the
/// symmetric or skew part of a monomial in the target letters; star-ideal
/// mode adds monomial frames on both sides.
std::vector<StarPolynomial> consequences(const GeneratorSet& S,
                                         const MultiDegree& D,
                                         unsigned degree_cap = 8);

/// Exact linear solve of f against the enumerated consequences of the given
/// sets at multidegree(f). A certificate re-verifies on construction;
/// nullopt means f is outside the span of the enumerated family.
std::optional<MembershipCertificate> is_member(
    const StarPolynomial& f, const std::vector<GeneratorSet>& sets,
    unsigned degree_cap = 8);

/// Applies a *-endomorphism (images for the target's variables) to every row
/// of a certificate, expanding frames into monomials again; the result
/// certifies substitute(cert.target, images).
MembershipCertificate substitute_certificate(
    const MembershipCertificate& cert, const std::vector<GeneratorSet>& sets,
    const std::map<Indet, StarPolynomial>& images);

/// The generators of the identity ideal (H1..H10) as a star-ideal set, and
/// the central generators (a), (b) as a star-space set.
GeneratorSet identity_ideal_set(unsigned characteristic = 0);
GeneratorSet central_space_set(unsigned characteristic = 0);

struct VLemmaStep {
  std::string name;
  bool ok = false;
  std::optional<MembershipCertificate> certificate;
};

struct VLemmaReport {
  std::vector<VLemmaStep> steps;
  bool all_ok = true;
};

/// Certifies G_n (n <= N), C_l and D_l (l <= L) as members of the *-space
/// generated by (a), (b) and the identity ideal, following the substitution
/// chain C_1 -> D_1 -> C_l -> D_l; every certificate is against the base
/// generator sets.
VLemmaReport verify_V_lemma(unsigned L = 2, unsigned N = 2,
                            unsigned degree_cap = 8);

}  // namespace staralg
