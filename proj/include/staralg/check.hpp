#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "staralg/m11.hpp"
#include "staralg/poly.hpp"

namespace staralg {

/// Map from indeterminates to elements of R; Y-variables must receive
/// symmetric elements and Z-variables skew ones.
struct Assignment {
  std::map<Indet, M11Element> images;

  void validate() const;
  std::uint32_t max_symbol() const;
};

/// Evaluation of f under the *-homomorphism determined by the assignment.
/// Every variable of f must be assigned; rings and truncations must agree.
M11Element evaluate(const StarPolynomial& f, const Assignment& a);
M11Element evaluate(const StarPolynomial& f, const Assignment& a,
                    unsigned truncation, unsigned characteristic);

enum class Verdict { Holds, Fails };
enum class Strategy { Exhaustive, Symbolic, Random };
enum class Completeness { Exact, Heuristic };

struct CheckConfig {
  /// Exhaustive is the default pipeline: spanning-grid evaluation for
  /// multilinear components, polarization for non-multilinear ones in
  /// characteristic 0, generic symbolic evaluation in characteristic p.
  /// Symbolic forces generic symbolic evaluation (exact); Random samples.
  Strategy strategy = Strategy::Exhaustive;
  /// Optional override; it is an error to force less than the strategy needs.
  std::optional<unsigned> truncation;
  std::uint64_t seed = 0;
  unsigned random_trials = 200;
};

struct Witness {
  Assignment assignment;
  /// The polynomial whose evaluation is nonzero (f itself for is_identity,
  /// the failing bracket for is_central).
  StarPolynomial checked;
  M11Element value;
};

struct CheckReport {
  Verdict verdict = Verdict::Holds;
  Strategy strategy = Strategy::Exhaustive;
  unsigned truncation = 0;
  unsigned characteristic = 0;
  Completeness completeness = Completeness::Exact;
  std::optional<Witness> witness;
  /// is_central only: whether f is itself a *-identity, and which bracket
  /// ("y" or "z") failed when the verdict is Fails.
  std::optional<bool> identity_itself;
  std::optional<std::string> failing_bracket;

  bool holds() const { return verdict == Verdict::Holds; }
  nlohmann::json to_json() const;
};

/// Is f a *-polynomial identity of R = M_{1,1}(E)?
CheckReport is_identity(const StarPolynomial& f, const CheckConfig& cfg = {});

/// Is f a *-central polynomial of R? Decided through the brackets
/// [f, y_fresh] and [f, z_fresh] both being identities.
CheckReport is_central(const StarPolynomial& f, const CheckConfig& cfg = {});

/// For a central f = f_s + f_k: is f_s central and f_k an identity?
/// Precondition: is_central(f) holds.
bool check_sym_skew_theorem(const StarPolynomial& f, const CheckConfig& cfg = {});

}  // namespace staralg
