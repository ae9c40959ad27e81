#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "staralg/check.hpp"

namespace staralg {

/// Options shared by the CLI subcommands.
struct SessionConfig {
  unsigned characteristic = 0;
  Strategy strategy = Strategy::Exhaustive;
  std::optional<unsigned> truncation;
  std::uint64_t seed = 0;
  unsigned degree_cap = 8;
  bool json = false;
};

struct ClaimResult {
  std::string name;
  std::string status;  // "pass", "fail", or an error note
  double ms = 0.0;
  bool pass = false;
};

struct VerifySummary {
  std::vector<ClaimResult> claims;
  unsigned passed = 0;
  unsigned failed = 0;
  bool all_pass() const { return failed == 0; }
};

/// Runs the whole claim suite (identities, central polynomials, equation
/// residuals, membership certificates, the power formula, the symmetric/skew
/// splitting property, leading-part centrality and the generator
/// cross-check) for the configured characteristic.
VerifySummary run_verify_paper(const SessionConfig& cfg);

/// Deterministic JSON rendering of the suite (no timings): identical flags
/// and seed give byte-identical output.
std::string verify_paper_json(const SessionConfig& cfg);

/// Entry point used by the `staralg` binary. Exit codes: 0 success/holds,
/// 1 failed verdict or failed claims, 2 parse error, 3 configuration error.
int run_cli(int argc, char** argv);
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace staralg
