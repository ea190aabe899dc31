#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vtwin/random_words.hpp"

namespace vtwin {

struct ClaimResult {
  std::string id;
  std::string anchor;
  bool passed;
  std::optional<std::string> witness;
};

struct VerificationReport {
  std::string suite;
  int strands;
  std::uint64_t seed;
  std::vector<ClaimResult> claims;

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }

  // Sorts claims by id.
  void finalize();

  std::string to_text() const;
  std::string to_json() const;
};

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  int samples = 200;
  int max_length = 24;
};

VerificationReport verify_reduced_presentation(int n);
VerificationReport verify_commutator_presentation(int n);
VerificationReport verify_lcs_stabilization(int n);
VerificationReport verify_vt_abelianization(int n);
VerificationReport verify_graph_claims(int n);
VerificationReport verify_semidirect(int n, const SuiteOptions &options = {});
VerificationReport verify_action(int n);
VerificationReport verify_theta_relations(int n);
VerificationReport verify_pvt4_tables();

// Checks `lhs == rhs` in VT_n and records the freely reduced lhs * rhs^{-1}
// as witness on failure.
ClaimResult check_vt_equal(std::string id, std::string anchor,
                           const VWord &lhs, const VWord &rhs);

struct SuiteInfo {
  std::string_view name;
  int min_strands;
  int max_strands; // 0 = unbounded
};

const std::vector<SuiteInfo> &suites();
bool suite_applies(std::string_view name, int n);

// Throws invalid_input for an unknown name and not_applicable when n is out
// of range for the suite.
VerificationReport run_suite(std::string_view name, int n,
                             const SuiteOptions &options = {});

// Every applicable suite for n, merged into one report named "all".
VerificationReport verify_all(int n, const SuiteOptions &options = {});

} // namespace vtwin
