#include <set>

#include <json.hpp>

#include "support.hpp"
#include "vtwin/error.hpp"
#include "vtwin/verify.hpp"

using namespace vtwin;

namespace {

VWord W(int n, const char *text) { return VWord::parse(n, text); }

std::string describe_failures(const VerificationReport &r) {
  std::string out;
  for (const ClaimResult &c : r.claims)
    if (!c.passed)
      out += c.id + " " + c.witness.value_or("") + "\n";
  return out;
}

} // namespace

TEST(Suites, AllPassWhereApplicable) {
  for (int n = 2; n <= 6; ++n)
    for (const SuiteInfo &s : suites()) {
      if (!suite_applies(s.name, n))
        continue;
      const VerificationReport r = run_suite(s.name, n);
      EXPECT_FALSE(r.claims.empty()) << s.name << " n=" << n;
      EXPECT_TRUE(r.all_passed()) << s.name << " n=" << n << "\n" << describe_failures(r);
    }
}

TEST(Suites, Applicability) {
  EXPECT_FALSE(suite_applies("reduced", 2));
  EXPECT_TRUE(suite_applies("graph", 6));
  EXPECT_FALSE(suite_applies("graph", 7));
  EXPECT_TRUE(suite_applies("pvt4", 4));
  EXPECT_FALSE(suite_applies("pvt4", 5));
  try {
    run_suite("pvt4", 5);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::not_applicable);
  }
  try {
    run_suite("nonsense", 4);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::invalid_input);
  }
}

TEST(CheckVtEqual, PerturbedIdentityFails) {
  const VWord r1 = W(4, "r1"), r2 = W(4, "r2");
  // intact identity
  EXPECT_TRUE(check_vt_equal("ok", "a", r2, r1 * commutator(r1, commutator(r1, r2))).passed);
  // one commutator layer dropped
  const ClaimResult bad = check_vt_equal("bad", "a", r2, r1 * commutator(r1, r2));
  EXPECT_FALSE(bad.passed);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_EQ(*bad.witness, free_reduce(r2 * invert(r1 * commutator(r1, r2))).str());
  const ClaimResult s = check_vt_equal("s", "a", W(3, "s1 s2"), W(3, "s2 s1"));
  EXPECT_FALSE(s.passed);
  EXPECT_EQ(s.witness, std::optional<std::string>("s1 s2 s1 s2"));
}

TEST(Report, JsonSchema) {
  const VerificationReport r = run_suite("reduced", 4);
  const auto doc = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(doc.at("suite"), "reduced");
  EXPECT_EQ(doc.at("n"), 4);
  EXPECT_EQ(doc.at("seed"), kDefaultSeed);
  ASSERT_TRUE(doc.at("claims").is_array());
  for (const auto &c : doc.at("claims")) {
    EXPECT_TRUE(c.at("id").is_string());
    EXPECT_TRUE(c.at("anchor").is_string());
    EXPECT_TRUE(c.at("status") == "pass" || c.at("status") == "fail");
  }
  EXPECT_EQ(doc.at("claims").size(), r.claims.size());
}

TEST(Report, TextLayout) {
  const VerificationReport r = run_suite("graph", 4);
  const std::string text = r.to_text();
  EXPECT_EQ(text.rfind("suite graph  n=4  seed=24301", 0), 0u);
  EXPECT_NE(text.find("PASS graph/"), std::string::npos);
  EXPECT_NE(text.find(std::to_string(r.claims.size()) + " claims, 0 failed"), std::string::npos);
}

TEST(Report, DeterministicAndSorted) {
  for (int n : {3, 4, 5}) {
    const VerificationReport a = verify_all(n), b = verify_all(n);
    EXPECT_EQ(a.to_json(), b.to_json());
    EXPECT_EQ(a.suite, "all");
    for (std::size_t k = 1; k < a.claims.size(); ++k)
      EXPECT_LT(a.claims[k - 1].id, a.claims[k].id);
  }
}

TEST(Report, SeedChangesRandomClaimsOnly) {
  SuiteOptions o;
  o.seed = 7;
  const VerificationReport r = verify_semidirect(4, o);
  EXPECT_EQ(r.seed, 7u);
  EXPECT_TRUE(r.all_passed());
  bool tagged = false;
  for (const ClaimResult &c : r.claims)
    tagged |= c.id.find("@seed=7") != std::string::npos;
  EXPECT_TRUE(tagged);
}

TEST(Report, AnchorsNonEmptyAndIdsUnique) {
  for (int n = 2; n <= 6; ++n) {
    const VerificationReport r = verify_all(n);
    std::set<std::string> ids;
    for (const ClaimResult &c : r.claims) {
      EXPECT_FALSE(c.anchor.empty()) << c.id;
      EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    }
  }
}

TEST(Report, FailureCount) {
  VerificationReport r{"x", 3, 1, {}};
  r.claims.push_back({"b", "a", false, "w"});
  r.claims.push_back({"a", "a", true, std::nullopt});
  r.finalize();
  EXPECT_EQ(r.failures(), 1u);
  EXPECT_FALSE(r.all_passed());
  EXPECT_EQ(r.claims.front().id, "a");
  EXPECT_NE(r.to_text().find("FAIL b  [a]  witness: w"), std::string::npos);
}
