#include "balkit/harness.h"

#include <gtest/gtest.h>

#include "balkit/errors.h"

namespace balkit {
namespace {

// Copy of the catalog with C_DIFF_HALF's coefficient changed from 16 to 15.
std::vector<IdentityDescriptor> corrupted_catalog() {
  std::vector<IdentityDescriptor> catalog = list_identities();
  for (auto& d : catalog) {
    if (d.id == "C_DIFF_HALF") {
      d.rhs = [](const TermSource& t, Index n, Index m) {
        return BigInt(15 * t.B((n + m) / 2) * t.B((n - m) / 2));
      };
    }
  }
  return catalog;
}

TEST(RunSuiteTest, FullCatalogPasses) {
  auto report = run_suite(SuiteOptions{.max_n = 50});
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report.failure_count(), 0u);
  EXPECT_EQ(report.identities.size(), 36u);
  EXPECT_EQ(report.suite, "identities");
  EXPECT_EQ(report.max_n, 50u);
}

TEST(RunSuiteTest, BAddAtBoundOne) {
  auto report = run_suite(SuiteOptions{.max_n = 1, .ids = {"B_ADD"}});
  ASSERT_EQ(report.identities.size(), 1u);
  EXPECT_EQ(report.identities[0].checked, 4u);
  EXPECT_EQ(report.identities[0].skipped, 0u);
  EXPECT_TRUE(report.pass());
}

TEST(RunSuiteTest, DiffHalfSkipsCountedPairs) {
  // In-domain pairs (n >= m, same parity) among 11 x 11: sum over n of
  // floor(n/2) + 1 = 36.
  auto report = run_suite(SuiteOptions{.max_n = 10, .ids = {"B_DIFF_HALF"}});
  ASSERT_EQ(report.identities.size(), 1u);
  EXPECT_EQ(report.identities[0].checked, 36u);
  EXPECT_EQ(report.identities[0].skipped, 85u);
  EXPECT_TRUE(report.pass());
}

TEST(RunSuiteTest, EveryPairAccountedFor) {
  const Index max_n = 13;
  auto report = run_suite(SuiteOptions{.max_n = max_n});
  for (const auto& rec : report.identities) {
    const auto& d = lookup(rec.id);
    std::uint64_t total = d.arity == 2 ? (max_n + 1) * (max_n + 1) : max_n + 1;
    EXPECT_EQ(rec.checked + rec.skipped, total) << rec.id;
    EXPECT_GT(rec.checked, 0u) << rec.id;
  }
}

TEST(RunSuiteTest, SelectionKeepsCatalogOrder) {
  auto report = run_suite(SuiteOptions{.max_n = 3, .ids = {"MOD16_c", "B_ADD", "B_ADD"}});
  ASSERT_EQ(report.identities.size(), 2u);
  EXPECT_EQ(report.identities[0].id, "B_ADD");
  EXPECT_EQ(report.identities[1].id, "MOD16_c");
}

TEST(RunSuiteTest, Errors) {
  EXPECT_THROW(run_suite(SuiteOptions{.max_n = 5, .ids = {"NO_SUCH"}}), UnknownIdentityError);
  EXPECT_THROW(run_suite(SuiteOptions{.max_n = 0}), DomainError);
}

TEST(RunSuiteTest, NegativeControlDetectsCorruption) {
  auto catalog = corrupted_catalog();
  auto report = run_suite(SuiteOptions{.max_n = 20}, catalog);
  EXPECT_FALSE(report.pass());
  std::size_t corrupted_failures = 0;
  for (const auto& rec : report.identities) {
    if (rec.id == "C_DIFF_HALF") {
      corrupted_failures = rec.failures.size();
      for (const auto& f : rec.failures) {
        EXPECT_NE(f.lhs, f.rhs);
        EXPECT_FALSE(f.holds);
      }
      // Sorted by (n, m).
      for (std::size_t i = 1; i < rec.failures.size(); ++i) {
        auto prev = std::make_pair(rec.failures[i - 1].n, *rec.failures[i - 1].m);
        auto cur = std::make_pair(rec.failures[i].n, *rec.failures[i].m);
        EXPECT_LT(prev, cur);
      }
    } else {
      EXPECT_TRUE(rec.failures.empty()) << rec.id;
    }
  }
  EXPECT_GT(corrupted_failures, 0u);
  EXPECT_EQ(report.failure_count(), corrupted_failures);
}

TEST(RunSuiteTest, DeterministicAcrossWorkerCounts) {
  auto catalog = corrupted_catalog();
  std::string reference;
  for (unsigned workers : {1u, 2u, 5u, 64u}) {
    auto report = run_suite(SuiteOptions{.max_n = 25, .workers = workers}, catalog);
    std::string json = emit_report(report, ReportFormat::kJson);
    std::string csv = emit_report(report, ReportFormat::kCsv);
    if (reference.empty()) {
      reference = json + csv;
    } else {
      EXPECT_EQ(json + csv, reference) << workers;
    }
  }
}

TEST(RunSuiteTest, RecordCasesKeepsEveryEvaluation) {
  auto report = run_suite(SuiteOptions{.max_n = 4, .ids = {"C_SUB"}, .record_cases = true});
  const auto& rec = report.identities.at(0);
  EXPECT_EQ(rec.cases.size(), rec.checked);
  for (const auto& c : rec.cases) EXPECT_TRUE(c.holds);
}

TEST(CompareMethodsTest, Passes) {
  for (Index max_n : {1, 100}) {
    auto report = compare_methods(max_n);
    EXPECT_TRUE(report.pass());
    ASSERT_EQ(report.identities.size(), 4u);
    EXPECT_EQ(report.identities[0].checked, max_n + 1);  // B(0..max_n)
    EXPECT_EQ(report.identities[2].checked, max_n);      // b(1..max_n)
    EXPECT_EQ(report.identities[2].skipped, 1u);
  }
  EXPECT_THROW(compare_methods(0), DomainError);
}

TEST(OracleEquivalenceTest, SmallLimits) {
  auto report = oracle_equivalence(300);
  EXPECT_TRUE(report.pass());
  ASSERT_EQ(report.identities.size(), 4u);
  EXPECT_EQ(report.identities[0].id, "balancing_prefix");
  EXPECT_EQ(report.identities[0].checked, 4u);  // 1, 6, 35, 204
  EXPECT_EQ(report.identities[1].checked, 4u);
  EXPECT_EQ(report.identities[2].checked, 4u);  // 0, 2, 14, 84
  EXPECT_EQ(report.identities[3].checked, 4u);

  report = oracle_equivalence(0);
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report.identities[0].checked, 0u);
  EXPECT_EQ(report.identities[2].checked, 1u);  // just 0
}

TEST(EmitReportTest, EmptyReport) {
  VerificationReport empty;
  EXPECT_EQ(emit_report(empty, ReportFormat::kJson),
            "{\"identities\":[],\"max_n\":0,\"pass\":true,\"suite\":\"\"}\n");
  EXPECT_EQ(emit_report(empty, ReportFormat::kCsv), "id,n,m,lhs,rhs,holds\n");
  EXPECT_EQ(emit_report(empty, ReportFormat::kPlain), "suite  max_n=0\nPASS\n");
}

TEST(EmitReportTest, SingleFailure) {
  VerificationReport report;
  report.suite = "identities";
  report.max_n = 5;
  IdentityRecord rec;
  rec.id = "C_DIFF_HALF";
  rec.checked = 12;
  rec.skipped = 24;
  rec.wall_ms = 17;
  rec.failures.push_back(CaseRecord{3, 1, BigInt(96), BigInt(90), false});
  report.identities.push_back(rec);
  IdentityRecord unary;
  unary.id = "C2N_PLUS1";
  unary.checked = 5;
  unary.skipped = 1;
  unary.failures.push_back(CaseRecord{2, std::nullopt, BigInt("123456789012345678901234567890"),
                                      BigInt(-1), false});
  report.identities.push_back(unary);

  EXPECT_EQ(emit_report(report, ReportFormat::kCsv),
            "id,n,m,lhs,rhs,holds\n"
            "C_DIFF_HALF,3,1,96,90,false\n"
            "C2N_PLUS1,2,,123456789012345678901234567890,-1,false\n");
  EXPECT_EQ(emit_report(report, ReportFormat::kJson),
            "{\"identities\":[{\"checked\":12,\"failures\":[{\"lhs\":\"96\",\"m\":1,\"n\":3,"
            "\"rhs\":\"90\"}],\"id\":\"C_DIFF_HALF\",\"skipped\":24,\"wall_ms\":0},"
            "{\"checked\":5,\"failures\":[{\"lhs\":\"123456789012345678901234567890\",\"m\":null,"
            "\"n\":2,\"rhs\":\"-1\"}],\"id\":\"C2N_PLUS1\",\"skipped\":1,\"wall_ms\":0}],"
            "\"max_n\":5,\"pass\":false,\"suite\":\"identities\"}\n");
  std::string timed = emit_report(report, ReportFormat::kJson, EmitOptions{.timings = true});
  EXPECT_NE(timed.find("\"wall_ms\":17"), std::string::npos);
  EXPECT_EQ(emit_report(report, ReportFormat::kJson), emit_report(report, ReportFormat::kJson));
  std::string plain = emit_report(report, ReportFormat::kPlain);
  EXPECT_NE(plain.find("C_DIFF_HALF checked=12 skipped=24 failures=1 FAIL"), std::string::npos);
  EXPECT_EQ(plain.substr(plain.size() - 5), "FAIL\n");
}

TEST(EmitReportTest, FormatParsing) {
  EXPECT_EQ(parse_format("json"), ReportFormat::kJson);
  EXPECT_EQ(parse_format("csv"), ReportFormat::kCsv);
  EXPECT_EQ(parse_format("plain"), ReportFormat::kPlain);
  EXPECT_THROW(parse_format("xml"), FormatError);
  EXPECT_THROW(parse_format("JSON"), FormatError);
}

}  // namespace
}  // namespace balkit
