#ifndef BALKIT_HARNESS_H_
#define BALKIT_HARNESS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "balkit/bigint.h"
#include "balkit/identities.h"

namespace balkit {

struct CaseRecord {
  Index n = 0;
  std::optional<Index> m;
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

struct IdentityRecord {
  std::string id;
  // n (and m, for binary statements) run over [0, range_max].
  Index range_max = 0;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;  // outside the statement's domain
  std::vector<CaseRecord> failures;  // sorted by (n, m)
  std::vector<CaseRecord> cases;     // every evaluated case, when recorded
  std::int64_t wall_ms = 0;
};

struct VerificationReport {
  std::string suite;
  Index max_n = 0;
  std::vector<IdentityRecord> identities;

  bool pass() const;
  std::size_t failure_count() const;
};

struct SuiteOptions {
  Index max_n = 50;
  // Empty selects the whole catalog.
  std::vector<std::string> ids;
  unsigned workers = 1;
  // Keep every evaluated case (for verbose CSV), not just failures.
  bool record_cases = false;
};

// Exhaustively evaluates the selected statements over every index pair up
// to max_n. Records are in catalog order and independent of the worker
// count. Throws UnknownIdentityError for ids missing from `catalog` and
// DomainError when max_n == 0.
VerificationReport run_suite(const SuiteOptions& options,
                             std::span<const IdentityDescriptor> catalog);
VerificationReport run_suite(const SuiteOptions& options);

// Recurrence vs closed form vs fast doubling for all four sequences at
// every index up to max_n. One record per sequence; the first divergence,
// if any, is reported with lhs = recurrence value and rhs = the other.
VerificationReport compare_methods(Index max_n);

// Brute-force scan up to `limit` against the generated prefixes, plus a
// witness check for every member found.
VerificationReport oracle_equivalence(const BigInt& limit, unsigned workers = 1);

enum class ReportFormat { kPlain, kJson, kCsv };

// Throws FormatError for anything but "plain", "json", "csv".
ReportFormat parse_format(std::string_view tag);

struct EmitOptions {
  // Emit measured wall_ms. When false every wall_ms is written as 0 so the
  // output is byte-identical across runs.
  bool timings = false;
  // CSV: one row per evaluated case instead of per failure.
  bool verbose = false;
};

std::string emit_report(const VerificationReport& report, ReportFormat format,
                        const EmitOptions& options = {});

}  // namespace balkit

#endif  // BALKIT_HARNESS_H_
