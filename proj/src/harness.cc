#include "balkit/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "balkit/errors.h"
#include "balkit/oracle.h"
#include "balkit/sequences.h"

namespace balkit {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

IdentityRecord check_identity(const IdentityDescriptor& d, const TermSource& terms,
                              Index max_n, bool record_cases) {
  auto start = Clock::now();
  IdentityRecord rec;
  rec.id = d.id;
  rec.range_max = max_n;
  auto visit = [&](Index n, std::optional<Index> m) {
    if (!domain_check(d, n, m)) {
      ++rec.skipped;
      return;
    }
    ++rec.checked;
    EvalResult r = evaluate(d, terms, n, m);
    if (!r.holds || record_cases) {
      CaseRecord c{n, m, std::move(r.lhs), std::move(r.rhs), r.holds};
      if (!c.holds) rec.failures.push_back(c);
      if (record_cases) rec.cases.push_back(std::move(c));
    }
  };
  for (Index n = 0; n <= max_n; ++n) {
    if (d.arity == 1) {
      visit(n, std::nullopt);
    } else {
      for (Index m = 0; m <= max_n; ++m) visit(n, m);
    }
  }
  // Enumeration is already (n, m)-ascending; keep the guarantee explicit.
  std::ranges::stable_sort(rec.failures, {}, [](const CaseRecord& c) {
    return std::make_pair(c.n, c.m.value_or(0));
  });
  rec.wall_ms = elapsed_ms(start);
  return rec;
}

}  // namespace

bool VerificationReport::pass() const {
  return std::ranges::all_of(identities, [](const IdentityRecord& r) { return r.failures.empty(); });
}

std::size_t VerificationReport::failure_count() const {
  std::size_t total = 0;
  for (const auto& r : identities) total += r.failures.size();
  return total;
}

VerificationReport run_suite(const SuiteOptions& options,
                             std::span<const IdentityDescriptor> catalog) {
  if (options.max_n < 1) throw DomainError("max_n must be at least 1");

  std::vector<const IdentityDescriptor*> selected;
  if (options.ids.empty()) {
    for (const auto& d : catalog) selected.push_back(&d);
  } else {
    for (const auto& id : options.ids) {
      if (find_identity(catalog, id) == nullptr) throw UnknownIdentityError(id);
    }
    for (const auto& d : catalog) {
      if (std::ranges::find(options.ids, d.id) != options.ids.end()) selected.push_back(&d);
    }
  }

  // Single-threaded fill; the table is read-only from here on.
  const TermTable terms(IdentityDescriptor::reach(options.max_n, options.max_n));

  VerificationReport report;
  report.suite = "identities";
  report.max_n = options.max_n;
  report.identities.resize(selected.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      try {
        report.identities[i] = check_identity(*selected[i], terms, options.max_n,
                                              options.record_cases);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned workers =
      std::clamp<unsigned>(options.workers, 1, std::max<std::size_t>(selected.size(), 1));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  return report;
}

VerificationReport run_suite(const SuiteOptions& options) {
  return run_suite(options, list_identities());
}

VerificationReport compare_methods(Index max_n) {
  if (max_n < 1) throw DomainError("max_n must be at least 1");
  VerificationReport report;
  report.suite = "methods";
  report.max_n = max_n;
  for (SequenceKind kind : kAllKinds) {
    auto start = Clock::now();
    IdentityRecord rec;
    rec.id = std::string(long_name(kind));
    rec.range_max = max_n;
    rec.skipped = first_index(kind);
    SequenceCursor cursor(kind);
    for (Index n = first_index(kind); n <= max_n; ++n, cursor.advance()) {
      ++rec.checked;
      const BigInt& linear = cursor.value();
      BigInt closed = term_binet(kind, n);
      BigInt doubled = term_doubling(kind, n);
      const BigInt* other = closed != linear ? &closed : doubled != linear ? &doubled : nullptr;
      if (other != nullptr) {
        rec.failures.push_back(CaseRecord{n, std::nullopt, linear, *other, false});
        rec.skipped += max_n - n;  // not examined past the first divergence
        break;
      }
    }
    rec.wall_ms = elapsed_ms(start);
    report.identities.push_back(std::move(rec));
  }
  return report;
}

VerificationReport oracle_equivalence(const BigInt& limit, unsigned workers) {
  VerificationReport report;
  report.suite = "oracle";
  report.max_n = limit.fits_ulong_p() ? limit.get_ui() : 0;

  for (SequenceKind family : {SequenceKind::kBalancing, SequenceKind::kCobalancing}) {
    auto start = Clock::now();
    std::vector<BigInt> scanned = search_family(family, limit, workers);

    // Members i = 0, 1, ... are B(i+1) and b(i+1) respectively.
    std::vector<BigInt> generated;
    SequenceCursor cursor(family);
    if (family == SequenceKind::kBalancing) cursor.advance();  // B(0) = 0 is not a member
    for (; cursor.value() <= limit; cursor.advance()) generated.push_back(cursor.value());

    IdentityRecord prefix;
    prefix.id = std::string(long_name(family)) + "_prefix";
    prefix.range_max = report.max_n;
    const std::size_t count = std::max(scanned.size(), generated.size());
    for (std::size_t i = 0; i < count; ++i) {
      ++prefix.checked;
      BigInt found = i < scanned.size() ? scanned[i] : BigInt(-1);
      BigInt expected = i < generated.size() ? generated[i] : BigInt(-1);
      if (found != expected) {
        prefix.failures.push_back(
            CaseRecord{i + 1, std::nullopt, found, expected, false});
      }
    }
    prefix.wall_ms = elapsed_ms(start);

    start = Clock::now();
    IdentityRecord witnesses;
    witnesses.id = std::string(long_name(family)) + "_witness";
    witnesses.range_max = report.max_n;
    for (std::size_t i = 0; i < scanned.size(); ++i) {
      ++witnesses.checked;
      const BigInt& x = scanned[i];
      try {
        BalancerWitness w =
            family == SequenceKind::kBalancing ? balancer_of(x) : cobalancer_of(x);
        if (w.left_sum != w.right_sum) {
          witnesses.failures.push_back(CaseRecord{i + 1, std::nullopt, w.left_sum, w.right_sum, false});
        }
      } catch (const std::exception&) {
        witnesses.failures.push_back(CaseRecord{i + 1, std::nullopt, x, BigInt(-1), false});
      }
    }
    witnesses.wall_ms = elapsed_ms(start);

    report.identities.push_back(std::move(prefix));
    report.identities.push_back(std::move(witnesses));
  }
  return report;
}

ReportFormat parse_format(std::string_view tag) {
  if (tag == "plain") return ReportFormat::kPlain;
  if (tag == "json") return ReportFormat::kJson;
  if (tag == "csv") return ReportFormat::kCsv;
  throw FormatError("unsupported format: " + std::string(tag));
}

namespace {

std::string emit_json(const VerificationReport& report, const EmitOptions& options) {
  // nlohmann::json objects are std::map-backed, so keys come out sorted.
  nlohmann::json identities = nlohmann::json::array();
  for (const auto& rec : report.identities) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : rec.failures) {
      failures.push_back({{"n", f.n},
                          {"m", f.m ? nlohmann::json(*f.m) : nlohmann::json(nullptr)},
                          {"lhs", to_decimal(f.lhs)},
                          {"rhs", to_decimal(f.rhs)}});
    }
    identities.push_back({{"id", rec.id},
                          {"checked", rec.checked},
                          {"skipped", rec.skipped},
                          {"wall_ms", options.timings ? rec.wall_ms : 0},
                          {"failures", std::move(failures)}});
  }
  nlohmann::json doc = {{"suite", report.suite},
                        {"max_n", report.max_n},
                        {"pass", report.pass()},
                        {"identities", std::move(identities)}};
  return doc.dump() + "\n";
}

void csv_row(std::ostream& os, const std::string& id, const CaseRecord& c) {
  os << id << ',' << c.n << ',';
  if (c.m) os << *c.m;
  os << ',' << c.lhs << ',' << c.rhs << ',' << (c.holds ? "true" : "false") << '\n';
}

std::string emit_csv(const VerificationReport& report, const EmitOptions& options) {
  std::ostringstream os;
  os << "id,n,m,lhs,rhs,holds\n";
  for (const auto& rec : report.identities) {
    const auto& rows = options.verbose && !rec.cases.empty() ? rec.cases : rec.failures;
    for (const auto& c : rows) csv_row(os, rec.id, c);
  }
  return os.str();
}

std::string emit_plain(const VerificationReport& report, const EmitOptions& options) {
  std::ostringstream os;
  os << "suite " << report.suite << " max_n=" << report.max_n << '\n';
  for (const auto& rec : report.identities) {
    os << rec.id << " checked=" << rec.checked << " skipped=" << rec.skipped
       << " failures=" << rec.failures.size();
    if (options.timings) os << " wall_ms=" << rec.wall_ms;
    os << (rec.failures.empty() ? " ok" : " FAIL") << '\n';
    for (const auto& f : rec.failures) {
      os << "  n=" << f.n;
      if (f.m) os << " m=" << *f.m;
      os << " lhs=" << f.lhs << " rhs=" << f.rhs << '\n';
    }
  }
  os << (report.pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace

std::string emit_report(const VerificationReport& report, ReportFormat format,
                        const EmitOptions& options) {
  switch (format) {
    case ReportFormat::kJson: return emit_json(report, options);
    case ReportFormat::kCsv: return emit_csv(report, options);
    case ReportFormat::kPlain: return emit_plain(report, options);
  }
  throw FormatError("unsupported format");
}

}  // namespace balkit
