#include "balkit/cli.h"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "balkit/errors.h"
#include "balkit/oracle.h"
#include "balkit/quadring.h"
#include "balkit/sequences.h"

namespace balkit::cli {
namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Index parse_index(const std::string& text, const char* what) {
  Index value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
  }
  return value;
}

BigInt parse_natural(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError(std::string("invalid ") + what + ": '" + text +
                     "' (expected a nonnegative decimal integer)");
  }
  return BigInt(text, 10);
}

SequenceKind parse_kind_or_throw(const std::string& name) {
  auto kind = parse_kind(name);
  if (!kind) throw UsageError("unknown sequence kind: '" + name + "'");
  return *kind;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

// BALKIT_MAX_N, when set, caps verification bounds.
Index cap_from_env(Index max_n) {
  const char* env = std::getenv("BALKIT_MAX_N");
  if (env == nullptr || *env == '\0') return max_n;
  return std::min(max_n, parse_index(env, "BALKIT_MAX_N"));
}

int cmd_term(const CliConfig& cfg, ReportFormat format, std::ostream& out) {
  SequenceKind kind = parse_kind_or_throw(cfg.kind);
  Index n = parse_index(cfg.index, "index");
  auto method = parse_method(cfg.method);
  if (!method) throw UsageError("unknown method: '" + cfg.method + "'");
  BigInt value = term(kind, n, *method);
  switch (format) {
    case ReportFormat::kPlain:
      out << value << '\n';
      break;
    case ReportFormat::kCsv:
      out << "kind,n,value\n" << long_name(kind) << ',' << n << ',' << value << '\n';
      break;
    case ReportFormat::kJson:
      out << nlohmann::json{{"kind", long_name(kind)}, {"n", n}, {"value", to_decimal(value)}}
                 .dump()
          << '\n';
      break;
  }
  return kExitOk;
}

int cmd_seq(const CliConfig& cfg, ReportFormat format, std::ostream& out) {
  SequenceKind kind = parse_kind_or_throw(cfg.kind);
  Index from = cfg.from.empty() ? first_index(kind) : parse_index(cfg.from, "--from");
  Index to = parse_index(cfg.to, "--to");
  std::vector<Term> terms = stream(kind, from, to);
  if (format == ReportFormat::kJson) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& t : terms) list.push_back({{"n", t.n}, {"value", to_decimal(t.value)}});
    out << nlohmann::json{{"kind", long_name(kind)}, {"terms", std::move(list)}}.dump() << '\n';
    return kExitOk;
  }
  if (format == ReportFormat::kCsv) out << "n,value\n";
  for (const auto& t : terms) {
    if (format == ReportFormat::kCsv) out << t.n << ',';
    out << t.value << '\n';
  }
  return kExitOk;
}

// Index of x in the sequence, scanning forward while terms are <= x.
std::optional<Index> index_of(SequenceKind kind, const BigInt& x) {
  SequenceCursor cursor(kind);
  while (cursor.value() < x) cursor.advance();
  if (cursor.value() == x) return cursor.index();
  return std::nullopt;
}

struct Membership {
  std::string family;
  std::optional<Index> index;
  std::optional<BigInt> witness;  // balancer or cobalancer
  std::string witness_name;
};

std::vector<Membership> classify(const BigInt& x) {
  std::vector<Membership> result;

  Membership bal{"balancing", std::nullopt, std::nullopt, "balancer"};
  if (is_balancing(x)) {
    bal.witness = balancer_of(x).r;
    bal.index = index_of(SequenceKind::kBalancing, x);
  }
  result.push_back(bal);

  Membership cobal{"cobalancing", std::nullopt, std::nullopt, "cobalancer"};
  if (is_cobalancing(x)) {
    cobal.witness = cobalancer_of(x).r;
    cobal.index = index_of(SequenceKind::kCobalancing, x);
  }
  result.push_back(cobal);

  // x = C(n) iff x^2 - 8y^2 = 1 with y = B(n).
  Membership lucas{"lucas-balancing", std::nullopt, std::nullopt, ""};
  if (x >= 1) {
    BigInt t = x * x - 1;
    if (mpz_divisible_ui_p(t.get_mpz_t(), 8)) {
      t /= 8;
      BigInt y = isqrt(t);
      if (y * y == t) lucas.index = index_of(SequenceKind::kBalancing, y);
    }
  }
  result.push_back(lucas);

  // x = c(n) iff x^2 = 8y^2 + 8y + 1, i.e. (x^2 + 1)/2 = s^2 with y = (s-1)/2.
  Membership lucas_co{"lucas-cobalancing", std::nullopt, std::nullopt, ""};
  if (x >= 1 && mpz_odd_p(x.get_mpz_t())) {
    BigInt t = (x * x + 1) / 2;
    BigInt s = isqrt(t);
    if (s * s == t && mpz_odd_p(s.get_mpz_t())) {
      lucas_co.index = index_of(SequenceKind::kCobalancing, (s - 1) / 2);
    }
  }
  result.push_back(lucas_co);
  return result;
}

int cmd_classify(const CliConfig& cfg, ReportFormat format, std::ostream& out) {
  BigInt x = parse_natural(cfg.value, "value");
  std::vector<Membership> rows = classify(x);
  switch (format) {
    case ReportFormat::kPlain:
      for (const auto& r : rows) {
        out << r.family << ": ";
        if (!r.index) {
          out << "no\n";
          continue;
        }
        out << "yes index=" << *r.index;
        if (r.witness) out << ' ' << r.witness_name << '=' << *r.witness;
        out << '\n';
      }
      break;
    case ReportFormat::kCsv:
      out << "family,member,index,witness\n";
      for (const auto& r : rows) {
        out << r.family << ',' << (r.index ? "true" : "false") << ',';
        if (r.index) out << *r.index;
        out << ',';
        if (r.witness) out << *r.witness;
        out << '\n';
      }
      break;
    case ReportFormat::kJson: {
      nlohmann::json doc = {{"value", to_decimal(x)}};
      for (const auto& r : rows) {
        nlohmann::json entry = {{"member", r.index.has_value()}};
        if (r.index) entry["index"] = *r.index;
        if (r.witness) entry[r.witness_name] = to_decimal(*r.witness);
        doc[r.family] = std::move(entry);
      }
      out << doc.dump() << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_search(const CliConfig& cfg, ReportFormat format, unsigned jobs, std::ostream& out) {
  auto family = parse_kind(cfg.family);
  if (!family || (*family != SequenceKind::kBalancing && *family != SequenceKind::kCobalancing)) {
    throw UsageError("search family must be balancing or cobalancing, got '" + cfg.family + "'");
  }
  BigInt limit = parse_natural(cfg.limit, "--limit");
  std::vector<BigInt> members;
  if (cfg.method == "oracle") {
    members = search_family(*family, limit, jobs);
  } else if (cfg.method == "generator") {
    SequenceCursor cursor(*family);
    if (*family == SequenceKind::kBalancing) cursor.advance();  // skip B(0) = 0
    for (; cursor.value() <= limit; cursor.advance()) members.push_back(cursor.value());
  } else {
    throw UsageError("search method must be oracle or generator, got '" + cfg.method + "'");
  }
  if (format == ReportFormat::kJson) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& v : members) list.push_back(to_decimal(v));
    out << nlohmann::json{{"family", long_name(*family)}, {"members", std::move(list)}}.dump()
        << '\n';
    return kExitOk;
  }
  if (format == ReportFormat::kCsv) out << "value\n";
  for (const auto& v : members) out << v << '\n';
  return kExitOk;
}

struct BenchRow {
  Method method;
  double wall_ms = 0;
  BigInt value;
  std::optional<BigInt> lucas;  // C(n), when the method yields it
};

int cmd_bench(const CliConfig& cfg, ReportFormat format, std::ostream& out) {
  Index n = parse_index(cfg.bench_n, "--n");
  if (n < 1) throw UsageError("--n must be at least 1");
  std::vector<Method> methods;
  for (const auto& name : split_commas(cfg.methods)) {
    auto m = parse_method(name);
    if (!m || *m == Method::kAuto) throw UsageError("unknown bench method: '" + name + "'");
    methods.push_back(*m);
  }
  if (methods.empty()) throw UsageError("--methods is empty");

  std::vector<BenchRow> rows;
  for (Method m : methods) {
    BenchRow row;
    row.method = m;
    auto start = std::chrono::steady_clock::now();
    switch (m) {
      case Method::kRecurrence:
        row.value = term_recurrence(SequenceKind::kBalancing, n);
        break;
      case Method::kBinet: {
        QuadInt p = qpow(lambda1(), n);
        row.value = p.surd() / 2;
        row.lucas = p.rational();
        break;
      }
      case Method::kDoubling:
      case Method::kAuto: {
        auto [b, c] = pair_bc(n);
        row.value = std::move(b);
        row.lucas = std::move(c);
        break;
      }
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                      .count();
    rows.push_back(std::move(row));
  }

  bool equal = true;
  for (const auto& r : rows) equal = equal && r.value == rows.front().value;
  std::string pell = "skipped";
  for (const auto& r : rows) {
    if (r.lucas) {
      pell = (*r.lucas * *r.lucas - 8 * r.value * r.value == 1) ? "ok" : "FAILED";
      if (pell != "ok") break;
    }
  }
  const std::size_t digits = to_decimal(rows.front().value).size();

  auto ms = [](double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << v;
    return s.str();
  };
  switch (format) {
    case ReportFormat::kPlain:
      out << "n " << n << '\n' << std::left << std::setw(12) << "method" << std::setw(14)
          << "wall_ms" << "digits\n";
      for (const auto& r : rows) {
        out << std::setw(12) << method_name(r.method) << std::setw(14) << ms(r.wall_ms) << digits
            << '\n';
      }
      out << "values_equal " << (equal ? "true" : "false") << '\n' << "pell " << pell << '\n';
      break;
    case ReportFormat::kCsv:
      out << "method,wall_ms,digits,values_equal,pell\n";
      for (const auto& r : rows) {
        out << method_name(r.method) << ',' << ms(r.wall_ms) << ',' << digits << ','
            << (equal ? "true" : "false") << ',' << pell << '\n';
      }
      break;
    case ReportFormat::kJson: {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& r : rows) {
        list.push_back({{"method", method_name(r.method)}, {"wall_ms", r.wall_ms}, {"digits", digits}});
      }
      out << nlohmann::json{{"n", n}, {"rows", std::move(list)}, {"values_equal", equal},
                            {"pell", pell}}
                 .dump()
          << '\n';
      break;
    }
  }
  return (equal && pell != "FAILED") ? kExitOk : kExitFailure;
}

}  // namespace

int run_verify(const VerifyOptions& options, std::span<const IdentityDescriptor> catalog,
               std::ostream& out, std::ostream& err) {
  VerificationReport report;
  if (options.suite == "identities") {
    SuiteOptions suite;
    suite.max_n = options.max_n;
    suite.ids = options.ids;
    suite.workers = options.jobs;
    suite.record_cases = options.verbose && options.format == ReportFormat::kCsv;
    report = run_suite(suite, catalog);
  } else if (options.suite == "methods") {
    report = compare_methods(options.max_n);
  } else if (options.suite == "oracle") {
    report = oracle_equivalence(options.limit, options.jobs);
  } else {
    throw UsageError("unknown suite: '" + options.suite + "'");
  }
  out << emit_report(report, options.format, EmitOptions{options.timings, options.verbose});
  if (!report.pass()) {
    err << "verification failed: " << report.failure_count() << " failing case(s)\n";
    return kExitFailure;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Balancing, cobalancing and Lucas-type sequences: exact evaluation and identity "
               "verification",
               "balkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format: plain, json or csv");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* term_cmd = app.add_subcommand("term", "Print one sequence term");
  term_cmd->add_option("kind", cfg.kind, "B, C, b, c or a long name")->required();
  term_cmd->add_option("n", cfg.index, "Index")->required();
  term_cmd->add_option("--method", cfg.method, "auto, recurrence, binet or doubling");
  term_cmd->callback([&] { cfg.command = Command::kTerm; });

  auto* seq_cmd = app.add_subcommand("seq", "Print consecutive sequence terms");
  seq_cmd->add_option("kind", cfg.kind, "B, C, b, c or a long name")->required();
  seq_cmd->add_option("--from", cfg.from, "First index (default: start of the sequence)");
  seq_cmd->add_option("--to", cfg.to, "Last index")->required();
  seq_cmd->callback([&] { cfg.command = Command::kSeq; });

  auto* verify_cmd = app.add_subcommand("verify", "Check the identity catalog exhaustively");
  verify_cmd->add_option("--max-n", cfg.max_n, "Largest index enumerated");
  verify_cmd->add_option("--id", cfg.ids, "Restrict to these identity ids (repeatable)");
  verify_cmd->add_option("--suite", cfg.suite, "identities, methods or oracle");
  verify_cmd->add_option("--limit", cfg.limit, "Scan bound for the oracle suite");
  verify_cmd->add_flag("--verbose", cfg.verbose, "CSV: one row per evaluated case");
  verify_cmd->add_flag("--timings", cfg.timings, "Report measured wall_ms");
  verify_cmd->callback([&] { cfg.command = Command::kVerify; });

  auto* classify_cmd = app.add_subcommand("classify", "Report sequence memberships of a number");
  classify_cmd->add_option("x", cfg.value, "Nonnegative integer")->required();
  classify_cmd->callback([&] { cfg.command = Command::kClassify; });

  auto* search_cmd = app.add_subcommand("search", "List family members up to a bound");
  search_cmd->add_option("family", cfg.family, "balancing or cobalancing")->required();
  search_cmd->add_option("--limit", cfg.limit, "Upper bound (inclusive)")->required();
  search_cmd->add_option("--method", cfg.method, "oracle (brute force) or generator");
  search_cmd->callback([&] {
    cfg.command = Command::kSearch;
    if (cfg.method == "auto") cfg.method = "oracle";
  });

  auto* bench_cmd = app.add_subcommand("bench", "Time the evaluation methods on B(n)");
  bench_cmd->add_option("--n", cfg.bench_n, "Index");
  bench_cmd->add_option("--methods", cfg.methods, "Comma-separated: recurrence, binet, doubling");
  bench_cmd->callback([&] { cfg.command = Command::kBench; });

  std::vector<const char*> argv{"balkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    ReportFormat format = parse_format(cfg.format);
    switch (cfg.command) {
      case Command::kTerm: return cmd_term(cfg, format, out);
      case Command::kSeq: return cmd_seq(cfg, format, out);
      case Command::kClassify: return cmd_classify(cfg, format, out);
      case Command::kSearch: return cmd_search(cfg, format, cfg.jobs, out);
      case Command::kBench: return cmd_bench(cfg, format, out);
      case Command::kVerify: {
        VerifyOptions v;
        v.suite = cfg.suite;
        v.max_n = cap_from_env(parse_index(cfg.max_n, "--max-n"));
        if (!cfg.limit.empty()) v.limit = parse_natural(cfg.limit, "--limit");
        v.ids = cfg.ids;
        v.format = format;
        v.jobs = cfg.jobs;
        v.verbose = cfg.verbose;
        v.timings = cfg.timings;
        return run_verify(v, list_identities(), out, err);
      }
      case Command::kNone: break;
    }
    err << "no command given\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace balkit::cli
