#ifndef BALKIT_CLI_H_
#define BALKIT_CLI_H_

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "balkit/bigint.h"
#include "balkit/harness.h"
#include "balkit/identities.h"

namespace balkit::cli {

// Exit codes are part of the command-line contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a verification found a failure
inline constexpr int kExitUsage = 2;    // usage, parse or domain error

enum class Command { kNone, kTerm, kSeq, kVerify, kClassify, kSearch, kBench };

struct CliConfig {
  Command command = Command::kNone;
  std::string kind;             // term, seq
  std::string family;           // search
  std::string index;            // term
  std::string from;             // seq
  std::string to;               // seq
  std::string value;            // classify
  std::string limit;            // search, verify --suite oracle
  std::string method = "auto";  // term: auto|recurrence|binet|doubling; search: oracle|generator
  std::string methods = "recurrence,doubling";  // bench
  std::string bench_n = "10000";
  std::string suite = "identities";
  std::string max_n = "50";
  std::vector<std::string> ids;
  std::string format = "plain";
  unsigned jobs = 1;
  bool verbose = false;
  bool timings = false;
};

struct VerifyOptions {
  std::string suite = "identities";  // identities | methods | oracle
  Index max_n = 50;
  BigInt limit = 1000000;  // oracle suite scan bound
  std::vector<std::string> ids;
  ReportFormat format = ReportFormat::kPlain;
  unsigned jobs = 1;
  bool verbose = false;
  bool timings = false;
};

// Parses and runs one invocation. args excludes the program name. Data goes
// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The verify command against an explicit catalog.
int run_verify(const VerifyOptions& options, std::span<const IdentityDescriptor> catalog,
               std::ostream& out, std::ostream& err);

}  // namespace balkit::cli

#endif  // BALKIT_CLI_H_
