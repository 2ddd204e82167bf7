#ifndef BALKIT_IDENTITIES_H_
#define BALKIT_IDENTITIES_H_

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "balkit/bigint.h"
#include "balkit/sequences.h"

namespace balkit {

// Read access to sequence terms for identity evaluation. Implementations
// throw DomainError for indices outside a sequence's domain.
class TermSource {
 public:
  virtual ~TermSource() = default;
  virtual const BigInt& get(SequenceKind kind, Index n) const = 0;

  const BigInt& B(Index n) const { return get(SequenceKind::kBalancing, n); }
  const BigInt& C(Index n) const { return get(SequenceKind::kLucasBalancing, n); }
  const BigInt& b(Index n) const { return get(SequenceKind::kCobalancing, n); }
  const BigInt& c(Index n) const { return get(SequenceKind::kLucasCobalancing, n); }
};

// Computes terms on demand by fast doubling and remembers them.
// Not thread-safe.
class DirectTerms final : public TermSource {
 public:
  const BigInt& get(SequenceKind kind, Index n) const override;

 private:
  mutable std::map<std::pair<SequenceKind, Index>, BigInt> memo_;
};

// Every term of all four sequences up to a fixed bound, filled by one
// ascending recurrence pass. Read-only after construction, so it may be
// shared between threads.
class TermTable final : public TermSource {
 public:
  explicit TermTable(Index max_index);

  Index max_index() const { return max_index_; }
  // Throws DomainError below a sequence's domain and std::out_of_range
  // above max_index().
  const BigInt& get(SequenceKind kind, Index n) const override;

 private:
  Index max_index_;
  std::vector<BigInt> values_[4];
};

enum class StatementKind { kEquation, kCongruence };

// Relation between the two indices of a binary statement.
enum class IndexOrder {
  kAny,        // no constraint
  kNGeM,       // n >= m
  kNGtM,       // n > m
  kNLeM,       // n <= m
};

struct IndexDomain {
  Index n_min = 0;
  Index m_min = 0;  // ignored for unary statements
  IndexOrder order = IndexOrder::kAny;
  bool same_parity = false;

  bool contains(Index n, std::optional<Index> m) const;
};

// One side of a statement. For unary statements m is passed as 0.
using SideFn = std::function<BigInt(const TermSource&, Index n, Index m)>;

struct IdentityDescriptor {
  std::string id;
  int arity = 2;
  StatementKind kind = StatementKind::kEquation;
  IndexDomain domain;
  // Equations: the two sides. Congruences: lhs is the observed residue and
  // rhs the expected one, both reduced into [0, modulus).
  SideFn lhs;
  SideFn rhs;
  unsigned long modulus = 0;  // congruences only
  std::string statement;      // human-readable form
  // Alternative reading of the left side for statements whose printed
  // form disagrees with the one that holds; kept for auditing only.
  SideFn alternate_lhs;
  std::string note;

  // Upper bound on any sequence index lhs/rhs touch at (n, m).
  static Index reach(Index n, Index m) { return 4 * std::max(n, m) + 2; }
};

struct EvalResult {
  std::string id;
  Index n = 0;
  std::optional<Index> m;
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

// The complete catalog: 27 equations followed by 9 congruences, in a fixed
// order with unique ids. Immutable.
const std::vector<IdentityDescriptor>& list_identities();

// Throws UnknownIdentityError.
const IdentityDescriptor& lookup(std::string_view id);
const IdentityDescriptor* find_identity(std::span<const IdentityDescriptor> catalog,
                                        std::string_view id);

// Throws UnknownIdentityError, or ArityError when m is supplied for a unary
// statement or missing for a binary one.
bool domain_check(std::string_view id, Index n, std::optional<Index> m);
bool domain_check(const IdentityDescriptor& d, Index n, std::optional<Index> m);

// Exact evaluation. Throws DomainError when (n, m) is outside the domain.
EvalResult evaluate(std::string_view id, Index n, std::optional<Index> m);
EvalResult evaluate(const IdentityDescriptor& d, const TermSource& terms, Index n,
                    std::optional<Index> m);

}  // namespace balkit

#endif  // BALKIT_IDENTITIES_H_
