#ifndef BALKIT_SEQUENCES_H_
#define BALKIT_SEQUENCES_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "balkit/bigint.h"

namespace balkit {

// The four integer sequences this library computes.
//
//   Balancing         B(n), n >= 0:  0, 1, 6, 35, 204, ...
//   LucasBalancing    C(n), n >= 0:  1, 3, 17, 99, 577, ...
//   Cobalancing       b(n), n >= 1:  0, 2, 14, 84, 492, ...
//   LucasCobalancing  c(n), n >= 1:  1, 7, 41, 239, 1393, ...
enum class SequenceKind { kBalancing, kLucasBalancing, kCobalancing, kLucasCobalancing };

inline constexpr SequenceKind kAllKinds[] = {
    SequenceKind::kBalancing, SequenceKind::kLucasBalancing,
    SequenceKind::kCobalancing, SequenceKind::kLucasCobalancing};

// Smallest valid index: 0 for B and C, 1 for b and c.
constexpr Index first_index(SequenceKind kind) {
  return (kind == SequenceKind::kCobalancing ||
          kind == SequenceKind::kLucasCobalancing)
             ? 1
             : 0;
}

// Throws DomainError when n is below first_index(kind).
void check_index(SequenceKind kind, Index n);

// "B", "C", "b", "c".
std::string_view short_name(SequenceKind kind);
// "balancing", "lucas-balancing", "cobalancing", "lucas-cobalancing".
std::string_view long_name(SequenceKind kind);
// Accepts short (case-sensitive) or long names.
std::optional<SequenceKind> parse_kind(std::string_view name);

struct Term {
  SequenceKind kind;
  Index n;
  BigInt value;
};

enum class Method { kAuto, kRecurrence, kBinet, kDoubling };

std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

// Linear iteration of the defining second-order recurrence from its seeds.
BigInt term_recurrence(SequenceKind kind, Index n);

// Closed form evaluated exactly in Z[sqrt(2)].
BigInt term_binet(SequenceKind kind, Index n);

// (B(n), C(n)) by fast doubling, O(log n) multiplications.
std::pair<BigInt, BigInt> pair_bc(Index n);

// (b(n), c(n)) derived from pair_bc(n). n >= 1.
std::pair<BigInt, BigInt> pair_cobal(Index n);

// Fast-doubling value of one sequence.
BigInt term_doubling(SequenceKind kind, Index n);

// Dispatches on method. kAuto picks doubling above index 64 and the
// recurrence otherwise.
BigInt term(SequenceKind kind, Index n, Method method = Method::kAuto);

// Consecutive terms from..to inclusive, produced by one recurrence pass.
std::vector<Term> stream(SequenceKind kind, Index from, Index to);

// Single-consumer cursor walking one sequence forward by its recurrence.
class SequenceCursor {
 public:
  // Positioned at first_index(kind).
  explicit SequenceCursor(SequenceKind kind);

  SequenceKind kind() const { return kind_; }
  Index index() const { return index_; }
  const BigInt& value() const { return current_; }

  void advance();
  // Advances until index() == n. n must not be behind the cursor.
  void seek(Index n);

 private:
  SequenceKind kind_;
  Index index_;
  BigInt previous_;
  BigInt current_;
  BigInt next_;
};

}  // namespace balkit

#endif  // BALKIT_SEQUENCES_H_
