#include "balkit/sequences.h"

#include <string>

#include "balkit/errors.h"
#include "balkit/quadring.h"

namespace balkit {
namespace {

// Halves x, which the algebra guarantees to be even.
BigInt exact_half(const BigInt& x, const char* what) {
  if (mpz_odd_p(x.get_mpz_t())) {
    throw ExactnessError(std::string("odd value where an even one is required: ") + what);
  }
  BigInt h;
  mpz_divexact_ui(h.get_mpz_t(), x.get_mpz_t(), 2);
  return h;
}

}  // namespace

void check_index(SequenceKind kind, Index n) {
  if (n < first_index(kind)) {
    throw DomainError(std::string(long_name(kind)) + " numbers are indexed from " +
                      std::to_string(first_index(kind)) + ", got " +
                      std::to_string(n));
  }
}

std::string_view short_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::kBalancing: return "B";
    case SequenceKind::kLucasBalancing: return "C";
    case SequenceKind::kCobalancing: return "b";
    case SequenceKind::kLucasCobalancing: return "c";
  }
  return "?";
}

std::string_view long_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::kBalancing: return "balancing";
    case SequenceKind::kLucasBalancing: return "lucas-balancing";
    case SequenceKind::kCobalancing: return "cobalancing";
    case SequenceKind::kLucasCobalancing: return "lucas-cobalancing";
  }
  return "?";
}

std::optional<SequenceKind> parse_kind(std::string_view name) {
  for (SequenceKind kind : kAllKinds) {
    if (name == short_name(kind) || name == long_name(kind)) return kind;
  }
  return std::nullopt;
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kAuto: return "auto";
    case Method::kRecurrence: return "recurrence";
    case Method::kBinet: return "binet";
    case Method::kDoubling: return "doubling";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::kAuto, Method::kRecurrence, Method::kBinet, Method::kDoubling}) {
    if (name == method_name(m)) return m;
  }
  return std::nullopt;
}

SequenceCursor::SequenceCursor(SequenceKind kind) : kind_(kind), index_(first_index(kind)) {
  switch (kind) {
    case SequenceKind::kBalancing: previous_ = 0; current_ = 0; next_ = 1; break;
    case SequenceKind::kLucasBalancing: previous_ = 0; current_ = 1; next_ = 3; break;
    case SequenceKind::kCobalancing: previous_ = 0; current_ = 0; next_ = 2; break;
    case SequenceKind::kLucasCobalancing: previous_ = 0; current_ = 1; next_ = 7; break;
  }
}

// Holds (current, next) = (X(k), X(k+1)); stepping computes X(k+2).
void SequenceCursor::advance() {
  // previous_ is scratch: X(k+2) = 6 X(k+1) - X(k) [+ 2 for cobalancing].
  mpz_mul_ui(previous_.get_mpz_t(), next_.get_mpz_t(), 6);
  mpz_sub(previous_.get_mpz_t(), previous_.get_mpz_t(), current_.get_mpz_t());
  if (kind_ == SequenceKind::kCobalancing) {
    mpz_add_ui(previous_.get_mpz_t(), previous_.get_mpz_t(), 2);
  }
  // (current, next, previous) <- (next, X(k+2), old current)
  mpz_swap(current_.get_mpz_t(), next_.get_mpz_t());
  mpz_swap(next_.get_mpz_t(), previous_.get_mpz_t());
  ++index_;
}

void SequenceCursor::seek(Index n) {
  if (n < index_) {
    throw DomainError("cursor cannot move backwards from " + std::to_string(index_) +
                      " to " + std::to_string(n));
  }
  while (index_ < n) advance();
}

BigInt term_recurrence(SequenceKind kind, Index n) {
  check_index(kind, n);
  SequenceCursor cursor(kind);
  cursor.seek(n);
  return cursor.value();
}

BigInt term_binet(SequenceKind kind, Index n) {
  check_index(kind, n);
  switch (kind) {
    case SequenceKind::kBalancing:
      // lambda1^n = C + 2B*sqrt(2); the conjugate terms cancel exactly.
      return exact_half(qpow(lambda1(), n).surd(), "sqrt(2) coefficient of lambda1^n");
    case SequenceKind::kLucasBalancing:
      return qpow(lambda1(), n).rational();
    case SequenceKind::kCobalancing: {
      // alpha1^(2n-1) = c + (2b+1)*sqrt(2).
      BigInt q = qpow(alpha1(), 2 * n - 1).surd();
      return exact_half(q - 1, "sqrt(2) coefficient of alpha1^(2n-1) minus one");
    }
    case SequenceKind::kLucasCobalancing:
      return qpow(alpha1(), 2 * n - 1).rational();
  }
  return 0;
}

std::pair<BigInt, BigInt> pair_bc(Index n) {
  // Walk the bits of n from the top keeping (B_k, C_k) and (B_{k+1}, C_{k+1}):
  //   B_{2k}   = 2 B_k C_k
  //   C_{2k}   = 2 C_k^2 - 1
  //   B_{2k+1} = B_{k+1} C_k + B_k C_{k+1}
  //   C_{2k+1} = C_{k+1} C_k + 8 B_{k+1} B_k
  // and when the bit is set shift by one with B_{j+1} = 3B_j + C_j,
  // C_{j+1} = 8B_j + 3C_j.
  BigInt bk = 0, ck = 1, bk1 = 1, ck1 = 3;
  BigInt b2k, c2k, b2k1, c2k1;
  int top = 63;
  while (top >= 0 && ((n >> top) & 1) == 0) --top;
  for (int bit = top; bit >= 0; --bit) {
    b2k = 2 * (bk * ck);
    c2k = 2 * (ck * ck) - 1;
    b2k1 = bk1 * ck + bk * ck1;
    c2k1 = ck1 * ck + 8 * (bk1 * bk);
    if ((n >> bit) & 1) {
      // k <- 2k+1, k+1 <- 2k+2
      bk = std::move(b2k1);
      ck = std::move(c2k1);
      bk1 = 3 * bk + ck;
      ck1 = 8 * bk + 3 * ck;
    } else {
      bk = std::move(b2k);
      ck = std::move(c2k);
      bk1 = std::move(b2k1);
      ck1 = std::move(c2k1);
    }
  }
  return {std::move(bk), std::move(ck)};
}

std::pair<BigInt, BigInt> pair_cobal(Index n) {
  check_index(SequenceKind::kCobalancing, n);
  auto [big_b, big_c] = pair_bc(n);
  // alpha1^(2n-1) = lambda1^n * (sqrt(2) - 1) = (4B - C) + (C - 2B)*sqrt(2).
  BigInt b = exact_half(big_c - 2 * big_b - 1, "C(n) - 2B(n) - 1");
  BigInt c = 4 * big_b - big_c;
  return {std::move(b), std::move(c)};
}

BigInt term_doubling(SequenceKind kind, Index n) {
  check_index(kind, n);
  switch (kind) {
    case SequenceKind::kBalancing: return pair_bc(n).first;
    case SequenceKind::kLucasBalancing: return pair_bc(n).second;
    case SequenceKind::kCobalancing: return pair_cobal(n).first;
    case SequenceKind::kLucasCobalancing: return pair_cobal(n).second;
  }
  return 0;
}

BigInt term(SequenceKind kind, Index n, Method method) {
  switch (method) {
    case Method::kAuto:
      return n > 64 ? term_doubling(kind, n) : term_recurrence(kind, n);
    case Method::kRecurrence: return term_recurrence(kind, n);
    case Method::kBinet: return term_binet(kind, n);
    case Method::kDoubling: return term_doubling(kind, n);
  }
  return 0;
}

std::vector<Term> stream(SequenceKind kind, Index from, Index to) {
  check_index(kind, from);
  if (from > to) {
    throw DomainError("empty range: from " + std::to_string(from) + " > to " +
                      std::to_string(to));
  }
  std::vector<Term> terms;
  terms.reserve(to - from + 1);
  SequenceCursor cursor(kind);
  cursor.seek(from);
  for (Index n = from;; ++n) {
    terms.push_back(Term{kind, n, cursor.value()});
    if (n == to) break;
    cursor.advance();
  }
  return terms;
}

}  // namespace balkit
