#ifndef BALKIT_ORACLE_H_
#define BALKIT_ORACLE_H_

#include <vector>

#include "balkit/bigint.h"
#include "balkit/sequences.h"

namespace balkit {

// First-principles membership tests and witnesses, independent of the
// recurrences and closed forms in sequences.h.

// floor(sqrt(x)). Integer Newton iteration; throws DomainError for x < 0.
BigInt isqrt(const BigInt& x);

bool is_perfect_square(const BigInt& x);

// x >= 1 and 8x^2 + 1 is a perfect square. 1 is included.
bool is_balancing(const BigInt& x);
// x >= 0 and 8x^2 + 8x + 1 is a perfect square. 0 is included.
bool is_cobalancing(const BigInt& x);
// x >= 0 and 8x + 1 is a perfect square.
bool is_triangular(const BigInt& x);

// Balancing:   1 + ... + (n-1) = (n+1) + ... + (n+r)
// Cobalancing: 1 + ... + n     = (n+1) + ... + (n+r)
struct BalancerWitness {
  BigInt n;
  BigInt r;
  BigInt left_sum;
  BigInt right_sum;
};

// Throws NotAMemberError when x is not balancing; ExactnessError if the
// two sums disagree.
BalancerWitness balancer_of(const BigInt& x);
// Throws NotAMemberError when x is not cobalancing.
BalancerWitness cobalancer_of(const BigInt& x);

// All members of the family (Balancing or Cobalancing) in [0, limit], by a
// linear scan with a square test per candidate. The scan is split across
// `workers` threads; the result is ascending regardless.
std::vector<BigInt> search_family(SequenceKind family, const BigInt& limit,
                                  unsigned workers = 1);

}  // namespace balkit

#endif  // BALKIT_ORACLE_H_
