#include "balkit/oracle.h"

#include <algorithm>
#include <string>
#include <thread>

#include "balkit/errors.h"

namespace balkit {

BigInt isqrt(const BigInt& x) {
  if (sgn(x) < 0) throw DomainError("isqrt of a negative number");
  if (sgn(x) == 0) return 0;
  // 2^ceil(bits/2) >= sqrt(x), so Newton descends monotonically from above.
  std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  BigInt r;
  mpz_setbit(r.get_mpz_t(), (bits + 1) / 2);
  BigInt next;
  for (;;) {
    next = (r + x / r) / 2;
    if (next >= r) break;
    r.swap(next);
  }
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

bool is_perfect_square(const BigInt& x) {
  if (sgn(x) < 0) return false;
  BigInt r = isqrt(x);
  return r * r == x;
}

bool is_balancing(const BigInt& x) {
  return x >= 1 && is_perfect_square(8 * x * x + 1);
}

bool is_cobalancing(const BigInt& x) {
  return sgn(x) >= 0 && is_perfect_square(8 * x * x + 8 * x + 1);
}

bool is_triangular(const BigInt& x) {
  return sgn(x) >= 0 && is_perfect_square(8 * x + 1);
}

namespace {

// r(r+1)/2 + r*x, the sum (x+1) + ... + (x+r).
BigInt right_sum(const BigInt& x, const BigInt& r) {
  return r * x + r * (r + 1) / 2;
}

BalancerWitness witness(const BigInt& x, const BigInt& disc, BigInt left) {
  BigInt twice_r = isqrt(disc) - (2 * x + 1);
  if (mpz_odd_p(twice_r.get_mpz_t()) || sgn(twice_r) < 0) {
    throw ExactnessError("balancer numerator is odd or negative for " + x.get_str());
  }
  BigInt r = twice_r / 2;
  BalancerWitness w{x, r, std::move(left), right_sum(x, r)};
  if (w.left_sum != w.right_sum) {
    throw ExactnessError("witness sums disagree for " + x.get_str());
  }
  return w;
}

}  // namespace

BalancerWitness balancer_of(const BigInt& x) {
  if (!is_balancing(x)) throw NotAMemberError(x.get_str() + " is not a balancing number");
  return witness(x, 8 * x * x + 1, x * (x - 1) / 2);
}

BalancerWitness cobalancer_of(const BigInt& x) {
  if (!is_cobalancing(x)) throw NotAMemberError(x.get_str() + " is not a cobalancing number");
  return witness(x, 8 * x * x + 8 * x + 1, x * (x + 1) / 2);
}

std::vector<BigInt> search_family(SequenceKind family, const BigInt& limit, unsigned workers) {
  if (family != SequenceKind::kBalancing && family != SequenceKind::kCobalancing) {
    throw DomainError("search is defined for the balancing and cobalancing families only");
  }
  if (sgn(limit) < 0) throw DomainError("search limit must be nonnegative");
  if (!limit.fits_ulong_p()) throw DomainError("search limit too large for a linear scan");
  const unsigned long last = limit.get_ui();
  auto test = family == SequenceKind::kBalancing ? is_balancing : is_cobalancing;

  workers = std::max(1u, workers);
  const unsigned long span = last / workers + 1;
  std::vector<std::vector<BigInt>> found(workers);
  auto scan = [&](unsigned w) {
    unsigned long lo = span * w;
    if (lo > last) return;
    unsigned long hi = std::min(last, lo + span - 1);
    BigInt x;
    for (unsigned long v = lo;; ++v) {
      x = v;
      if (test(x)) found[w].push_back(x);
      if (v == hi) break;
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
  }
  std::vector<BigInt> members;
  for (auto& part : found) {
    for (auto& v : part) members.push_back(std::move(v));
  }
  return members;
}

}  // namespace balkit
