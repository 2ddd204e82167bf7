#ifndef BALKIT_QUADRING_H_
#define BALKIT_QUADRING_H_

#include <ostream>

#include "balkit/bigint.h"

namespace balkit {

// Exact element a + b*sqrt(2) of the ring Z[sqrt(2)].
//
// The representation is canonical: two values are equal iff both
// coefficients are equal. There is no division; callers that need to halve
// a coefficient do so explicitly after checking its parity.
class QuadInt {
 public:
  QuadInt() = default;
  QuadInt(BigInt rational, BigInt surd)
      : a_(std::move(rational)), b_(std::move(surd)) {}
  QuadInt(long rational, long surd) : a_(rational), b_(surd) {}

  // Rational part a.
  const BigInt& rational() const { return a_; }
  // Coefficient b of sqrt(2).
  const BigInt& surd() const { return b_; }

  friend bool operator==(const QuadInt& x, const QuadInt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  BigInt a_{0};
  BigInt b_{0};
};

QuadInt qmul(const QuadInt& x, const QuadInt& y);

// x^k by square-and-multiply; qpow(x, 0) is 1.
QuadInt qpow(const QuadInt& x, Index k);

QuadInt qconj(const QuadInt& x);

// a^2 - 2b^2. Multiplicative.
BigInt qnorm(const QuadInt& x);

inline QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  return qmul(x, y);
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x);

// Characteristic roots of the balancing recurrence, 3 +- 2*sqrt(2).
inline QuadInt lambda1() { return QuadInt(3, 2); }
inline QuadInt lambda2() { return QuadInt(3, -2); }
// Roots of x^2 - 2x - 1, 1 +- sqrt(2). alpha1^2 == lambda1.
inline QuadInt alpha1() { return QuadInt(1, 1); }
inline QuadInt alpha2() { return QuadInt(1, -1); }

}  // namespace balkit

#endif  // BALKIT_QUADRING_H_
