#include "balkit/quadring.h"

namespace balkit {

QuadInt qmul(const QuadInt& x, const QuadInt& y) {
  const BigInt& a1 = x.rational();
  const BigInt& b1 = x.surd();
  const BigInt& a2 = y.rational();
  const BigInt& b2 = y.surd();
  BigInt a = a1 * a2 + 2 * (b1 * b2);
  BigInt b = a1 * b2 + a2 * b1;
  return QuadInt(std::move(a), std::move(b));
}

QuadInt qpow(const QuadInt& x, Index k) {
  QuadInt result(1, 0);
  QuadInt base = x;
  while (k != 0) {
    if (k & 1) result = qmul(result, base);
    k >>= 1;
    if (k != 0) base = qmul(base, base);
  }
  return result;
}

QuadInt qconj(const QuadInt& x) { return QuadInt(x.rational(), -x.surd()); }

BigInt qnorm(const QuadInt& x) {
  return x.rational() * x.rational() - 2 * (x.surd() * x.surd());
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x) {
  return os << '(' << x.rational() << ", " << x.surd() << ')';
}

}  // namespace balkit
