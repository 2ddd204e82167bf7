#ifndef BALKIT_BIGINT_H_
#define BALKIT_BIGINT_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace balkit {

// Arbitrary-precision signed integer.
using BigInt = mpz_class;

// Sequence index. Every sequence in this library is indexed by naturals.
using Index = std::uint64_t;

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

// Least nonnegative residue of x modulo k (k > 0).
inline BigInt residue(const BigInt& x, unsigned long k) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

}  // namespace balkit

#endif  // BALKIT_BIGINT_H_
