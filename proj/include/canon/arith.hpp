#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace canon {

// Arbitrary-precision integer / rational. All core arithmetic is exact;
// floating point is never used.
using Int = mpz_class;
using Rat = mpq_class;

// gmpxx offers no long long overloads; this platform's long is 64-bit, so
// long long parameters bridge into GMP through a plain long.
static_assert(sizeof(long) == 8, "64-bit long required");
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

// Thrown when an enumeration would exceed a configured budget. Distinct from
// std::invalid_argument so callers can map it to a different exit status.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace arith {

struct ValuationSplit {
  long long val;  // exponent of `base` in x
  Int unit;       // x / base^val, not divisible by base
};

// Splits x >= 1 as base^val * unit with base >= 2 not dividing unit.
ValuationSplit valuation_split(const Int& x, long long base);

// Floor of the square root, Newton iteration with exact correction.
Int isqrt(const Int& n);

// Least n with n*n >= b^i (i.e. ceil(sqrt(b^i))), b >= 2, i >= 0.
Int ceil_sqrt_pow(long long b, unsigned long i);

// Largest e >= 0 with base^e <= x; requires x >= 1, base >= 2.
long long floor_log(const Int& x, long long base);

// Trial-division primality for small parameters (coloring moduli).
bool is_small_prime(long long p);

}  // namespace arith
}  // namespace canon
