#include "canon/arith.hpp"

namespace canon::arith {

ValuationSplit valuation_split(const Int& x, long long base) {
  if (base < 2) throw std::invalid_argument("valuation_split: base must be >= 2");
  if (x < 1) throw std::invalid_argument("valuation_split: x must be >= 1");
  ValuationSplit r{0, x};
  const Int b(static_cast<long>(base));
  Int q, rem;
  for (;;) {
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.unit.get_mpz_t(), b.get_mpz_t());
    if (rem != 0) break;
    r.unit = q;
    ++r.val;
  }
  return r;
}

Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative input");
  if (n == 0) return 0;
  // Start above the root (2^ceil(bits/2)), then Newton steps decrease toward it.
  const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Int x = Int(1) << static_cast<unsigned long>((bits + 1) / 2);
  for (;;) {
    Int y = (x + n / x) / 2;
    if (y >= x) break;
    x = y;
  }
  // Exact correction: land on floor(sqrt(n)) regardless of iteration endpoint.
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

Int ceil_sqrt_pow(long long b, unsigned long i) {
  if (b < 2) throw std::invalid_argument("ceil_sqrt_pow: base must be >= 2");
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(b), i);
  Int s = isqrt(p);
  return (s * s == p) ? s : s + 1;
}

long long floor_log(const Int& x, long long base) {
  if (base < 2) throw std::invalid_argument("floor_log: base must be >= 2");
  if (x < 1) throw std::invalid_argument("floor_log: x must be >= 1");
  // mpz_sizeinbase is exact or one too big; correct with exact comparisons.
  // It only accepts bases up to 62; larger bases start at 0 and scan up.
  long long e = 0;
  if (base <= 62)
    e = static_cast<long long>(mpz_sizeinbase(x.get_mpz_t(), static_cast<int>(base))) - 1;
  Int p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  while (p > x) {
    p /= static_cast<long>(base);
    --e;
  }
  while (p * static_cast<long>(base) <= x) {
    p *= static_cast<long>(base);
    ++e;
  }
  return e;
}

bool is_small_prime(long long p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace canon::arith
