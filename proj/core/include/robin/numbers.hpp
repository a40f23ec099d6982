#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>

namespace robin {

using BigInt = mpz_class;

// Always kept canonical: lowest terms, positive denominator.
using Ratio = mpq_class;

inline Ratio make_ratio(BigInt num, BigInt den) {
  Ratio r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

inline BigInt pow_ui(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while (r + 1 <= n / (r + 1)) ++r;
  return r;
}

}  // namespace robin
