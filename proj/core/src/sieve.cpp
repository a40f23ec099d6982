#include "robin/sieve.hpp"

#include <string>

#include "robin/errors.hpp"
#include "robin/numbers.hpp"

namespace robin {

RangeSieve RangeSieve::build(std::uint64_t lo, std::uint64_t hi, const PrimeTable& table) {
  if (lo < 1 || lo > hi) throw DomainError("RangeSieve requires 1 <= lo <= hi");
  if (hi > 2'000'000'000'000ULL) {
    throw CapacityError("RangeSieve supports hi <= 2e12 (sigma carried in uint64)");
  }
  const std::uint64_t root = isqrt_u64(hi);
  table.require_limit(root);

  RangeSieve s;
  s.lo = lo;
  s.hi = hi;
  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  s.sigma.assign(count, 1);
  s.rad.assign(count, 1);
  s.phi_rad.assign(count, 1);
  s.omega.assign(count, 0);
  s.flags.assign(count, kSquareFree | kSquareFull);
  std::vector<std::uint64_t> rem(count);
  for (std::size_t i = 0; i < count; ++i) rem[i] = lo + i;

  for (std::uint64_t p : table.primes_upto(root)) {
    for (std::uint64_t m = ((lo + p - 1) / p) * p; m <= hi; m += p) {
      const std::size_t i = static_cast<std::size_t>(m - lo);
      std::uint64_t pe = 1, sum = 1;
      unsigned e = 0;
      while (rem[i] % p == 0) {
        rem[i] /= p;
        pe *= p;
        sum += pe;
        ++e;
      }
      s.sigma[i] *= sum;
      s.rad[i] *= p;
      s.phi_rad[i] *= p - 1;
      s.omega[i] += 1;
      if (e >= 2) {
        s.flags[i] &= ~kSquareFree;
      } else {
        s.flags[i] &= ~kSquareFull;
      }
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (rem[i] > 1) {
      const std::uint64_t q = rem[i];  // prime > sqrt(hi), exponent 1
      s.sigma[i] *= q + 1;
      s.rad[i] *= q;
      s.phi_rad[i] *= q - 1;
      s.omega[i] += 1;
      s.flags[i] &= ~kSquareFull;
    }
  }
  return s;
}

SpfSieve::SpfSieve(std::uint32_t limit) : limit_(limit), spf_(static_cast<std::size_t>(limit) + 1, 0) {
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      for (std::uint64_t j = i; j <= limit; j += i) {
        if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
      }
    }
  }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> SpfSieve::factor(std::uint32_t n) const {
  if (n == 0 || n > limit_) {
    throw CapacityError("SpfSieve::factor out of range: " + std::to_string(n));
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    std::uint32_t e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    out.emplace_back(p, e);
  }
  return out;
}

}  // namespace robin
