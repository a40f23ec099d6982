#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "robin/primes.hpp"

namespace robin {

// Multiplicative data for every n in [lo, hi], computed in one segmented
// pass. sigma/rad products are carried in uint64, which restricts hi to
// about 1e12; the builder enforces that the table covers sqrt(hi).
struct RangeSieve {
  static constexpr std::uint8_t kSquareFree = 1;
  static constexpr std::uint8_t kSquareFull = 2;

  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<std::uint64_t> sigma;
  std::vector<std::uint64_t> rad;      // product of distinct prime divisors
  std::vector<std::uint64_t> phi_rad;  // product of (p - 1) over distinct prime divisors
  std::vector<std::uint8_t> omega;
  std::vector<std::uint8_t> flags;

  static RangeSieve build(std::uint64_t lo, std::uint64_t hi, const PrimeTable& table);

  std::size_t index(std::uint64_t n) const { return static_cast<std::size_t>(n - lo); }
  std::uint64_t sigma_of(std::uint64_t n) const { return sigma[index(n)]; }
  std::uint64_t rad_of(std::uint64_t n) const { return rad[index(n)]; }
  std::uint64_t phi_rad_of(std::uint64_t n) const { return phi_rad[index(n)]; }
  unsigned omega_of(std::uint64_t n) const { return omega[index(n)]; }
  bool square_free(std::uint64_t n) const { return flags[index(n)] & kSquareFree; }
  bool square_full(std::uint64_t n) const { return flags[index(n)] & kSquareFull; }
};

// Smallest-prime-factor sieve over [2, limit] for dense factor queries.
class SpfSieve {
 public:
  explicit SpfSieve(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }

  // (prime, exponent) pairs in increasing prime order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factor(std::uint32_t n) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

}  // namespace robin
