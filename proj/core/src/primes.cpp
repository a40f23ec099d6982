#include "robin/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "robin/errors.hpp"
#include "robin/numbers.hpp"

namespace robin {

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) return;
  // Odd-only sieve: bit i <=> 2i + 3 is composite.
  const std::uint64_t half = (limit - 1) / 2;  // count of odd candidates 3..limit
  std::vector<std::uint64_t> composite((half + 63) / 64, 0);
  const std::uint64_t root = isqrt_u64(limit);
  for (std::uint64_t n = 3; n <= root; n += 2) {
    const std::uint64_t i = (n - 3) / 2;
    if (composite[i >> 6] & (1ULL << (i & 63))) continue;
    for (std::uint64_t m = n * n; m <= limit; m += 2 * n) {
      const std::uint64_t j = (m - 3) / 2;
      composite[j >> 6] |= 1ULL << (j & 63);
    }
  }
  primes_.reserve(
      limit > 16 ? static_cast<std::size_t>(static_cast<double>(limit) /
                                            (std::log(static_cast<double>(limit)) - 1.1))
                 : 8);
  primes_.push_back(2);
  for (std::uint64_t i = 0; i < half; ++i) {
    if (!(composite[i >> 6] & (1ULL << (i & 63)))) primes_.push_back(2 * i + 3);
  }
}

PrimeTable PrimeTable::with_count(std::size_t count) {
  if (count < 7) return PrimeTable(20);
  // Rosser-type bound: p_k < k (ln k + ln ln k) for k >= 6.
  const double k = static_cast<double>(count);
  const double bound = k * (std::log(k) + std::log(std::log(k)));
  PrimeTable table(static_cast<std::uint64_t>(bound) + 2);
  table.require_count(count);
  return table;
}

std::uint64_t PrimeTable::p(std::size_t i) const {
  if (i == 0 || i > primes_.size()) {
    throw CapacityError("PrimeTable holds " + std::to_string(primes_.size()) +
                        " primes, p_" + std::to_string(i) + " requested");
  }
  return primes_[i - 1];
}

std::span<const std::uint64_t> PrimeTable::primes_upto(std::uint64_t x) const {
  require_limit(x);
  const auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
  return {primes_.data(), static_cast<std::size_t>(it - primes_.begin())};
}

bool PrimeTable::contains_prime(std::uint64_t n) const {
  require_limit(n);
  return std::binary_search(primes_.begin(), primes_.end(), n);
}

void PrimeTable::require_count(std::size_t count) const {
  if (primes_.size() < count) {
    throw CapacityError("PrimeTable limit " + std::to_string(limit_) + " holds only " +
                        std::to_string(primes_.size()) + " primes, need " +
                        std::to_string(count));
  }
}

void PrimeTable::require_limit(std::uint64_t x) const {
  if (limit_ < x) {
    throw CapacityError("PrimeTable limit " + std::to_string(limit_) +
                        " below required " + std::to_string(x));
  }
}

}  // namespace robin
