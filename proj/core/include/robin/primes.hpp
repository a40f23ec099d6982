#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace robin {

// All primes up to a fixed limit, immutable after construction.
// Indexing is 1-based to match the usual p_1 = 2, p_2 = 3, ... convention.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit);

  // Smallest table guaranteed to contain at least `count` primes.
  static PrimeTable with_count(std::size_t count);

  std::uint64_t limit() const { return limit_; }
  std::size_t count() const { return primes_.size(); }

  // p(1) = 2; throws CapacityError past the table.
  std::uint64_t p(std::size_t i) const;

  std::span<const std::uint64_t> primes() const { return primes_; }
  std::span<const std::uint64_t> primes_upto(std::uint64_t x) const;

  bool contains_prime(std::uint64_t n) const;

  // Throws CapacityError unless the table holds at least `count` primes.
  void require_count(std::size_t count) const;
  // Throws CapacityError unless limit() >= x.
  void require_limit(std::uint64_t x) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> primes_;
};

}  // namespace robin
