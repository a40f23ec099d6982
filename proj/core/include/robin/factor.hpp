#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "robin/numbers.hpp"
#include "robin/primes.hpp"

namespace robin {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 1;

  bool operator==(const PrimePower&) const = default;
};

// Canonical prime-power decomposition: primes strictly increasing, every
// exponent >= 1. The empty list is n = 1.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const { return factors_; }
  std::size_t omega() const { return factors_.size(); }
  BigInt value() const;

  // "2^2 * 3^1" style rendering; "1" for the empty factorization.
  std::string to_string() const;

  bool operator==(const Factorization&) const = default;

 private:
  std::vector<PrimePower> factors_;
};

// Trial division against the table; Pollard-style splitting with a
// probable-prime certificate past the table's reach. Rejects n = 0.
Factorization factorize(const BigInt& n, const PrimeTable& table);
Factorization factorize(std::uint64_t n, const PrimeTable& table);

BigInt divisor_sigma(const Factorization& n);
BigInt euler_phi(const Factorization& n);

// sigma(n)/n in lowest terms.
Ratio abundancy(const Factorization& n);

// n/phi(n); depends only on the set of primes.
Ratio phi_ratio(const Factorization& n);

Factorization radical(const Factorization& n);

// Product of the first k primes; k = 0 gives 1.
BigInt primorial(std::size_t k, const PrimeTable& table);

// sigma(p^a)/p^a = (p^{a+1} - 1) / (p^a (p - 1)).
Ratio prime_power_abundancy(const BigInt& p, unsigned exponent);

}  // namespace robin
