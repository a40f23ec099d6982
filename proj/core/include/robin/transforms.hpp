#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "robin/factor.hpp"
#include "robin/numbers.hpp"
#include "robin/primes.hpp"

namespace robin {

// Exact three-way relation; no floating arithmetic anywhere near it.
enum class Rel { Less, Equal, Greater };

const char* to_string(Rel r);

struct SwapOutcome {
  Factorization original;
  Factorization transformed;
  Rel size_relation;       // transformed vs original
  Rel abundancy_relation;  // s(transformed) vs s(original)
};

// Exchanges the multiplicities of two prime divisors p < q of n. With a the
// multiplicity of p and b of q: a < b shrinks n and raises s(n), a > b does
// the opposite, a = b leaves both unchanged.
SwapOutcome swap_multiplicities(const Factorization& n, const BigInt& p, const BigInt& q);

// Same prime set, multiplicities rearranged non-increasing against
// increasing primes. Never exceeds n, never lowers s.
Factorization sort_exponents(const Factorization& n);

// Primes replaced by the first omega(n) primes, multiplicities sorted
// non-increasing: the Hardy-Ramanujan compression of n.
Factorization hr_compress(const Factorization& n, const PrimeTable& table);

bool is_hardy_ramanujan(const Factorization& n, const PrimeTable& table);

// Least m < n with s(m) >= s(n); empty exactly when n is superabundant.
std::optional<std::uint64_t> least_dominator(std::uint64_t n, const PrimeTable& table);

struct SARecord {
  std::uint64_t value = 0;
  Ratio abundancy;
  bool is_hr = false;
};

struct SAOptions {
  // Brute force below the cutoff; Hardy-Ramanujan pattern search above.
  std::uint64_t brute_force_cutoff = 1u << 21;
  std::uint64_t chunk_size = 1u << 16;
  unsigned threads = 0;
};

// All superabundant numbers <= limit in increasing order.
std::vector<SARecord> generate_superabundant(std::uint64_t limit, const PrimeTable& table,
                                             const SAOptions& options = {});

// Running strict maxima of s over 1..limit, straight from a sigma sieve.
std::vector<SARecord> generate_superabundant_brute(std::uint64_t limit, const PrimeTable& table,
                                                   const SAOptions& options = {});

// Depth-first search over non-increasing exponent patterns on the first
// primes; complete because every superabundant number is Hardy-Ramanujan.
std::vector<SARecord> generate_superabundant_hr(std::uint64_t limit, const PrimeTable& table);

}  // namespace robin
