#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robin/factor.hpp"
#include "robin/interval.hpp"
#include "robin/numbers.hpp"
#include "robin/primes.hpp"

namespace robin {

enum class RobinStatus { Satisfied, Violated, Undecided };

const char* to_string(RobinStatus s);

// Rigorous three-valued outcome of s(n) < e^gamma log log n.
//   Satisfied  => margin.lower > 0
//   Violated   => margin.upper <= 0
//   Undecided  => margin straddles 0 at the precision cap
struct RobinVerdict {
  BigInt n;
  RobinStatus status = RobinStatus::Undecided;
  RealInterval margin;  // e^gamma log log n - s(n)
  mpfr_prec_t precision_used = 0;
};

struct CheckOptions {
  mpfr_prec_t precision_cap = 4096;
};

RobinVerdict check(const BigInt& n, const PrimeTable& table, const CheckOptions& options = {});
RobinVerdict check(std::uint64_t n, const PrimeTable& table, const CheckOptions& options = {});
RobinVerdict check(const Factorization& n, const CheckOptions& options = {});

// Core verdict path when sigma(n)/n is already known exactly.
RobinVerdict check_abundancy(BigInt n, const Ratio& s, const CheckOptions& options = {});

enum class Category { Odd, SquareFree, SquareFull, Primorial, OmegaLe4 };

const char* to_string(Category c);
std::optional<Category> category_from_string(std::string_view name);

std::vector<Category> classify(const Factorization& n, const PrimeTable& table);

// The classical reference exception lists for each category.
std::vector<std::uint64_t> expected_exceptions(Category c);
// Exceptions with omega(n) = k exactly (empty for k >= 5).
std::vector<std::uint64_t> expected_exceptions_omega(unsigned k);
// All 26 exceptions in [3, 5040].
std::vector<std::uint64_t> classical_exceptions();

struct ScanOptions {
  std::optional<Category> filter;
  mpfr_prec_t precision_cap = 4096;
  std::uint64_t chunk_size = 1u << 16;
  unsigned threads = 0;
};

// Every n in [from, to] (matching the filter) whose verdict is Violated,
// in increasing order. An Undecided verdict anywhere aborts with
// PrecisionError: a scan claims completeness.
std::vector<std::uint64_t> scan(std::uint64_t from, std::uint64_t to, const PrimeTable& table,
                                const ScanOptions& options = {});

struct CategoryReport {
  std::string category;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::vector<std::uint64_t> found;
  std::vector<std::uint64_t> expected;  // reference list restricted to [from, to]
  bool match = false;
};

CategoryReport scan_category(Category c, std::uint64_t from, std::uint64_t to,
                             const PrimeTable& table, const ScanOptions& options = {});

struct OmegaCertificate {
  bool sufficient = false;  // f(N_k) <= e^gamma log log N_k, so every n with
                            // omega(n) = k satisfies Robin's inequality
  RealInterval margin;      // e^gamma log log N_k - f(N_k)
  mpfr_prec_t precision_used = 0;
};

OmegaCertificate sufficient_by_omega(std::size_t omega, const PrimeTable& table,
                                     mpfr_prec_t precision_cap = 4096);

// Index (0-based, into n.factors()) of a prime whose multiplicity reaches
// the domination threshold M_omega(q_i); such a witness forces Robin's
// inequality regardless of the other multiplicities.
std::optional<std::size_t> sufficient_by_domination(const Factorization& n,
                                                    const PrimeTable& table,
                                                    mpfr_prec_t precision_cap = 4096);

// True when one of the omega / repeated-exponent fraction clauses holds:
// (omega >= 18, >= 1/2), (omega >= 39, >= 1/3), (omega >= 969672728, >= 1/14).
bool sufficient_by_fraction(const Factorization& n);

}  // namespace robin
