#pragma once

#include <cstdint>
#include <vector>

#include "robin/interval.hpp"
#include "robin/numbers.hpp"
#include "robin/numerics.hpp"
#include "robin/primes.hpp"

namespace robin {

// e^gamma log log n + 0.6483 / log log n  (dominates s(n) for n >= 3).
RealInterval robin_upper(std::uint64_t n, mpfr_prec_t precision);

// e^gamma log log n + 2.51 / log log n  (dominates f(n) for n >= 3).
RealInterval rosser_upper(std::uint64_t n, mpfr_prec_t precision);

// prod_{j<=i} (1 - 1/p_j^2), exact.
Ratio alpha_factor(std::size_t i, const PrimeTable& table);

struct BoundCheck {
  BigInt subject;
  Ratio lhs;
  RealInterval rhs;
  bool holds = false;       // lhs < rhs, rigorously separated
  RealInterval margin;      // rhs - lhs
  mpfr_prec_t precision_used = 0;
};

// Adaptive lhs < rhs check; PrecisionError if the cap cannot separate.
BoundCheck check_bound(BigInt subject, Ratio lhs, const IntervalFn& rhs,
                       mpfr_prec_t precision_cap);

// s(N_n) < alpha_i (e^gamma log log N_n + 2.51 / log log N_n); 2 <= i <= n.
BoundCheck primorial_sharp_check(std::size_t n_index, std::size_t i, const PrimeTable& table,
                                 mpfr_prec_t precision_cap);

// s(N_k) < e^gamma log log N_k (holds from k = 4 on).
BoundCheck primorial_robin_check(std::size_t k, const PrimeTable& table,
                                 mpfr_prec_t precision_cap);

// s(N_k) <= (3/4) f(N_k), exact rational comparison.
bool primorial_three_quarters(std::size_t k, const PrimeTable& table);

struct OddBounds {
  BoundCheck doubled;  // s(2n) < e^gamma log log (2n)            [n >= 17]
  BoundCheck sigma;    // s(n) < (2/3) e^gamma log log (2n)       [n >= 17]
  BoundCheck phi;      // f(n) < (1/2)(e^gamma log log (2n) + 2.51/log log (2n))  [n >= 3]
};

// All three sharpened bounds for one odd n. The sigma-type checks require
// n >= 17; below that only the phi bound is evaluated (the others are
// returned with holds = false and zero precision, outside their contract).
OddBounds odd_bounds_check(std::uint64_t n, const PrimeTable& table,
                           mpfr_prec_t precision_cap);

enum class GVariant {
  OddProof,      // (2/3)(e^g LL(2x) + 0.6483/LL(2x)) - e^g LL(x)
  SharperLemma,  // (6/7)(e^g LL(4x) + 0.6483/LL(4x)) - e^g LL(2x)
};

RealInterval g_value(GVariant variant, std::uint64_t x, mpfr_prec_t precision);

struct GCrossover {
  std::uint64_t last_positive = 0;
  std::uint64_t first_negative = 0;
  bool monotone_sampled = false;  // g(x1) > g(x2) on random sampled pairs x1 < x2
};

// Rigorous integer sweep of sign(g) over [2, sweep_to].
GCrossover g_crossover(GVariant variant, std::uint64_t sweep_to, mpfr_prec_t precision_cap);

struct SweepOptions {
  mpfr_prec_t precision_cap = 4096;
  std::uint64_t chunk_size = 1u << 16;
  unsigned threads = 0;
};

struct SweepReport {
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::uint64_t checked = 0;
  std::vector<std::uint64_t> failures;
};

// s(n) <= robin_upper(n) for every n in [from, to].
SweepReport sweep_robin_upper(std::uint64_t from, std::uint64_t to, const PrimeTable& table,
                              const SweepOptions& options = {});

// f(n) <= rosser_upper(n) for every n in [from, to].
SweepReport sweep_rosser_upper(std::uint64_t from, std::uint64_t to, const PrimeTable& table,
                               const SweepOptions& options = {});

struct OddSweepReport {
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::uint64_t checked = 0;
  std::vector<std::uint64_t> doubled_failures;
  std::vector<std::uint64_t> sigma_failures;
  std::vector<std::uint64_t> phi_failures;
};

// The three odd bounds over every odd n in [from, to]; sigma-type bounds
// are checked from n = 17 on, the phi bound from n = 3 on.
OddSweepReport sweep_odd_bounds(std::uint64_t from, std::uint64_t to, const PrimeTable& table,
                                const SweepOptions& options = {});

struct PrimorialSweepReport {
  std::size_t k_from = 0;
  std::size_t k_to = 0;
  std::vector<std::size_t> sharp_failures;           // alpha_i sharpening, k >= max(4, i)
  std::vector<std::size_t> robin_failures;           // s(N_k) < e^g log log N_k, k >= 4
  std::vector<std::size_t> three_quarter_failures;   // s(N_k) <= 3/4 f(N_k), k >= 2
};

PrimorialSweepReport sweep_primorials(std::size_t k_from, std::size_t k_to, std::size_t i,
                                      const PrimeTable& table, mpfr_prec_t precision_cap);

}  // namespace robin
