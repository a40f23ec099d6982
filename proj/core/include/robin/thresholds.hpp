#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "robin/factor.hpp"
#include "robin/interval.hpp"
#include "robin/numbers.hpp"
#include "robin/primes.hpp"

namespace robin {

// log N_k as an exact sum of per-prime log enclosures.
RealInterval log_primorial(std::size_t k, const PrimeTable& table, mpfr_prec_t precision);

// f(N_k) = prod p_i / (p_i - 1) over the first k primes, exact.
Ratio primorial_phi_ratio(std::size_t k, const PrimeTable& table);

// M(k) = e^{e^-gamma f(N_k)} - log N_k. An exponent a_i >= 1 + M(k)/log q_i
// forces Robin's inequality for any n with omega(n) = k.
RealInterval domination_gap(std::size_t k, const PrimeTable& table, mpfr_prec_t precision);

// M_k(q) = 1 + M(k)/log q.
RealInterval domination_threshold(std::size_t k, std::uint64_t q, const PrimeTable& table,
                                  mpfr_prec_t precision);

// Closed-form epsilon certificate for M(k) <= log N_{floor(k/d)}, d in
// {2, 3, 14}; negative values certify the bound in the Massias regime
// (k >= 13).
RealInterval division_epsilon(std::uint64_t k, unsigned divisor, mpfr_prec_t precision);

struct JkOptions {
  mpfr_prec_t precision_cap = 4096;
  mpfr_prec_t base_precision = 128;
};

struct JkReport {
  unsigned divisor = 0;
  std::uint64_t k_from = 0;
  std::uint64_t k_to = 0;
  bool all_hold = false;
  std::vector<std::uint64_t> failures;  // k where the bound is rigorously false
};

// Direct check M(k) <= log N_{floor(k/d)} for every k in [k_from, k_to]
// (d = 2 or 3, within table capacity); for d = 14 the closed-form epsilon
// is checked instead.
JkReport verify_jk(unsigned divisor, std::uint64_t k_from, std::uint64_t k_to,
                   const PrimeTable& table, const JkOptions& options = {});

// k log k < log N_k < k (log k + log log k), with log N_k as an exact
// log-sum enclosure. Valid from k = 13 on.
bool massias_check(std::size_t k, const PrimeTable& table, mpfr_prec_t precision_cap);

// massias_check over [k_from, k_to] with an incremental log N_k prefix;
// returns the k where either bound fails.
std::vector<std::uint64_t> massias_sweep(std::size_t k_from, std::size_t k_to,
                                         const PrimeTable& table, mpfr_prec_t precision_cap,
                                         mpfr_prec_t base_precision = 128);

struct CounterexampleBounds {
  RealInterval log_log_c_lower;
  RealInterval log_p_lower;         // lower bound on log p_omega(c)
  std::uint64_t omega_lower = 0;    // rigorous, from an explicit pi(x) lower bound
  std::uint64_t omega_reference = 0;  // the published 969672728, reported side by side
  RealInterval ratio_window_lower;  // e^{-1/log p} at the derived bound; upper is exactly 1
};

// Properties a least counterexample c must satisfy, derived from a lower
// bound on log log c. Uses x + 1/x >= L  =>  x > (L + sqrt(L^2 - 4))/2 for
// x = log p_omega(c), then an explicit prime-counting lower bound.
CounterexampleBounds counterexample_bounds(const RealInterval& log_log_c_lower,
                                           mpfr_prec_t precision);

// 10 log 10 + log log 10: the log log lower bound from c > 10^(10^10).
RealInterval briggs_log_log_lower(mpfr_prec_t precision);

struct RatioWindow {
  RealInterval lower;  // e^{-1/log p}
  Ratio upper;         // exactly 1
};

// Admissible window for p/log c at a counterexample whose largest prime is
// p; equivalently log c in (p, p e^{1/log p}).
RatioWindow ratio_window(const BigInt& p, mpfr_prec_t precision);

struct ExponentCaps {
  BigInt power_cap;          // 2^(c1 + 2), exact
  RealInterval prime_cap;    // p_i e^{M(omega)}
};

// Caps on p_i^{c_i} at a counterexample with leading exponent c1 and
// omega prime divisors; 1 < i <= omega.
ExponentCaps exponent_caps(unsigned c1, std::size_t omega, std::size_t i,
                           const PrimeTable& table, mpfr_prec_t precision);

struct ThresholdRow {
  std::size_t k = 0;
  RealInterval gap;            // M(k)
  RealInterval log_primorial;  // log N_k
  std::vector<std::pair<std::uint64_t, RealInterval>> thresholds;  // q -> M_k(q)
};

std::vector<ThresholdRow> threshold_table(std::size_t k_from, std::size_t k_to,
                                          const std::vector<std::uint64_t>& qs,
                                          const PrimeTable& table, mpfr_prec_t precision);

}  // namespace robin
