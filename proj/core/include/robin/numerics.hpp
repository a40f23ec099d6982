#pragma once

#include <functional>

#include "robin/interval.hpp"
#include "robin/numbers.hpp"

namespace robin {

enum class Ordering3 { Less, Greater, Undecided };

const char* to_string(Ordering3 o);

// Enclosure of Euler's constant; width <= 2^-(precision-4).
RealInterval gamma_enclosure(mpfr_prec_t precision);

// Enclosure of e^gamma.
RealInterval exp_gamma_enclosure(mpfr_prec_t precision);

// Enclosure of log log n. Defined for every integer n >= 2 (the value is
// negative for n < 3); n <= 1 is a domain error since log n <= 0.
RealInterval log_log_enclosure(const BigInt& n, mpfr_prec_t precision);
RealInterval log_log_enclosure(std::uint64_t n, mpfr_prec_t precision);

// Interval-argument form; requires the whole enclosure to lie above 1.
RealInterval log_log_enclosure(const RealInterval& x, mpfr_prec_t precision);

// Re-evaluates an expression at a requested working precision. The adaptive
// comparison engine drives these with a doubling precision ladder.
using IntervalFn = std::function<RealInterval(mpfr_prec_t)>;

struct Separation {
  Ordering3 order = Ordering3::Undecided;
  RealInterval margin;  // enclosure of rhs - lhs at the final precision
  mpfr_prec_t precision_used = 0;
};

// Escalates precision (start, 2*start, ...) up to max_precision until the
// enclosures of lhs and rhs separate. Less / Greater are only reported on
// strict separation; equal quantities saturate to Undecided.
Separation separate(const IntervalFn& lhs, const IntervalFn& rhs, mpfr_prec_t max_precision,
                    mpfr_prec_t start_precision = 64);

Ordering3 compare(const IntervalFn& lhs, const IntervalFn& rhs, mpfr_prec_t max_precision);
Ordering3 compare(const Ratio& lhs, const IntervalFn& rhs, mpfr_prec_t max_precision);

inline IntervalFn as_interval_fn(const Ratio& v) {
  return [v](mpfr_prec_t prec) { return RealInterval::from_ratio(v, prec); };
}

}  // namespace robin
