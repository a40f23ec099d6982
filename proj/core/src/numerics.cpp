#include "robin/numerics.hpp"

#include "robin/errors.hpp"

namespace robin {

const char* to_string(Ordering3 o) {
  switch (o) {
    case Ordering3::Less: return "less";
    case Ordering3::Greater: return "greater";
    case Ordering3::Undecided: return "undecided";
  }
  return "undecided";
}

RealInterval gamma_enclosure(mpfr_prec_t precision) {
  if (precision < 32) throw DomainError("gamma_enclosure requires precision >= 32");
  RealInterval r(precision);
  mpfr_const_euler(r.lower_writable(), MPFR_RNDD);
  mpfr_const_euler(r.upper_writable(), MPFR_RNDU);
  return r;
}

RealInterval exp_gamma_enclosure(mpfr_prec_t precision) {
  return exp(gamma_enclosure(precision));
}

RealInterval log_log_enclosure(const BigInt& n, mpfr_prec_t precision) {
  if (n <= 1) throw DomainError("log log n requires n >= 2 (log n must be positive)");
  return log(log(RealInterval::from_integer(n, precision)));
}

RealInterval log_log_enclosure(std::uint64_t n, mpfr_prec_t precision) {
  if (n <= 1) throw DomainError("log log n requires n >= 2 (log n must be positive)");
  return log(log(RealInterval::from_uint(n, precision)));
}

RealInterval log_log_enclosure(const RealInterval& x, mpfr_prec_t precision) {
  if (mpfr_cmp_ui(x.lower_raw(), 1) <= 0) {
    throw DomainError("log log of an enclosure requires its lower bound to exceed 1");
  }
  return log(log(x.at_precision(precision)));
}

Separation separate(const IntervalFn& lhs, const IntervalFn& rhs, mpfr_prec_t max_precision,
                    mpfr_prec_t start_precision) {
  Separation result;
  mpfr_prec_t prec = start_precision;
  for (;;) {
    RealInterval margin = rhs(prec) - lhs(prec);
    result.precision_used = prec;
    if (margin.is_positive()) {
      result.order = Ordering3::Less;
      result.margin = std::move(margin);
      return result;
    }
    if (margin.is_negative()) {
      result.order = Ordering3::Greater;
      result.margin = std::move(margin);
      return result;
    }
    if (prec >= max_precision) {
      result.order = Ordering3::Undecided;
      result.margin = std::move(margin);
      return result;
    }
    prec = std::min(prec * 2, max_precision);
  }
}

Ordering3 compare(const IntervalFn& lhs, const IntervalFn& rhs, mpfr_prec_t max_precision) {
  return separate(lhs, rhs, max_precision).order;
}

Ordering3 compare(const Ratio& lhs, const IntervalFn& rhs, mpfr_prec_t max_precision) {
  return separate(as_interval_fn(lhs), rhs, max_precision).order;
}

}  // namespace robin
