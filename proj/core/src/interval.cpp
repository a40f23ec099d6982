#include "robin/interval.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "robin/errors.hpp"

namespace robin {

RealInterval::RealInterval(mpfr_prec_t precision) : precision_(precision) {
  mpfr_init2(lower_, precision_);
  mpfr_init2(upper_, precision_);
  mpfr_set_zero(lower_, 1);
  mpfr_set_zero(upper_, 1);
}

RealInterval::RealInterval(const RealInterval& other) : precision_(other.precision_) {
  mpfr_init2(lower_, precision_);
  mpfr_init2(upper_, precision_);
  mpfr_set(lower_, other.lower_, MPFR_RNDD);
  mpfr_set(upper_, other.upper_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& other) noexcept : precision_(other.precision_) {
  mpfr_init2(lower_, 2);
  mpfr_init2(upper_, 2);
  mpfr_swap(lower_, other.lower_);
  mpfr_swap(upper_, other.upper_);
}

RealInterval& RealInterval::operator=(const RealInterval& other) {
  if (this != &other) {
    mpfr_set_prec(lower_, other.precision_);
    mpfr_set_prec(upper_, other.precision_);
    precision_ = other.precision_;
    mpfr_set(lower_, other.lower_, MPFR_RNDD);
    mpfr_set(upper_, other.upper_, MPFR_RNDU);
  }
  return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& other) noexcept {
  mpfr_swap(lower_, other.lower_);
  mpfr_swap(upper_, other.upper_);
  std::swap(precision_, other.precision_);
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lower_);
  mpfr_clear(upper_);
}

RealInterval RealInterval::from_uint(std::uint64_t v, mpfr_prec_t precision) {
  RealInterval r(precision);
  mpfr_set_ui(r.lower_, v, MPFR_RNDD);
  mpfr_set_ui(r.upper_, v, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_integer(const BigInt& v, mpfr_prec_t precision) {
  RealInterval r(precision);
  mpfr_set_z(r.lower_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.upper_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::from_ratio(const Ratio& v, mpfr_prec_t precision) {
  RealInterval r(precision);
  mpfr_set_q(r.lower_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.upper_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::at_precision(mpfr_prec_t precision) const {
  RealInterval r(precision);
  mpfr_set(r.lower_, lower_, MPFR_RNDD);
  mpfr_set(r.upper_, upper_, MPFR_RNDU);
  return r;
}

double RealInterval::lower_double() const { return mpfr_get_d(lower_, MPFR_RNDD); }
double RealInterval::upper_double() const { return mpfr_get_d(upper_, MPFR_RNDU); }

std::string RealInterval::lower_string(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*RDe", digits, lower_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string RealInterval::upper_string(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*RUe", digits, upper_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

bool RealInterval::contains(const Ratio& v) const {
  return mpfr_cmp_q(lower_, v.get_mpq_t()) <= 0 && mpfr_cmp_q(upper_, v.get_mpq_t()) >= 0;
}

bool RealInterval::contains_zero() const {
  return mpfr_sgn(lower_) <= 0 && mpfr_sgn(upper_) >= 0;
}

bool RealInterval::is_positive() const { return mpfr_sgn(lower_) > 0; }
bool RealInterval::is_negative() const { return mpfr_sgn(upper_) < 0; }
bool RealInterval::is_nonpositive() const { return mpfr_sgn(upper_) <= 0; }

double RealInterval::width_upper() const {
  mpfr_t w;
  mpfr_init2(w, precision_);
  mpfr_sub(w, upper_, lower_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

bool RealInterval::strictly_below(const RealInterval& other) const {
  return mpfr_cmp(upper_, other.lower_) < 0;
}

namespace {

mpfr_prec_t joint_prec(const RealInterval& a, const RealInterval& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  RealInterval r(joint_prec(a, b));
  mpfr_add(r.lower_, a.lower_, b.lower_, MPFR_RNDD);
  mpfr_add(r.upper_, a.upper_, b.upper_, MPFR_RNDU);
  return r;
}

RealInterval& RealInterval::operator+=(const RealInterval& b) {
  mpfr_add(lower_, lower_, b.lower_, MPFR_RNDD);
  mpfr_add(upper_, upper_, b.upper_, MPFR_RNDU);
  return *this;
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  RealInterval r(joint_prec(a, b));
  mpfr_sub(r.lower_, a.lower_, b.upper_, MPFR_RNDD);
  mpfr_sub(r.upper_, a.upper_, b.lower_, MPFR_RNDU);
  return r;
}

RealInterval operator-(const RealInterval& a) {
  RealInterval r(a.precision());
  mpfr_neg(r.lower_, a.upper_, MPFR_RNDD);
  mpfr_neg(r.upper_, a.lower_, MPFR_RNDU);
  return r;
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  const mpfr_prec_t prec = joint_prec(a, b);
  RealInterval r(prec);
  // Lower = min of the four endpoint products rounded down, upper = max
  // rounded up. Sound for any sign combination.
  mpfr_t t;
  mpfr_init2(t, prec);
  const std::array<std::pair<mpfr_srcptr, mpfr_srcptr>, 4> pairs = {{
      {a.lower_, b.lower_},
      {a.lower_, b.upper_},
      {a.upper_, b.lower_},
      {a.upper_, b.upper_},
  }};
  bool first = true;
  for (const auto& [x, y] : pairs) {
    mpfr_mul(t, x, y, MPFR_RNDD);
    if (first || mpfr_cmp(t, r.lower_) < 0) mpfr_set(r.lower_, t, MPFR_RNDD);
    mpfr_mul(t, x, y, MPFR_RNDU);
    if (first || mpfr_cmp(t, r.upper_) > 0) mpfr_set(r.upper_, t, MPFR_RNDU);
    first = false;
  }
  mpfr_clear(t);
  return r;
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
  if (b.contains_zero()) throw DomainError("interval division by enclosure containing zero");
  const mpfr_prec_t prec = joint_prec(a, b);
  RealInterval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  const std::array<std::pair<mpfr_srcptr, mpfr_srcptr>, 4> pairs = {{
      {a.lower_, b.lower_},
      {a.lower_, b.upper_},
      {a.upper_, b.lower_},
      {a.upper_, b.upper_},
  }};
  bool first = true;
  for (const auto& [x, y] : pairs) {
    mpfr_div(t, x, y, MPFR_RNDD);
    if (first || mpfr_cmp(t, r.lower_) < 0) mpfr_set(r.lower_, t, MPFR_RNDD);
    mpfr_div(t, x, y, MPFR_RNDU);
    if (first || mpfr_cmp(t, r.upper_) > 0) mpfr_set(r.upper_, t, MPFR_RNDU);
    first = false;
  }
  mpfr_clear(t);
  return r;
}

RealInterval exp(const RealInterval& x) {
  RealInterval r(x.precision());
  mpfr_exp(r.lower_, x.lower_, MPFR_RNDD);
  mpfr_exp(r.upper_, x.upper_, MPFR_RNDU);
  return r;
}

RealInterval log(const RealInterval& x) {
  if (mpfr_sgn(x.lower_) <= 0) throw DomainError("interval log requires a positive enclosure");
  RealInterval r(x.precision());
  mpfr_log(r.lower_, x.lower_, MPFR_RNDD);
  mpfr_log(r.upper_, x.upper_, MPFR_RNDU);
  return r;
}

RealInterval sqrt(const RealInterval& x) {
  if (mpfr_sgn(x.lower_) < 0) throw DomainError("interval sqrt requires a nonnegative enclosure");
  RealInterval r(x.precision());
  mpfr_sqrt(r.lower_, x.lower_, MPFR_RNDD);
  mpfr_sqrt(r.upper_, x.upper_, MPFR_RNDU);
  return r;
}

}  // namespace robin
