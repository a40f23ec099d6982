#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>

#include "robin/numbers.hpp"

namespace robin {

// Outward-rounded enclosure of a real quantity: the represented value lies
// in [lower, upper]. Both endpoints carry the same working precision; every
// operation rounds the lower endpoint toward -inf and the upper toward +inf,
// so enclosure soundness is preserved through arbitrary compositions.
class RealInterval {
 public:
  explicit RealInterval(mpfr_prec_t precision = 64);  // [0, 0]
  RealInterval(const RealInterval& other);
  RealInterval(RealInterval&& other) noexcept;
  RealInterval& operator=(const RealInterval& other);
  RealInterval& operator=(RealInterval&& other) noexcept;
  ~RealInterval();

  static RealInterval from_uint(std::uint64_t v, mpfr_prec_t precision);
  static RealInterval from_integer(const BigInt& v, mpfr_prec_t precision);
  static RealInterval from_ratio(const Ratio& v, mpfr_prec_t precision);

  mpfr_prec_t precision() const { return precision_; }
  mpfr_srcptr lower_raw() const { return lower_; }
  mpfr_srcptr upper_raw() const { return upper_; }

  // Endpoint write access for enclosure-producing kernels; the caller keeps
  // lower <= upper with outward rounding.
  mpfr_ptr lower_writable() { return lower_; }
  mpfr_ptr upper_writable() { return upper_; }

  // Same enclosure re-rounded outward at a different working precision.
  RealInterval at_precision(mpfr_prec_t precision) const;

  double lower_double() const;  // rounded down
  double upper_double() const;  // rounded up

  // Decimal endpoint renderings, rounded outward.
  std::string lower_string(int digits = 16) const;
  std::string upper_string(int digits = 16) const;

  bool contains(const Ratio& v) const;
  bool contains_zero() const;
  bool is_positive() const;     // lower > 0
  bool is_negative() const;     // upper < 0
  bool is_nonpositive() const;  // upper <= 0

  // Upper bound on the enclosure width.
  double width_upper() const;

  // True when this enclosure lies strictly below the other.
  bool strictly_below(const RealInterval& other) const;

  friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator/(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator-(const RealInterval& a);

  RealInterval& operator+=(const RealInterval& b);

  friend RealInterval exp(const RealInterval& x);
  friend RealInterval log(const RealInterval& x);  // requires lower > 0
  friend RealInterval sqrt(const RealInterval& x);  // requires lower >= 0

 private:
  mpfr_prec_t precision_;
  mpfr_t lower_;
  mpfr_t upper_;
};

}  // namespace robin
