#include "robin/thresholds.hpp"

#include <algorithm>
#include <string>

#include "robin/errors.hpp"
#include "robin/numerics.hpp"

namespace robin {

namespace {

const Ratio& ratio_141() {
  static const Ratio r = make_ratio(141, 100);
  return r;
}

RealInterval one_interval(mpfr_prec_t prec) { return RealInterval::from_uint(1, prec); }

}  // namespace

RealInterval log_primorial(std::size_t k, const PrimeTable& table, mpfr_prec_t precision) {
  table.require_count(k);
  RealInterval acc(precision);
  for (std::size_t i = 1; i <= k; ++i) {
    acc += log(RealInterval::from_uint(table.p(i), precision));
  }
  return acc;
}

Ratio primorial_phi_ratio(std::size_t k, const PrimeTable& table) {
  table.require_count(k);
  BigInt num = 1, den = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const unsigned long p = table.p(i);
    num *= p;
    den *= p - 1;
  }
  return make_ratio(std::move(num), std::move(den));
}

RealInterval domination_gap(std::size_t k, const PrimeTable& table, mpfr_prec_t precision) {
  if (k == 0) throw DomainError("domination_gap requires k >= 1");
  const Ratio f = primorial_phi_ratio(k, table);
  const RealInterval exponent =
      RealInterval::from_ratio(f, precision) * exp(-gamma_enclosure(precision));
  return exp(exponent) - log_primorial(k, table, precision);
}

RealInterval domination_threshold(std::size_t k, std::uint64_t q, const PrimeTable& table,
                                  mpfr_prec_t precision) {
  if (q < 2) throw DomainError("domination_threshold requires q >= 2");
  const RealInterval gap = domination_gap(k, table, precision);
  return one_interval(precision) + gap / log(RealInterval::from_uint(q, precision));
}

RealInterval division_epsilon(std::uint64_t k, unsigned divisor, mpfr_prec_t precision) {
  if (divisor != 2 && divisor != 3 && divisor != 14) {
    throw DomainError("division_epsilon requires divisor in {2, 3, 14}");
  }
  if (k < 13) throw DomainError("division_epsilon requires k >= 13 (Massias regime)");

  const std::uint64_t dk = static_cast<std::uint64_t>(divisor) * k;
  const std::uint64_t m = dk + divisor - 1;
  const RealInterval kk = RealInterval::from_uint(k, precision);
  const RealInterval dki = RealInterval::from_uint(dk, precision);
  const RealInterval mi = RealInterval::from_uint(m, precision);
  const RealInterval c141 = RealInterval::from_ratio(ratio_141(), precision);

  const RealInterval first = exp(c141 / log(dki * log(dki))) - one_interval(precision);
  const RealInterval log_m = log(mi);
  const RealInterval second = (kk * log(kk)) / (mi * (log_m + log(log_m)));
  return first - second;
}

JkReport verify_jk(unsigned divisor, std::uint64_t k_from, std::uint64_t k_to,
                   const PrimeTable& table, const JkOptions& options) {
  if (divisor != 2 && divisor != 3 && divisor != 14) {
    throw DomainError("verify_jk requires divisor in {2, 3, 14}");
  }
  if (k_from < 1 || k_from > k_to) throw DomainError("verify_jk requires 1 <= k_from <= k_to");

  JkReport report;
  report.divisor = divisor;
  report.k_from = k_from;
  report.k_to = k_to;

  if (divisor == 14) {
    // Giant-k regime: the closed-form epsilon certificate only.
    for (std::uint64_t k = k_from; k <= k_to; ++k) {
      bool decided = false;
      for (mpfr_prec_t prec = options.base_precision;; prec = std::min(prec * 2, options.precision_cap)) {
        const RealInterval eps = division_epsilon(k, divisor, prec);
        if (eps.is_negative()) {
          decided = true;
          break;
        }
        if (eps.is_positive()) {
          report.failures.push_back(k);
          decided = true;
          break;
        }
        if (prec >= options.precision_cap) break;
      }
      if (!decided) {
        throw PrecisionError("verify_jk: epsilon sign undecided at k = " + std::to_string(k));
      }
    }
    report.all_hold = report.failures.empty();
    return report;
  }

  table.require_count(k_to);

  // Single pass with an incremental exact f(N_k) and prefix log N_j
  // enclosures; straddling entries re-checked standalone at higher precision.
  const mpfr_prec_t base = options.base_precision;
  std::vector<RealInterval> log_n;
  log_n.reserve(k_to + 1);
  log_n.emplace_back(base);  // log N_0 = 0
  {
    RealInterval acc(base);
    for (std::size_t i = 1; i <= k_to; ++i) {
      acc += log(RealInterval::from_uint(table.p(i), base));
      log_n.push_back(acc);
    }
  }

  BigInt num = 1, den = 1;
  const RealInterval exp_neg_gamma = exp(-gamma_enclosure(base));
  for (std::uint64_t k = 1; k <= k_to; ++k) {
    const unsigned long p = table.p(k);
    num *= p;
    den *= p - 1;
    if (k < k_from) continue;

    const Ratio f = make_ratio(num, den);
    const RealInterval gap =
        exp(RealInterval::from_ratio(f, base) * exp_neg_gamma) - log_n[k];
    const RealInterval& target = log_n[k / divisor];

    if (mpfr_cmp(gap.upper_raw(), target.lower_raw()) <= 0) continue;  // holds
    if (mpfr_cmp(gap.lower_raw(), target.upper_raw()) > 0) {           // fails
      report.failures.push_back(k);
      continue;
    }

    // Straddle: escalate this k alone.
    bool decided = false;
    for (mpfr_prec_t prec = base * 2; prec <= options.precision_cap; prec *= 2) {
      const RealInterval g = domination_gap(k, table, prec);
      const RealInterval t = log_primorial(k / divisor, table, prec);
      if (mpfr_cmp(g.upper_raw(), t.lower_raw()) <= 0) {
        decided = true;
        break;
      }
      if (mpfr_cmp(g.lower_raw(), t.upper_raw()) > 0) {
        report.failures.push_back(k);
        decided = true;
        break;
      }
    }
    if (!decided) {
      throw PrecisionError("verify_jk: bound undecided at k = " + std::to_string(k));
    }
  }
  report.all_hold = report.failures.empty();
  return report;
}

bool massias_check(std::size_t k, const PrimeTable& table, mpfr_prec_t precision_cap) {
  if (k < 13) throw DomainError("massias_check requires k >= 13");
  for (mpfr_prec_t prec = 128;; prec = std::min(prec * 2, precision_cap)) {
    const RealInterval log_n = log_primorial(k, table, prec);
    const RealInterval kk = RealInterval::from_uint(k, prec);
    const RealInterval log_k = log(kk);
    const RealInterval lower = kk * log_k;
    const RealInterval upper = kk * (log_k + log(log_k));
    const bool lower_ok = mpfr_cmp(lower.upper_raw(), log_n.lower_raw()) < 0;
    const bool lower_fail = mpfr_cmp(lower.lower_raw(), log_n.upper_raw()) >= 0;
    const bool upper_ok = mpfr_cmp(log_n.upper_raw(), upper.lower_raw()) < 0;
    const bool upper_fail = mpfr_cmp(log_n.lower_raw(), upper.upper_raw()) >= 0;
    if (lower_ok && upper_ok) return true;
    if (lower_fail || upper_fail) return false;
    if (prec >= precision_cap) {
      throw PrecisionError("massias_check undecided at k = " + std::to_string(k));
    }
  }
}

std::vector<std::uint64_t> massias_sweep(std::size_t k_from, std::size_t k_to,
                                         const PrimeTable& table, mpfr_prec_t precision_cap,
                                         mpfr_prec_t base_precision) {
  if (k_from < 13 || k_from > k_to) throw DomainError("massias_sweep requires 13 <= k_from <= k_to");
  table.require_count(k_to);
  std::vector<std::uint64_t> failures;
  RealInterval acc(base_precision);
  for (std::size_t k = 1; k <= k_to; ++k) {
    acc += log(RealInterval::from_uint(table.p(k), base_precision));
    if (k < k_from) continue;
    const RealInterval kk = RealInterval::from_uint(k, base_precision);
    const RealInterval log_k = log(kk);
    const RealInterval lower = kk * log_k;
    const RealInterval upper = kk * (log_k + log(log_k));
    const bool ok = mpfr_cmp(lower.upper_raw(), acc.lower_raw()) < 0 &&
                    mpfr_cmp(acc.upper_raw(), upper.lower_raw()) < 0;
    if (!ok && !massias_check(k, table, precision_cap)) failures.push_back(k);
  }
  return failures;
}

CounterexampleBounds counterexample_bounds(const RealInterval& log_log_c_lower,
                                           mpfr_prec_t precision) {
  if (mpfr_cmp_ui(log_log_c_lower.lower_raw(), 2) < 0) {
    throw DomainError("counterexample_bounds requires log log c >= 2");
  }
  CounterexampleBounds out;
  out.omega_reference = 969'672'728;
  const RealInterval L = log_log_c_lower.at_precision(precision);
  out.log_log_c_lower = L;

  const RealInterval four = RealInterval::from_uint(4, precision);
  const RealInterval two = RealInterval::from_uint(2, precision);
  const RealInterval x = (L + sqrt(L * L - four)) / two;
  out.log_p_lower = x;

  // omega(c) >= pi(e^x) + 1: every prime up to e^x lies strictly below
  // p_omega(c). Explicit pi(x) lower bounds (Dusart):
  //   pi(y) >= y/ln y                                for y >= 17
  //   pi(y) >= (y/ln y)(1 + 1/ln y)                  for y >= 599
  //   pi(y) >= (y/ln y)(1 + 1/ln y + 2/ln^2 y)       for y >= 88783
  RealInterval x_point(precision);
  mpfr_set(x_point.lower_writable(), x.lower_raw(), MPFR_RNDD);
  mpfr_set(x_point.upper_writable(), x.lower_raw(), MPFR_RNDU);
  const double xd = x_point.lower_double();
  const RealInterval y = exp(x_point);
  const RealInterval one = one_interval(precision);
  RealInterval pi_low(precision);
  if (xd >= 11.3939) {  // ln 88783 = 11.39387...
    pi_low = (y / x_point) * (one + one / x_point + two / (x_point * x_point));
  } else if (xd >= 6.3953) {  // ln 599 = 6.39526...
    pi_low = (y / x_point) * (one + one / x_point);
  } else if (xd >= 2.8333) {  // ln 17 = 2.83321...
    pi_low = y / x_point;
  } else {
    pi_low = RealInterval::from_uint(0, precision);
  }
  mpfr_t ceil_lo;
  mpfr_init2(ceil_lo, precision);
  mpfr_ceil(ceil_lo, pi_low.lower_raw());
  out.omega_lower = mpfr_get_ui(ceil_lo, MPFR_RNDD) + 1;
  mpfr_clear(ceil_lo);

  out.ratio_window_lower = exp(-(one / x));
  return out;
}

RealInterval briggs_log_log_lower(mpfr_prec_t precision) {
  const RealInterval ten = RealInterval::from_uint(10, precision);
  const RealInterval log10 = log(ten);
  return ten * log10 + log(log10);
}

RatioWindow ratio_window(const BigInt& p, mpfr_prec_t precision) {
  if (p < 3) throw DomainError("ratio_window requires p >= 3");
  RatioWindow w;
  const RealInterval logp = log(RealInterval::from_integer(p, precision));
  w.lower = exp(-(one_interval(precision) / logp));
  w.upper = Ratio(1);
  return w;
}

ExponentCaps exponent_caps(unsigned c1, std::size_t omega, std::size_t i,
                           const PrimeTable& table, mpfr_prec_t precision) {
  if (c1 == 0) throw DomainError("exponent_caps requires c1 >= 1");
  if (i <= 1 || i > omega) throw DomainError("exponent_caps requires 1 < i <= omega");
  table.require_count(std::max(omega, i));
  ExponentCaps caps;
  caps.power_cap = pow_ui(BigInt(2), c1 + 2);
  caps.prime_cap = RealInterval::from_uint(table.p(i), precision) *
                   exp(domination_gap(omega, table, precision));
  return caps;
}

std::vector<ThresholdRow> threshold_table(std::size_t k_from, std::size_t k_to,
                                          const std::vector<std::uint64_t>& qs,
                                          const PrimeTable& table, mpfr_prec_t precision) {
  if (k_from < 1 || k_from > k_to) throw DomainError("threshold_table requires 1 <= k_from <= k_to");
  table.require_count(k_to);
  std::vector<ThresholdRow> rows;
  rows.reserve(k_to - k_from + 1);

  RealInterval log_acc(precision);
  BigInt num = 1, den = 1;
  const RealInterval exp_neg_gamma = exp(-gamma_enclosure(precision));
  const RealInterval one = one_interval(precision);
  for (std::size_t k = 1; k <= k_to; ++k) {
    const unsigned long p = table.p(k);
    log_acc += log(RealInterval::from_uint(p, precision));
    num *= p;
    den *= p - 1;
    if (k < k_from) continue;
    ThresholdRow row;
    row.k = k;
    row.log_primorial = log_acc;
    row.gap = exp(RealInterval::from_ratio(make_ratio(num, den), precision) * exp_neg_gamma) -
              log_acc;
    for (std::uint64_t q : qs) {
      if (q < 2) throw DomainError("threshold_table requires q >= 2");
      row.thresholds.emplace_back(
          q, one + row.gap / log(RealInterval::from_uint(q, precision)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace robin
