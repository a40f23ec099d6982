#include "robin/sharper.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "robin/detail/parallel.hpp"
#include "robin/errors.hpp"
#include "robin/sieve.hpp"
#include "robin/thresholds.hpp"

namespace robin {

namespace {

const Ratio& ratio_6483() {
  static const Ratio r = make_ratio(6483, 10000);
  return r;
}

const Ratio& ratio_251() {
  static const Ratio r = make_ratio(251, 100);
  return r;
}

RealInterval upper_bound_form(std::uint64_t n, const Ratio& constant, mpfr_prec_t prec) {
  const RealInterval ll = log_log_enclosure(n, prec);
  if (mpfr_sgn(ll.lower_raw()) <= 0) {
    throw DomainError("upper bound form requires log log n > 0 (n >= 3)");
  }
  return exp_gamma_enclosure(prec) * ll + RealInterval::from_ratio(constant, prec) / ll;
}

// floor(2^32 * max(lower bound of fn, 0)); 0 disables a screen.
std::uint64_t fixed32_lower(const RealInterval& v) {
  if (mpfr_sgn(v.lower_raw()) <= 0) return 0;
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(v.lower_raw()));
  mpfr_mul_2ui(t, v.lower_raw(), 32, MPFR_RNDD);
  const std::uint64_t fixed = mpfr_get_ui(t, MPFR_RNDD);
  mpfr_clear(t);
  return fixed;
}

constexpr std::uint64_t kScreenFloor = 32;  // all sweep RHS forms increase from here

}  // namespace

RealInterval robin_upper(std::uint64_t n, mpfr_prec_t precision) {
  if (n < 3) throw DomainError("robin_upper requires n >= 3");
  return upper_bound_form(n, ratio_6483(), precision);
}

RealInterval rosser_upper(std::uint64_t n, mpfr_prec_t precision) {
  if (n < 3) throw DomainError("rosser_upper requires n >= 3");
  return upper_bound_form(n, ratio_251(), precision);
}

Ratio alpha_factor(std::size_t i, const PrimeTable& table) {
  table.require_count(i);
  BigInt num = 1, den = 1;
  for (std::size_t j = 1; j <= i; ++j) {
    const unsigned long p = table.p(j);
    num *= static_cast<unsigned long>(p * p - 1);
    den *= static_cast<unsigned long>(p * p);
  }
  return make_ratio(std::move(num), std::move(den));
}

BoundCheck check_bound(BigInt subject, Ratio lhs, const IntervalFn& rhs,
                       mpfr_prec_t precision_cap) {
  BoundCheck check;
  check.subject = std::move(subject);
  check.lhs = std::move(lhs);
  for (mpfr_prec_t prec = 64;; prec = std::min(prec * 2, precision_cap)) {
    RealInterval r = rhs(prec);
    RealInterval margin = r - RealInterval::from_ratio(check.lhs, prec);
    check.precision_used = prec;
    if (margin.is_positive() || margin.is_negative()) {
      check.holds = margin.is_positive();
      check.rhs = std::move(r);
      check.margin = std::move(margin);
      return check;
    }
    if (prec >= precision_cap) {
      throw PrecisionError("check_bound undecided for subject " + check.subject.get_str());
    }
  }
}

BoundCheck primorial_sharp_check(std::size_t n_index, std::size_t i, const PrimeTable& table,
                                 mpfr_prec_t precision_cap) {
  if (i < 2 || i > n_index) throw DomainError("primorial_sharp_check requires 2 <= i <= n");
  table.require_count(n_index);
  BigInt num = 1, den = 1;
  for (std::size_t j = 1; j <= n_index; ++j) {
    const unsigned long p = table.p(j);
    num *= p + 1;
    den *= p;
  }
  const Ratio alpha = alpha_factor(i, table);
  auto rhs = [n_index, alpha, &table](mpfr_prec_t prec) {
    const RealInterval ll = log(log_primorial(n_index, table, prec));
    return RealInterval::from_ratio(alpha, prec) *
           (exp_gamma_enclosure(prec) * ll + RealInterval::from_ratio(ratio_251(), prec) / ll);
  };
  return check_bound(primorial(n_index, table), make_ratio(std::move(num), std::move(den)),
                     rhs, precision_cap);
}

BoundCheck primorial_robin_check(std::size_t k, const PrimeTable& table,
                                 mpfr_prec_t precision_cap) {
  if (k < 1) throw DomainError("primorial_robin_check requires k >= 1");
  table.require_count(k);
  BigInt num = 1, den = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    const unsigned long p = table.p(j);
    num *= p + 1;
    den *= p;
  }
  auto rhs = [k, &table](mpfr_prec_t prec) {
    return exp_gamma_enclosure(prec) * log(log_primorial(k, table, prec));
  };
  return check_bound(primorial(k, table), make_ratio(std::move(num), std::move(den)), rhs,
                     precision_cap);
}

bool primorial_three_quarters(std::size_t k, const PrimeTable& table) {
  table.require_count(k);
  BigInt s_num = 1, s_den = 1, f_num = 1, f_den = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    const unsigned long p = table.p(j);
    s_num *= p + 1;
    s_den *= p;
    f_num *= p;
    f_den *= p - 1;
  }
  // s(N_k) <= (3/4) f(N_k)  <=>  4 s_num f_den <= 3 f_num s_den
  return 4 * s_num * f_den <= 3 * f_num * s_den;
}

OddBounds odd_bounds_check(std::uint64_t n, const PrimeTable& table,
                           mpfr_prec_t precision_cap) {
  if (n < 3 || n % 2 == 0) throw DomainError("odd_bounds_check requires odd n >= 3");
  OddBounds result;
  const Factorization f = factorize(n, table);
  const BigInt sigma = divisor_sigma(f);
  const BigInt big_n(static_cast<unsigned long>(n));

  if (n >= 17) {
    // s(2n) = 3 sigma(n) / (2n) for odd n.
    result.doubled = check_bound(
        big_n, make_ratio(3 * sigma, 2 * big_n),
        [n](mpfr_prec_t prec) {
          return exp_gamma_enclosure(prec) * log_log_enclosure(2 * n, prec);
        },
        precision_cap);
    result.sigma = check_bound(
        big_n, make_ratio(sigma, big_n),
        [n](mpfr_prec_t prec) {
          return RealInterval::from_ratio(make_ratio(2, 3), prec) *
                 exp_gamma_enclosure(prec) * log_log_enclosure(2 * n, prec);
        },
        precision_cap);
  }
  result.phi = check_bound(
      big_n, phi_ratio(f),
      [n](mpfr_prec_t prec) {
        const RealInterval ll = log_log_enclosure(2 * n, prec);
        return RealInterval::from_ratio(make_ratio(1, 2), prec) *
               (exp_gamma_enclosure(prec) * ll +
                RealInterval::from_ratio(ratio_251(), prec) / ll);
      },
      precision_cap);
  return result;
}

RealInterval g_value(GVariant variant, std::uint64_t x, mpfr_prec_t precision) {
  if (x < 2) throw DomainError("g_value requires x >= 2");
  const RealInterval eg = exp_gamma_enclosure(precision);
  if (variant == GVariant::OddProof) {
    const RealInterval ll2 = log_log_enclosure(2 * x, precision);
    return RealInterval::from_ratio(make_ratio(2, 3), precision) *
               (eg * ll2 + RealInterval::from_ratio(ratio_6483(), precision) / ll2) -
           eg * log_log_enclosure(x, precision);
  }
  const RealInterval ll4 = log_log_enclosure(4 * x, precision);
  return RealInterval::from_ratio(make_ratio(6, 7), precision) *
             (eg * ll4 + RealInterval::from_ratio(ratio_6483(), precision) / ll4) -
         eg * log_log_enclosure(2 * x, precision);
}

namespace {

int g_sign(GVariant variant, std::uint64_t x, mpfr_prec_t precision_cap) {
  for (mpfr_prec_t prec = 64;; prec = std::min(prec * 2, precision_cap)) {
    const RealInterval g = g_value(variant, x, prec);
    if (g.is_positive()) return 1;
    if (g.is_negative()) return -1;
    if (prec >= precision_cap) {
      throw PrecisionError("g sign undecided at x = " + std::to_string(x));
    }
  }
}

}  // namespace

GCrossover g_crossover(GVariant variant, std::uint64_t sweep_to, mpfr_prec_t precision_cap) {
  if (sweep_to < 3) throw DomainError("g_crossover requires sweep_to >= 3");
  GCrossover out;
  for (std::uint64_t x = 2; x <= sweep_to; ++x) {
    const int sign = g_sign(variant, x, precision_cap);
    if (sign > 0) {
      out.last_positive = x;
    } else if (out.first_negative == 0) {
      out.first_negative = x;
    }
  }

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::uint64_t> dist(2, sweep_to);
  out.monotone_sampled = true;
  for (int trial = 0; trial < 100; ++trial) {
    std::uint64_t x1 = dist(rng), x2 = dist(rng);
    if (x1 == x2) continue;
    if (x1 > x2) std::swap(x1, x2);
    const Separation sep = separate(
        [&](mpfr_prec_t p) { return g_value(variant, x2, p); },
        [&](mpfr_prec_t p) { return g_value(variant, x1, p); }, precision_cap);
    if (sep.order != Ordering3::Less) {  // expect g(x2) < g(x1)
      out.monotone_sampled = false;
      break;
    }
  }
  return out;
}

namespace {

struct SweepChunkResult {
  std::uint64_t checked = 0;
  std::vector<std::uint64_t> failures;
};

// Shared machinery for the s(n)- and f(n)-type sweeps: exact rational lhs
// from the sieve, a fixed-point screen against the chunk-start RHS, and a
// per-n adaptive check for anything the screen cannot settle.
template <typename LhsFn, typename RhsFn>
SweepReport run_sweep(std::uint64_t from, std::uint64_t to, const PrimeTable& table,
                      const SweepOptions& options, LhsFn&& lhs_of, RhsFn&& rhs_fn) {
  if (from < 3 || from > to) throw DomainError("sweep requires 3 <= from <= to");
  SweepReport report;
  report.from = from;
  report.to = to;

  const auto chunks = detail::split_range(from, to, options.chunk_size);
  auto results = detail::map_chunks<SweepChunkResult>(
      chunks, options.threads, [&](detail::ChunkRange c) {
        SweepChunkResult res;
        const RangeSieve sieve = RangeSieve::build(c.lo, c.hi, table);
        const std::uint64_t screen =
            c.lo >= kScreenFloor ? fixed32_lower(rhs_fn(c.lo, mpfr_prec_t{96})) : 0;
        for (std::uint64_t n = c.lo; n <= c.hi; ++n) {
          ++res.checked;
          const auto [num, den] = lhs_of(sieve, n);
          if (screen != 0 && (static_cast<unsigned __int128>(num) << 32) <
                                 static_cast<unsigned __int128>(screen) * den) {
            continue;
          }
          const BoundCheck check = check_bound(
              BigInt(static_cast<unsigned long>(n)),
              make_ratio(BigInt(static_cast<unsigned long>(num)),
                         BigInt(static_cast<unsigned long>(den))),
              [&](mpfr_prec_t prec) { return rhs_fn(n, prec); }, options.precision_cap);
          if (!check.holds) res.failures.push_back(n);
        }
        return res;
      });

  for (auto& part : results) {
    report.checked += part.checked;
    report.failures.insert(report.failures.end(), part.failures.begin(), part.failures.end());
  }
  return report;
}

}  // namespace

SweepReport sweep_robin_upper(std::uint64_t from, std::uint64_t to, const PrimeTable& table,
                              const SweepOptions& options) {
  return run_sweep(
      from, to, table, options,
      [](const RangeSieve& sieve, std::uint64_t n) {
        return std::pair<std::uint64_t, std::uint64_t>{sieve.sigma_of(n), n};
      },
      [](std::uint64_t n, mpfr_prec_t prec) { return robin_upper(n, prec); });
}

SweepReport sweep_rosser_upper(std::uint64_t from, std::uint64_t to, const PrimeTable& table,
                               const SweepOptions& options) {
  return run_sweep(
      from, to, table, options,
      [](const RangeSieve& sieve, std::uint64_t n) {
        return std::pair<std::uint64_t, std::uint64_t>{sieve.rad_of(n), sieve.phi_rad_of(n)};
      },
      [](std::uint64_t n, mpfr_prec_t prec) { return rosser_upper(n, prec); });
}

OddSweepReport sweep_odd_bounds(std::uint64_t from, std::uint64_t to, const PrimeTable& table,
                                const SweepOptions& options) {
  if (from < 3 || from > to) throw DomainError("sweep requires 3 <= from <= to");
  OddSweepReport report;
  report.from = from;
  report.to = to;

  const auto doubled_rhs = [](std::uint64_t n, mpfr_prec_t prec) {
    return exp_gamma_enclosure(prec) * log_log_enclosure(2 * n, prec);
  };
  const auto sigma_rhs = [](std::uint64_t n, mpfr_prec_t prec) {
    return RealInterval::from_ratio(make_ratio(2, 3), prec) * exp_gamma_enclosure(prec) *
           log_log_enclosure(2 * n, prec);
  };
  const auto phi_rhs = [](std::uint64_t n, mpfr_prec_t prec) {
    const RealInterval ll = log_log_enclosure(2 * n, prec);
    return RealInterval::from_ratio(make_ratio(1, 2), prec) *
           (exp_gamma_enclosure(prec) * ll +
            RealInterval::from_ratio(ratio_251(), prec) / ll);
  };

  struct OddChunkResult {
    std::uint64_t checked = 0;
    std::vector<std::uint64_t> fail_doubled, fail_sigma, fail_phi;
  };

  const auto chunks = detail::split_range(from, to, options.chunk_size);
  auto results = detail::map_chunks<OddChunkResult>(
      chunks, options.threads, [&](detail::ChunkRange c) {
        OddChunkResult res;
        const RangeSieve sieve = RangeSieve::build(c.lo, c.hi, table);
        std::uint64_t screen_doubled = 0, screen_sigma = 0, screen_phi = 0;
        if (c.lo >= kScreenFloor) {
          screen_doubled = fixed32_lower(doubled_rhs(c.lo, 96));
          screen_sigma = fixed32_lower(sigma_rhs(c.lo, 96));
          screen_phi = fixed32_lower(phi_rhs(c.lo, 96));
        }
        for (std::uint64_t n = c.lo | 1; n <= c.hi; n += 2) {
          ++res.checked;
          const std::uint64_t sig = sieve.sigma_of(n);
          const BigInt big_n(static_cast<unsigned long>(n));

          if (n >= 17) {
            // s(2n) = 3 sigma(n) / (2n) for odd n.
            if (!(screen_doubled != 0 &&
                  (static_cast<unsigned __int128>(3) * sig << 32) <
                      static_cast<unsigned __int128>(screen_doubled) * (2 * n))) {
              const BoundCheck check = check_bound(
                  big_n, make_ratio(BigInt(3 * BigInt(static_cast<unsigned long>(sig))),
                                    2 * big_n),
                  [&](mpfr_prec_t prec) { return doubled_rhs(n, prec); },
                  options.precision_cap);
              if (!check.holds) res.fail_doubled.push_back(n);
            }
            if (!(screen_sigma != 0 && (static_cast<unsigned __int128>(sig) << 32) <
                                           static_cast<unsigned __int128>(screen_sigma) * n)) {
              const BoundCheck check = check_bound(
                  big_n, make_ratio(BigInt(static_cast<unsigned long>(sig)), big_n),
                  [&](mpfr_prec_t prec) { return sigma_rhs(n, prec); }, options.precision_cap);
              if (!check.holds) res.fail_sigma.push_back(n);
            }
          }
          const std::uint64_t rad = sieve.rad_of(n);
          const std::uint64_t phi_rad = sieve.phi_rad_of(n);
          if (!(screen_phi != 0 && (static_cast<unsigned __int128>(rad) << 32) <
                                       static_cast<unsigned __int128>(screen_phi) * phi_rad)) {
            const BoundCheck check = check_bound(
                big_n,
                make_ratio(BigInt(static_cast<unsigned long>(rad)),
                           BigInt(static_cast<unsigned long>(phi_rad))),
                [&](mpfr_prec_t prec) { return phi_rhs(n, prec); }, options.precision_cap);
            if (!check.holds) res.fail_phi.push_back(n);
          }
        }
        return res;
      });

  for (auto& part : results) {
    report.checked += part.checked;
    report.doubled_failures.insert(report.doubled_failures.end(), part.fail_doubled.begin(),
                                   part.fail_doubled.end());
    report.sigma_failures.insert(report.sigma_failures.end(), part.fail_sigma.begin(),
                                 part.fail_sigma.end());
    report.phi_failures.insert(report.phi_failures.end(), part.fail_phi.begin(),
                               part.fail_phi.end());
  }
  return report;
}

PrimorialSweepReport sweep_primorials(std::size_t k_from, std::size_t k_to, std::size_t i,
                                      const PrimeTable& table, mpfr_prec_t precision_cap) {
  if (k_from < 2 || k_from > k_to) throw DomainError("sweep_primorials requires 2 <= k_from <= k_to");
  if (i < 2) throw DomainError("sweep_primorials requires i >= 2");
  table.require_count(k_to);

  PrimorialSweepReport report;
  report.k_from = k_from;
  report.k_to = k_to;
  const Ratio alpha = alpha_factor(i, table);
  const mpfr_prec_t base = 128;

  BigInt s_num = 1, s_den = 1, f_num = 1, f_den = 1;
  RealInterval log_acc(base);
  for (std::size_t k = 1; k <= k_to; ++k) {
    const unsigned long p = table.p(k);
    s_num *= p + 1;
    s_den *= p;
    f_num *= p;
    f_den *= p - 1;
    log_acc += log(RealInterval::from_uint(p, base));
    if (k < k_from) continue;

    const Ratio s = make_ratio(s_num, s_den);

    // s(N_k) <= 3/4 f(N_k), exact.
    if (!(4 * s_num * f_den <= 3 * f_num * s_den)) report.three_quarter_failures.push_back(k);

    const RealInterval ll = log(log_acc);
    const RealInterval s_iv = RealInterval::from_ratio(s, base);

    if (k >= 4) {
      const RealInterval margin = exp_gamma_enclosure(base) * ll - s_iv;
      if (margin.is_positive()) {
        // holds
      } else if (margin.is_negative()) {
        report.robin_failures.push_back(k);
      } else if (!primorial_robin_check(k, table, precision_cap).holds) {
        report.robin_failures.push_back(k);
      }
    }
    if (k >= std::max<std::size_t>(4, i)) {
      const RealInterval rhs =
          RealInterval::from_ratio(alpha, base) *
          (exp_gamma_enclosure(base) * ll + RealInterval::from_ratio(ratio_251(), base) / ll);
      const RealInterval margin = rhs - s_iv;
      if (margin.is_positive()) {
        // holds
      } else if (margin.is_negative()) {
        report.sharp_failures.push_back(k);
      } else if (!primorial_sharp_check(k, i, table, precision_cap).holds) {
        report.sharp_failures.push_back(k);
      }
    }
  }
  return report;
}

}  // namespace robin
