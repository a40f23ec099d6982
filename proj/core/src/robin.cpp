#include "robin/robin.hpp"

#include <algorithm>
#include <string>

#include "robin/detail/parallel.hpp"
#include "robin/errors.hpp"
#include "robin/numerics.hpp"
#include "robin/sieve.hpp"
#include "robin/thresholds.hpp"

namespace robin {

namespace {

std::vector<std::uint64_t> primorials_upto(std::uint64_t limit, const PrimeTable& table) {
  std::vector<std::uint64_t> out;
  std::uint64_t v = 1;
  for (std::size_t i = 1; i <= table.count(); ++i) {
    const std::uint64_t p = table.p(i);
    if (v > limit / p) return out;
    v *= p;
    out.push_back(v);
  }
  // Ran out of table before the products outgrew the limit.
  throw CapacityError("primorial enumeration exhausted the PrimeTable");
}

bool chunk_filter_match(const RangeSieve& sieve, std::uint64_t n, Category c,
                        const std::vector<std::uint64_t>& prims) {
  switch (c) {
    case Category::Odd: return (n & 1) != 0;
    case Category::SquareFree: return sieve.square_free(n);
    case Category::SquareFull: return sieve.square_full(n);
    case Category::Primorial: return std::binary_search(prims.begin(), prims.end(), n);
    case Category::OmegaLe4: return sieve.omega_of(n) <= 4;
  }
  return false;
}

// floor(2^32 * lower bound of e^gamma log log a); 0 disables the screen.
std::uint64_t screen_fixed32(std::uint64_t a) {
  if (a < 3) return 0;
  const RealInterval rhs = exp_gamma_enclosure(96) * log_log_enclosure(a, 96);
  if (mpfr_sgn(rhs.lower_raw()) <= 0) return 0;
  mpfr_t t;
  mpfr_init2(t, 96);
  mpfr_mul_2ui(t, rhs.lower_raw(), 32, MPFR_RNDD);
  const std::uint64_t fixed = mpfr_get_ui(t, MPFR_RNDD);
  mpfr_clear(t);
  return fixed;
}

}  // namespace

const char* to_string(RobinStatus s) {
  switch (s) {
    case RobinStatus::Satisfied: return "satisfied";
    case RobinStatus::Violated: return "violated";
    case RobinStatus::Undecided: return "undecided";
  }
  return "undecided";
}

const char* to_string(Category c) {
  switch (c) {
    case Category::Odd: return "odd";
    case Category::SquareFree: return "square-free";
    case Category::SquareFull: return "square-full";
    case Category::Primorial: return "primorial";
    case Category::OmegaLe4: return "omega-le-4";
  }
  return "?";
}

std::optional<Category> category_from_string(std::string_view name) {
  if (name == "odd") return Category::Odd;
  if (name == "square-free" || name == "squarefree") return Category::SquareFree;
  if (name == "square-full" || name == "squarefull") return Category::SquareFull;
  if (name == "primorial") return Category::Primorial;
  if (name == "omega-le-4" || name == "omega4") return Category::OmegaLe4;
  return std::nullopt;
}

RobinVerdict check_abundancy(BigInt n, const Ratio& s, const CheckOptions& options) {
  if (n < 3) throw DomainError("Robin verdicts require n >= 3");
  RobinVerdict verdict;
  verdict.n = std::move(n);
  for (mpfr_prec_t prec = 64;; prec = std::min(prec * 2, options.precision_cap)) {
    RealInterval margin = exp_gamma_enclosure(prec) * log_log_enclosure(verdict.n, prec) -
                          RealInterval::from_ratio(s, prec);
    verdict.precision_used = prec;
    if (margin.is_positive()) {
      verdict.status = RobinStatus::Satisfied;
      verdict.margin = std::move(margin);
      return verdict;
    }
    if (margin.is_nonpositive()) {
      verdict.status = RobinStatus::Violated;
      verdict.margin = std::move(margin);
      return verdict;
    }
    if (prec >= options.precision_cap) {
      verdict.status = RobinStatus::Undecided;
      verdict.margin = std::move(margin);
      return verdict;
    }
  }
}

RobinVerdict check(const BigInt& n, const PrimeTable& table, const CheckOptions& options) {
  if (n < 3) throw DomainError("Robin verdicts require n >= 3");
  return check_abundancy(n, abundancy(factorize(n, table)), options);
}

RobinVerdict check(std::uint64_t n, const PrimeTable& table, const CheckOptions& options) {
  return check(BigInt(static_cast<unsigned long>(n)), table, options);
}

RobinVerdict check(const Factorization& n, const CheckOptions& options) {
  return check_abundancy(n.value(), abundancy(n), options);
}

std::vector<Category> classify(const Factorization& n, const PrimeTable& table) {
  std::vector<Category> tags;
  const auto& factors = n.factors();
  const bool even = !factors.empty() && factors.front().prime == 2;
  bool square_free = true, square_full = true;
  for (const auto& f : factors) {
    if (f.exponent >= 2) {
      square_free = false;
    } else {
      square_full = false;
    }
  }
  bool primorial_shape = square_free;
  if (primorial_shape) {
    table.require_count(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].prime != static_cast<unsigned long>(table.p(i + 1))) {
        primorial_shape = false;
        break;
      }
    }
  }
  if (!even) tags.push_back(Category::Odd);
  if (square_free) tags.push_back(Category::SquareFree);
  if (square_full) tags.push_back(Category::SquareFull);
  if (primorial_shape) tags.push_back(Category::Primorial);
  if (factors.size() <= 4) tags.push_back(Category::OmegaLe4);
  return tags;
}

std::vector<std::uint64_t> expected_exceptions(Category c) {
  switch (c) {
    case Category::Odd: return {3, 5, 9};
    case Category::SquareFree: return {2, 3, 5, 6, 10, 30};
    case Category::SquareFull: return {4, 8, 9, 16, 36};
    case Category::Primorial: return {2, 6, 30};
    case Category::OmegaLe4: return classical_exceptions();
  }
  throw DomainError("unknown category");
}

std::vector<std::uint64_t> expected_exceptions_omega(unsigned k) {
  switch (k) {
    case 1: return {3, 4, 5, 8, 9, 16};
    case 2: return {6, 10, 12, 18, 20, 24, 36, 48, 72};
    case 3: return {30, 60, 84, 120, 180, 240, 360, 720};
    case 4: return {840, 2520, 5040};
    default: return {};
  }
}

std::vector<std::uint64_t> classical_exceptions() {
  std::vector<std::uint64_t> all;
  for (unsigned k = 1; k <= 4; ++k) {
    const auto ck = expected_exceptions_omega(k);
    all.insert(all.end(), ck.begin(), ck.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<std::uint64_t> scan(std::uint64_t from, std::uint64_t to, const PrimeTable& table,
                                const ScanOptions& options) {
  if (from < 3 || from > to) throw DomainError("scan requires 3 <= from <= to");

  std::vector<std::uint64_t> prims;
  if (options.filter == Category::Primorial) prims = primorials_upto(to, table);

  const auto chunks = detail::split_range(from, to, options.chunk_size);
  auto results = detail::map_chunks<std::vector<std::uint64_t>>(
      chunks, options.threads, [&](detail::ChunkRange c) {
        std::vector<std::uint64_t> violations;
        const RangeSieve sieve = RangeSieve::build(c.lo, c.hi, table);
        const std::uint64_t screen = screen_fixed32(c.lo);
        for (std::uint64_t n = c.lo; n <= c.hi; ++n) {
          if (options.filter && !chunk_filter_match(sieve, n, *options.filter, prims)) continue;
          const std::uint64_t sig = sieve.sigma_of(n);
          // s(n) < floor-lower(rhs(c.lo)) <= rhs(n): satisfied with no
          // further work (rhs is increasing in n).
          if (screen != 0 &&
              (static_cast<unsigned __int128>(sig) << 32) <
                  static_cast<unsigned __int128>(screen) * n) {
            continue;
          }
          const RobinVerdict verdict = check_abundancy(
              BigInt(static_cast<unsigned long>(n)),
              make_ratio(BigInt(static_cast<unsigned long>(sig)),
                         BigInt(static_cast<unsigned long>(n))),
              CheckOptions{options.precision_cap});
          if (verdict.status == RobinStatus::Undecided) {
            throw PrecisionError("scan: verdict undecided at n = " + std::to_string(n));
          }
          if (verdict.status == RobinStatus::Violated) violations.push_back(n);
        }
        return violations;
      });

  std::vector<std::uint64_t> out;
  for (auto& part : results) out.insert(out.end(), part.begin(), part.end());
  return out;
}

CategoryReport scan_category(Category c, std::uint64_t from, std::uint64_t to,
                             const PrimeTable& table, const ScanOptions& options) {
  CategoryReport report;
  report.category = to_string(c);
  report.from = from;
  report.to = to;
  ScanOptions with_filter = options;
  with_filter.filter = c;
  report.found = scan(from, to, table, with_filter);
  for (std::uint64_t e : expected_exceptions(c)) {
    if (e >= from && e <= to) report.expected.push_back(e);
  }
  report.match = report.found == report.expected;
  return report;
}

OmegaCertificate sufficient_by_omega(std::size_t omega, const PrimeTable& table,
                                     mpfr_prec_t precision_cap) {
  if (omega == 0) throw DomainError("sufficient_by_omega requires omega >= 1");
  table.require_count(omega);
  const Ratio f = primorial_phi_ratio(omega, table);
  OmegaCertificate cert;
  for (mpfr_prec_t prec = 64;; prec = std::min(prec * 2, precision_cap)) {
    // e^gamma log log N_omega - f(N_omega); nonnegative means every n with
    // this omega satisfies Robin's inequality.
    RealInterval log_n = log_primorial(omega, table, prec);
    RealInterval margin = exp_gamma_enclosure(prec) * log(log_n) -
                          RealInterval::from_ratio(f, prec);
    cert.precision_used = prec;
    if (mpfr_sgn(margin.lower_raw()) >= 0) {
      cert.sufficient = true;
      cert.margin = std::move(margin);
      return cert;
    }
    if (margin.is_negative()) {
      cert.sufficient = false;
      cert.margin = std::move(margin);
      return cert;
    }
    if (prec >= precision_cap) {
      throw PrecisionError("sufficient_by_omega undecided for omega = " +
                           std::to_string(omega));
    }
  }
}

std::optional<std::size_t> sufficient_by_domination(const Factorization& n,
                                                    const PrimeTable& table,
                                                    mpfr_prec_t precision_cap) {
  if (n.omega() == 0) throw DomainError("sufficient_by_domination requires n >= 2");
  const std::size_t k = n.omega();
  table.require_count(k);
  const Ratio f = primorial_phi_ratio(k, table);

  for (mpfr_prec_t prec = 64;; prec = std::min(prec * 2, precision_cap)) {
    const RealInterval gap =
        exp(RealInterval::from_ratio(f, prec) * exp(-gamma_enclosure(prec))) -
        log_primorial(k, table, prec);
    const RealInterval one = RealInterval::from_uint(1, prec);
    bool straddle = false;
    std::optional<std::size_t> witness;
    for (std::size_t i = 0; i < n.factors().size(); ++i) {
      const auto& factor = n.factors()[i];
      const RealInterval threshold =
          one + gap / log(RealInterval::from_integer(factor.prime, prec));
      if (mpfr_cmp_ui(threshold.upper_raw(), factor.exponent) <= 0) {
        witness = i;  // a_i >= upper(M_k(q_i)) certifies a_i >= M_k(q_i)
        break;
      }
      if (mpfr_cmp_ui(threshold.lower_raw(), factor.exponent) <= 0) {
        straddle = true;  // threshold enclosure contains a_i; escalate
        break;
      }
    }
    if (witness) return witness;
    if (!straddle) return std::nullopt;
    if (prec >= precision_cap) {
      throw PrecisionError("sufficient_by_domination undecided");
    }
  }
}

bool sufficient_by_fraction(const Factorization& n) {
  if (n.omega() == 0) throw DomainError("sufficient_by_fraction requires n >= 2");
  const std::uint64_t omega = n.omega();
  std::uint64_t repeated = 0;
  for (const auto& f : n.factors()) {
    if (f.exponent != 1) ++repeated;
  }
  if (omega >= 18 && 2 * repeated >= omega) return true;
  if (omega >= 39 && 3 * repeated >= omega) return true;
  if (omega >= 969'672'728ULL && 14 * repeated >= omega) return true;
  return false;
}

}  // namespace robin
