#include "robin/factor.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "robin/errors.hpp"

namespace robin {

namespace {

bool is_probable_prime(const BigInt& n) {
  // BPSW plus extra Miller-Rabin rounds; exact for anything in this
  // project's reach (no known composites pass).
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Brent-cycle Pollard rho. n must be composite, coprime to small primes.
BigInt pollard_brent(const BigInt& n, unsigned long c) {
  BigInt y = 2, x, ys, q = 1, g = 1;
  unsigned long r = 1;
  const unsigned long block = 128;
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      const unsigned long steps = std::min(block, r - k);
      for (unsigned long i = 0; i < steps; ++i) {
        y = (y * y + c) % n;
        q = q * abs(x - y) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += block;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = (ys * ys + c) % n;
      BigInt d = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_recursive(BigInt n, std::map<BigInt, unsigned>& out) {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++out[BigInt(p)];
    }
  }
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long e = 2;; ++e) {
      BigInt root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e)) {
        std::map<BigInt, unsigned> base;
        factor_recursive(root, base);
        for (const auto& [p, a] : base) out[p] += a * static_cast<unsigned>(e);
        return;
      }
    }
  }
  for (unsigned long c = 1;; ++c) {
    BigInt d = pollard_brent(n, c);
    if (d > 1 && d < n) {
      factor_recursive(d, out);
      factor_recursive(n / d, out);
      return;
    }
  }
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].exponent == 0) throw DomainError("zero exponent in factorization");
    if (factors_[i].prime < 2) throw DomainError("prime < 2 in factorization");
    if (i > 0 && factors_[i - 1].prime >= factors_[i].prime) {
      throw DomainError("factorization primes not strictly increasing");
    }
  }
}

BigInt Factorization::value() const {
  BigInt v = 1;
  for (const auto& f : factors_) v *= pow_ui(f.prime, f.exponent);
  return v;
}

std::string Factorization::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " * ";
    os << factors_[i].prime.get_str() << '^' << factors_[i].exponent;
  }
  return os.str();
}

Factorization factorize(std::uint64_t n, const PrimeTable& table) {
  if (n == 0) throw DomainError("factorize requires n >= 1");
  std::vector<PrimePower> out;
  std::uint64_t rem = n;
  for (std::uint64_t p : table.primes()) {
    if (p > rem / p) break;
    if (rem % p == 0) {
      unsigned e = 0;
      do {
        rem /= p;
        ++e;
      } while (rem % p == 0);
      out.push_back({BigInt(static_cast<unsigned long>(p)), e});
    }
  }
  if (rem > 1) {
    const std::uint64_t limit = table.limit();
    if (limit > 0 && rem / limit <= limit) {
      out.push_back({BigInt(static_cast<unsigned long>(rem)), 1});
    } else {
      std::map<BigInt, unsigned> extra;
      factor_recursive(BigInt(static_cast<unsigned long>(rem)), extra);
      for (auto& [p, a] : extra) out.push_back({p, a});
      std::sort(out.begin(), out.end(),
                [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    }
  }
  return Factorization{std::move(out)};
}

Factorization factorize(const BigInt& n, const PrimeTable& table) {
  if (n <= 0) throw DomainError("factorize requires n >= 1");
  if (n.fits_ulong_p()) return factorize(static_cast<std::uint64_t>(n.get_ui()), table);

  std::vector<PrimePower> out;
  BigInt rem = n;
  for (std::uint64_t p : table.primes()) {
    BigInt bp(static_cast<unsigned long>(p));
    if (bp * bp > rem) break;
    if (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(rem.get_mpz_t(), p));
      out.push_back({std::move(bp), e});
    }
    if (rem.fits_ulong_p()) {
      // Finish on the fast path; factors found so far are below anything left.
      auto tail = factorize(static_cast<std::uint64_t>(rem.get_ui()), table);
      for (const auto& f : tail.factors()) out.push_back(f);
      return Factorization{std::move(out)};
    }
  }
  if (rem > 1) {
    BigInt limit(static_cast<unsigned long>(table.limit()));
    if (rem <= limit * limit) {
      out.push_back({rem, 1});  // no prime factor <= limit, so rem is prime
    } else {
      std::map<BigInt, unsigned> extra;
      factor_recursive(rem, extra);
      for (auto& [p, a] : extra) out.push_back({p, a});
      std::sort(out.begin(), out.end(),
                [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    }
  }
  return Factorization{std::move(out)};
}

BigInt divisor_sigma(const Factorization& n) {
  BigInt sigma = 1;
  for (const auto& f : n.factors()) {
    BigInt t = pow_ui(f.prime, f.exponent + 1) - 1;
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), BigInt(f.prime - 1).get_mpz_t());
    sigma *= t;
  }
  return sigma;
}

BigInt euler_phi(const Factorization& n) {
  BigInt phi = 1;
  for (const auto& f : n.factors()) {
    phi *= pow_ui(f.prime, f.exponent - 1) * (f.prime - 1);
  }
  return phi;
}

Ratio abundancy(const Factorization& n) { return make_ratio(divisor_sigma(n), n.value()); }

Ratio phi_ratio(const Factorization& n) {
  BigInt num = 1, den = 1;
  for (const auto& f : n.factors()) {
    num *= f.prime;
    den *= f.prime - 1;
  }
  return make_ratio(std::move(num), std::move(den));
}

Factorization radical(const Factorization& n) {
  std::vector<PrimePower> out;
  out.reserve(n.omega());
  for (const auto& f : n.factors()) out.push_back({f.prime, 1});
  return Factorization{std::move(out)};
}

BigInt primorial(std::size_t k, const PrimeTable& table) {
  table.require_count(k);
  BigInt v = 1;
  for (std::size_t i = 1; i <= k; ++i) v *= static_cast<unsigned long>(table.p(i));
  return v;
}

Ratio prime_power_abundancy(const BigInt& p, unsigned exponent) {
  if (p < 2 || exponent == 0) throw DomainError("prime_power_abundancy requires p >= 2, a >= 1");
  BigInt num = pow_ui(p, exponent + 1) - 1;
  BigInt den = pow_ui(p, exponent) * (p - 1);
  return make_ratio(std::move(num), std::move(den));
}

}  // namespace robin
