#include "robin/transforms.hpp"

#include <algorithm>
#include <functional>

#include "robin/detail/parallel.hpp"
#include "robin/errors.hpp"
#include "robin/sieve.hpp"

namespace robin {

namespace {

Rel rel_of_cmp(int cmp) {
  if (cmp < 0) return Rel::Less;
  if (cmp > 0) return Rel::Greater;
  return Rel::Equal;
}

bool sa_record_beats(std::uint64_t sigma_new, std::uint64_t n_new, std::uint64_t sigma_best,
                     std::uint64_t n_best) {
  // s(new) > s(best) via cross multiplication, overflow-safe in 128 bits.
  return static_cast<unsigned __int128>(sigma_new) * n_best >
         static_cast<unsigned __int128>(sigma_best) * n_new;
}

std::uint64_t sigma_u64(const std::vector<std::pair<std::uint64_t, unsigned>>& factors) {
  std::uint64_t sigma = 1;
  for (const auto& [p, e] : factors) {
    std::uint64_t pe = 1, sum = 1;
    for (unsigned i = 0; i < e; ++i) {
      pe *= p;
      sum += pe;
    }
    sigma *= sum;
  }
  return sigma;
}

}  // namespace

const char* to_string(Rel r) {
  switch (r) {
    case Rel::Less: return "less";
    case Rel::Equal: return "equal";
    case Rel::Greater: return "greater";
  }
  return "equal";
}

SwapOutcome swap_multiplicities(const Factorization& n, const BigInt& p, const BigInt& q) {
  if (p >= q) throw DomainError("swap_multiplicities requires p < q");
  auto factors = n.factors();
  std::size_t ip = factors.size(), iq = factors.size();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].prime == p) ip = i;
    if (factors[i].prime == q) iq = i;
  }
  if (ip == factors.size() || iq == factors.size()) {
    throw DomainError("swap_multiplicities: both primes must divide n");
  }
  std::swap(factors[ip].exponent, factors[iq].exponent);
  Factorization transformed{std::move(factors)};

  SwapOutcome out;
  out.size_relation = rel_of_cmp(cmp(transformed.value(), n.value()));
  out.abundancy_relation = rel_of_cmp(cmp(abundancy(transformed), abundancy(n)));
  out.original = n;
  out.transformed = std::move(transformed);
  return out;
}

Factorization sort_exponents(const Factorization& n) {
  std::vector<unsigned> exps;
  exps.reserve(n.omega());
  for (const auto& f : n.factors()) exps.push_back(f.exponent);
  std::sort(exps.begin(), exps.end(), std::greater<>());
  std::vector<PrimePower> out;
  out.reserve(n.omega());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    out.push_back({n.factors()[i].prime, exps[i]});
  }
  return Factorization{std::move(out)};
}

Factorization hr_compress(const Factorization& n, const PrimeTable& table) {
  table.require_count(n.omega());
  std::vector<unsigned> exps;
  exps.reserve(n.omega());
  for (const auto& f : n.factors()) exps.push_back(f.exponent);
  std::sort(exps.begin(), exps.end(), std::greater<>());
  std::vector<PrimePower> out;
  out.reserve(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    out.push_back({BigInt(static_cast<unsigned long>(table.p(i + 1))), exps[i]});
  }
  return Factorization{std::move(out)};
}

bool is_hardy_ramanujan(const Factorization& n, const PrimeTable& table) {
  table.require_count(n.omega());
  const auto& factors = n.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].prime != static_cast<unsigned long>(table.p(i + 1))) return false;
    if (i > 0 && factors[i - 1].exponent < factors[i].exponent) return false;
  }
  return true;
}

std::optional<std::uint64_t> least_dominator(std::uint64_t n, const PrimeTable& table) {
  if (n == 0) throw DomainError("least_dominator requires n >= 1");
  if (n <= 2) return std::nullopt;  // 1 and 2 are superabundant
  const Factorization fn = factorize(n, table);
  const BigInt sigma_big = divisor_sigma(fn);
  if (!sigma_big.fits_ulong_p()) throw CapacityError("least_dominator: n too large");
  const std::uint64_t sigma_n = sigma_big.get_ui();

  const std::uint64_t chunk = 1u << 16;
  for (std::uint64_t a = 2; a < n; a += chunk) {
    const std::uint64_t b = std::min(n - 1, a + chunk - 1);
    RangeSieve sieve = RangeSieve::build(a, b, table);
    for (std::uint64_t m = a; m <= b; ++m) {
      // s(m) >= s(n)  <=>  sigma(m) * n >= sigma(n) * m
      if (static_cast<unsigned __int128>(sieve.sigma_of(m)) * n >=
          static_cast<unsigned __int128>(sigma_n) * m) {
        return m;
      }
    }
  }
  return std::nullopt;
}

std::vector<SARecord> generate_superabundant_brute(std::uint64_t limit, const PrimeTable& table,
                                                   const SAOptions& options) {
  if (limit == 0) throw DomainError("generate_superabundant requires limit >= 1");
  std::vector<SARecord> records;
  records.push_back({1, Ratio(1), true});
  if (limit == 1) return records;

  const auto chunks = detail::split_range(2, limit, options.chunk_size);
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  const std::size_t wave = static_cast<std::size_t>(threads) * 4;

  // Sieve waves of chunks concurrently; records require an ordered
  // reduction, so the record pass below is the only sequential step.
  std::uint64_t best_n = 1, best_sigma = 1;
  for (std::size_t w = 0; w < chunks.size(); w += wave) {
    const std::size_t end = std::min(chunks.size(), w + wave);
    const std::vector<detail::ChunkRange> batch(chunks.begin() + w, chunks.begin() + end);
    auto sieves = detail::map_chunks<RangeSieve>(batch, options.threads,
                                                 [&](detail::ChunkRange c) {
                                                   return RangeSieve::build(c.lo, c.hi, table);
                                                 });
    for (const auto& sieve : sieves) {
      for (std::uint64_t n = sieve.lo; n <= sieve.hi; ++n) {
        const std::uint64_t sig = sieve.sigma_of(n);
        if (sa_record_beats(sig, n, best_sigma, best_n)) {
          best_n = n;
          best_sigma = sig;
          SARecord rec;
          rec.value = n;
          rec.abundancy = make_ratio(BigInt(static_cast<unsigned long>(sig)),
                                     BigInt(static_cast<unsigned long>(n)));
          rec.is_hr = is_hardy_ramanujan(factorize(n, table), table);
          records.push_back(std::move(rec));
        }
      }
    }
  }
  return records;
}

std::vector<SARecord> generate_superabundant_hr(std::uint64_t limit, const PrimeTable& table) {
  if (limit == 0) throw DomainError("generate_superabundant requires limit >= 1");

  // Enumerate every Hardy-Ramanujan number <= limit. Records among them are
  // exactly the superabundant numbers: for any m, H(m) <= m has
  // s(H(m)) >= s(m), so a strict record over HR values beats all smaller
  // integers as well.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> hr_values;  // (value, sigma)
  hr_values.emplace_back(1, 1);

  std::vector<std::pair<std::uint64_t, unsigned>> stack;
  std::function<void(std::size_t, unsigned, std::uint64_t)> dfs =
      [&](std::size_t prime_index, unsigned max_exp, std::uint64_t value) {
        if (prime_index >= table.count()) {
          // Any further prime exceeds the table's limit; only a problem if
          // such a factor could still fit under the limit.
          if (value <= limit / table.limit()) {
            throw CapacityError("generate_superabundant_hr: PrimeTable too small for limit");
          }
          return;
        }
        const std::uint64_t p = table.p(prime_index + 1);
        if (value > limit / p) return;
        std::uint64_t v = value;
        for (unsigned e = 1; e <= max_exp; ++e) {
          if (v > limit / p) break;
          v *= p;
          stack.emplace_back(p, e);
          hr_values.emplace_back(v, sigma_u64(stack));
          dfs(prime_index + 1, e, v);
          stack.pop_back();
        }
      };
  table.require_count(1);
  dfs(0, 64, 1);

  std::sort(hr_values.begin(), hr_values.end());
  std::vector<SARecord> records;
  std::uint64_t best_n = 0, best_sigma = 0;
  for (const auto& [n, sig] : hr_values) {
    if (best_n == 0 || sa_record_beats(sig, n, best_sigma, best_n)) {
      best_n = n;
      best_sigma = sig;
      records.push_back({n,
                         make_ratio(BigInt(static_cast<unsigned long>(sig)),
                                    BigInt(static_cast<unsigned long>(n))),
                         true});
    }
  }
  return records;
}

std::vector<SARecord> generate_superabundant(std::uint64_t limit, const PrimeTable& table,
                                             const SAOptions& options) {
  if (limit <= options.brute_force_cutoff) {
    return generate_superabundant_brute(limit, table, options);
  }
  return generate_superabundant_hr(limit, table);
}

}  // namespace robin
