#include <cassert>
#include <iostream>
#include "robin/factor.hpp"
#include "robin/numerics.hpp"
using namespace robin;
int main() {
  PrimeTable t(1000);
  auto f = factorize(std::uint64_t{5040}, t);
  std::cout << f.to_string() << " sigma=" << divisor_sigma(f).get_str() << "\n";
  assert(divisor_sigma(f) == 19344);
  assert(abundancy(f) == make_ratio(403, 105));
  auto g = gamma_enclosure(128);
  std::cout << "gamma=[" << g.lower_string(25) << ", " << g.upper_string(25) << "]\n";
  auto ll = log_log_enclosure(std::uint64_t{5040}, 128);
  std::cout << "loglog5040=[" << ll.lower_string(25) << ", " << ll.upper_string(25) << "]\n";
  auto sep = separate(as_interval_fn(make_ratio(3,2)),
                      [](mpfr_prec_t p){ return exp_gamma_enclosure(p) * log_log_enclosure(std::uint64_t{4}, p); }, 4096);
  std::cout << "3/2 vs eg*ll4: " << to_string(sep.order) << " @" << sep.precision_used << "\n";
  assert(sep.order == Ordering3::Greater);
  return 0;
}
