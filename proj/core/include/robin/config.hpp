#pragma once

#include <cstdint>
#include <string>

#include <mpfr.h>

namespace robin {

// Runtime knobs shared by the CLI, the suites, and the acceptance tests.
// Precedence when assembled by the CLI: flags > ROBIN_* environment >
// config file > these defaults.
struct RunConfig {
  mpfr_prec_t precision_bits = 4096;        // adaptive comparison cap
  std::uint64_t prime_limit = 100'000'000;  // ceiling for PrimeTable construction
  std::uint64_t chunk_size = 1u << 16;
  std::string format = "text";  // text | json | csv
  std::uint64_t sweep_ceiling = 1'000'000;
  unsigned threads = 0;  // 0 = hardware concurrency

  void validate() const;
};

}  // namespace robin
