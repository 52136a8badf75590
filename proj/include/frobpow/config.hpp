#pragma once

#include <cstdint>

namespace frobpow {

// Process-wide resource caps. The CLI seeds these from --cap / FROBPOW_CAP;
// library defaults are generous enough for every shipped computation.
struct Config {
  // Hard cap on the total degree of any polynomial produced during a Groebner
  // basis run. 0 means adaptive: 4 * max input degree + 64, so that bracket
  // powers (whose generators legitimately have degree q) still run.
  int64_t gb_degree_cap = 0;

  // Cap on the number of standard monomials enumerated for one quotient.
  int64_t monomial_cap = 4'000'000;

  // Cap on q = p^e; larger exponents are a configuration error, not a
  // silent overflow.
  uint64_t q_cap = uint64_t(1) << 62;
};

Config& config();

int64_t effective_degree_cap(int64_t max_input_degree);

}  // namespace frobpow
