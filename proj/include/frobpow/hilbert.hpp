#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobpow/ideal.hpp"

namespace frobpow {

// Hilbert series of the graded quotient A/I written as h(t) / (1-t)^dim
// with h(1) != 0; multiplicity is h(1). Requires homogeneous generators and
// relations.
struct HilbertSeries {
  std::vector<int64_t> numerator;  // h(t), ascending coefficients
  int dim = 0;

  int64_t at_one() const {
    int64_t s = 0;
    for (int64_t c : numerator) s += c;
    return s;
  }
  std::string str() const;
};

HilbertSeries hilbert_series(const Ideal& I);
int64_t multiplicity(const Ideal& I);
int64_t multiplicity(const RingPtr& ring);  // e(A) at the irrelevant maximal ideal

// dim_k of P/(monomial ideal) when finite, counted through the numerator of
// the Hilbert series rather than by enumeration; -1 when infinite.
int64_t count_standard_monomials(size_t nvars, const std::vector<Monomial>& lts);

}  // namespace frobpow
