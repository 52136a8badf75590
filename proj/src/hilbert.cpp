#include "frobpow/hilbert.hpp"

#include <algorithm>
#include <functional>

namespace frobpow {

namespace {

using ZPoly = std::vector<int64_t>;  // ascending integer coefficients

ZPoly z_mul_monic(const ZPoly& a, int64_t shift, int64_t sign) {
  // a(t) + sign * t^shift * a(t) helpers are folded below; kept minimal.
  ZPoly r(a.size() + size_t(shift), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i + size_t(shift)] += sign * a[i];
  return r;
}

void z_add_inplace(ZPoly& a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() < b.degree();
  });
  std::vector<Monomial> out;
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& g : out)
      if (g.divides(m)) { redundant = true; break; }
    if (!redundant) out.push_back(m);
  }
  return out;
}

// Numerator N(t) of the Hilbert series of P/M over (1-t)^n for a monomial
// ideal M, via N(M + (m)) = N(M) - t^deg(m) N(M : m).
ZPoly monomial_numerator(std::vector<Monomial> gens, int64_t& budget) {
  if (--budget < 0)
    fail_resource("hilbert_series: inclusion-exclusion budget exhausted");
  gens = minimalize(std::move(gens));
  if (gens.empty()) return ZPoly{1};
  if (gens.size() == 1) {
    if (gens[0].is_one()) return ZPoly{};
    ZPoly r(size_t(gens[0].degree()) + 1, 0);
    r[0] = 1;
    r[size_t(gens[0].degree())] -= 1;
    return r;
  }
  Monomial pivot = gens.back();
  gens.pop_back();
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const Monomial& g : gens) quotient.push_back(g / g.gcd(pivot));
  ZPoly without = monomial_numerator(std::move(gens), budget);
  ZPoly colon_part = monomial_numerator(std::move(quotient), budget);
  ZPoly shifted = z_mul_monic(colon_part, pivot.degree(), -1);
  z_add_inplace(without, shifted);
  return without;
}

}  // namespace

std::string HilbertSeries::str() const {
  std::string h;
  for (size_t i = 0; i < numerator.size(); ++i) {
    if (numerator[i] == 0) continue;
    if (!h.empty() && numerator[i] > 0) h += "+";
    if (i == 0) {
      h += std::to_string(numerator[i]);
    } else {
      if (numerator[i] == -1) h += "-";
      else if (numerator[i] != 1) h += std::to_string(numerator[i]) + "*";
      h += i == 1 ? "t" : "t^" + std::to_string(i);
    }
  }
  if (h.empty()) h = "0";
  return "(" + h + ")/(1-t)^" + std::to_string(dim);
}

HilbertSeries hilbert_series(const Ideal& I) {
  for (const Poly& f : I.gens())
    if (!f.is_homogeneous())
      fail_validate("hilbert_series: non-homogeneous generator " + to_string(f));
  for (const Poly& f : I.ring()->relations)
    if (!f.is_homogeneous())
      fail_validate("hilbert_series: non-homogeneous relation " + to_string(f));

  const auto& gb = I.groebner();
  std::vector<Monomial> lts;
  lts.reserve(gb.size());
  for (const Poly& g : gb) lts.push_back(g.leading_monomial());

  int64_t budget = 2'000'000;
  ZPoly num = monomial_numerator(std::move(lts), budget);
  int n = int(I.ring()->nvars());
  int dim = krull_dim(I);
  if (dim < 0) return HilbertSeries{{}, 0};  // unit ideal: series 0

  // Divide exactly by (1-t)^(n-dim): the numerator of a quotient of
  // dimension dim vanishes to that order at t = 1. With N = (1-t) Q the
  // quotient coefficients are the prefix sums q_i = a_0 + ... + a_i, and
  // exactness means N(1) = 0.
  for (int k = 0; k < n - dim; ++k) {
    ZPoly quotient;
    int64_t run = 0;
    for (size_t i = 0; i < num.size(); ++i) {
      run += num[i];
      if (i + 1 < num.size()) quotient.push_back(run);
    }
    if (run != 0)
      fail_validate("hilbert_series: numerator not divisible by (1-t); "
                    "dimension bookkeeping violated");
    while (!quotient.empty() && quotient.back() == 0) quotient.pop_back();
    num = std::move(quotient);
  }

  HilbertSeries hs;
  hs.numerator = std::move(num);
  hs.dim = dim;
  return hs;
}

int64_t multiplicity(const Ideal& I) {
  HilbertSeries hs = hilbert_series(I);
  return hs.at_one();
}

int64_t multiplicity(const RingPtr& ring) {
  return multiplicity(Ideal(ring, {}));
}

int64_t count_standard_monomials(size_t nvars, const std::vector<Monomial>& lts) {
  // Finiteness: a pure power of every variable among the leading terms.
  std::vector<bool> covered(nvars, false);
  bool unit = false;
  for (const Monomial& m : lts) {
    int support = -1;
    bool pure = true;
    for (size_t i = 0; i < nvars; ++i) {
      if (m.exp[i] == 0) continue;
      if (support >= 0) { pure = false; break; }
      support = int(i);
    }
    if (!pure) continue;
    if (support < 0) unit = true;
    else covered[size_t(support)] = true;
  }
  if (unit) return 0;
  for (size_t i = 0; i < nvars; ++i)
    if (!covered[i]) return -1;

  int64_t budget = 2'000'000;
  ZPoly num = monomial_numerator(lts, budget);
  // A finite quotient has Hilbert series N/(1-t)^n equal to a polynomial;
  // its value at 1 is the dimension. Divide exactly n times.
  for (size_t k = 0; k < nvars; ++k) {
    ZPoly quotient;
    int64_t run = 0;
    for (size_t i = 0; i < num.size(); ++i) {
      run += num[i];
      if (i + 1 < num.size()) quotient.push_back(run);
    }
    if (run != 0)
      fail_validate("count_standard_monomials: series is not a polynomial");
    while (!quotient.empty() && quotient.back() == 0) quotient.pop_back();
    num = std::move(quotient);
  }
  int64_t total = 0;
  for (int64_t c : num) total += c;
  return total;
}

}  // namespace frobpow
