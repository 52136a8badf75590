#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "frobpow/config.hpp"
#include "frobpow/hilbert.hpp"
#include "oracles.hpp"

using namespace frobpow;
using frobpow::testing::Rng;
using frobpow::testing::brute_force_member;

namespace {

Ideal mk(const RingPtr& R, std::initializer_list<const char*> gens) {
  std::vector<Poly> ps;
  for (const char* g : gens) ps.push_back(parse_poly(g, R));
  return Ideal(R, std::move(ps));
}

std::vector<std::string> gb_strings(const Ideal& I) {
  std::vector<std::string> out;
  for (const Poly& g : I.groebner()) out.push_back(to_string(g));
  return out;
}

Poly spoly_of(const Poly& f, const Poly& g) {
  const PrimeField& F = f.ambient()->field;
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  return f.times_term(F.inv(f.leading_coeff()), l / f.leading_monomial()) -
         g.times_term(F.inv(g.leading_coeff()), l / g.leading_monomial());
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto R2 = make_ring(2, {"x", "y"});
  CHECK(gb_strings(mk(R2, {"x", "y"})) == std::vector<std::string>{"y", "x"});

  auto R7 = make_ring(7, {"x", "y", "z"});
  CHECK(gb_strings(mk(R7, {"x^3+y^3+z^3", "x", "y"})) ==
        std::vector<std::string>{"y", "x", "z^3"});

  auto R3 = make_ring(3, {"x", "y"});
  Ideal unit = mk(R3, {"x*y-1", "x^2"});
  CHECK(unit.is_unit_ideal());
  CHECK(contains(unit, Poly::constant(R3->amb, 1)));
}

TEST_CASE("normal form examples") {
  auto F7 = make_ring(7, {"x", "y", "z"}, {"x^3+y^3+z^3"});
  Ideal xy = mk(F7, {"x", "y"});
  CHECK(to_string(normal_form(parse_poly("z^2", F7), xy)) == "z^2");
  CHECK(normal_form(parse_poly("x", F7), xy).is_zero());

  auto F2 = make_ring(2, {"x", "y", "z"}, {"x^3+y^3+z^3"});
  CHECK(normal_form(parse_poly("z^4", F2), mk(F2, {"x^2", "y^2"})).is_zero());
}

TEST_CASE("every S-polynomial of a returned basis reduces to zero") {
  Rng rng(7);
  for (uint32_t p : {2u, 3u, 5u}) {
    auto R = make_ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Poly> gens;
      int n = int(rng.pick(1, 4));
      for (int i = 0; i < n; ++i) gens.push_back(rng.poly(R->amb, 3, 3));
      std::vector<Poly> gb = buchberger(R->amb, gens);
      for (size_t i = 0; i < gb.size(); ++i)
        for (size_t j = i + 1; j < gb.size(); ++j)
          CHECK(normal_form_by_basis(spoly_of(gb[i], gb[j]), gb).is_zero());
      // reduced: no term of any member divisible by another leading term
      for (size_t i = 0; i < gb.size(); ++i) {
        CHECK(gb[i].leading_coeff() == 1);
        for (size_t j = 0; j < gb.size(); ++j) {
          if (i == j) continue;
          for (const Term& t : gb[i].terms())
            CHECK(!gb[j].leading_monomial().divides(t.mono));
        }
      }
    }
  }
}

TEST_CASE("structured bracket-power bases are genuine Groebner bases") {
  // (x^49, y^49, x^3+y^3+z^3) over F_7: the reduced basis the closure
  // machinery leans on; every S-polynomial must reduce to zero.
  auto R = make_ring(7, {"x", "y", "z"});
  Ideal I = mk(R, {"x^49", "y^49", "x^3+y^3+z^3"});
  const std::vector<Poly>& gb = I.groebner();
  CHECK(gb.size() > 3);
  for (size_t i = 0; i < gb.size(); ++i)
    for (size_t j = i + 1; j < gb.size(); ++j)
      CHECK(normal_form_by_basis(spoly_of(gb[i], gb[j]), gb).is_zero());
}

TEST_CASE("intersection is sandwiched between the product and both factors") {
  Rng rng(53);
  auto R = make_ring(5, {"x", "y"});
  for (int trial = 0; trial < 8; ++trial) {
    Ideal I(R, {rng.poly(R->amb, 2, 2, false), rng.poly(R->amb, 2, 2, false)});
    Ideal J(R, {rng.poly(R->amb, 2, 2, false)});
    Ideal meet = intersect(I, J);
    CHECK(contains_ideal(I, meet));
    CHECK(contains_ideal(J, meet));
    CHECK(contains_ideal(meet, product(I, J)));
  }
}

TEST_CASE("normal form is independent of divisor order for a reduced basis") {
  Rng rng(11);
  auto R = make_ring(5, {"x", "y", "z"});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Poly> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(rng.poly(R->amb, 3, 3));
    std::vector<Poly> gb = buchberger(R->amb, gens);
    Poly f = rng.poly(R->amb, 5, 5);
    Poly r0 = normal_form_by_basis(f, gb);
    for (int shuffle = 0; shuffle < 4; ++shuffle) {
      std::vector<Poly> permuted = gb;
      std::shuffle(permuted.begin(), permuted.end(), rng.gen);
      CHECK(normal_form_by_basis(f, permuted) == r0);
    }
  }
}

TEST_CASE("membership agrees with degree-bounded linear algebra") {
  Rng rng(13);
  for (uint32_t p : {2u, 3u}) {
    auto R = make_ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Poly> gens;
      int n = int(rng.pick(1, 3));
      for (int i = 0; i < n; ++i) gens.push_back(rng.poly(R->amb, 3, 4, false));
      Ideal I(R, gens);
      Poly f = rng.poly(R->amb, 4, 4);
      bool nf_member = contains(I, f);
      bool brute = brute_force_member(f, gens, 4);
      if (brute) CHECK(nf_member);
      if (nf_member) CHECK(brute);
      // products of generators are members, as a positive control
      if (gens.size() >= 2) CHECK(contains(I, gens[0] * gens[1]));
    }
  }
}

TEST_CASE("colon examples") {
  auto F7 = make_ring(7, {"x", "y", "z"}, {"x^3+y^3+z^3"});
  CHECK(gb_strings(colon(mk(F7, {"x", "y"}), parse_poly("z^2", F7))) ==
        std::vector<std::string>{"z", "y", "x"});

  auto R3 = make_ring(3, {"x", "y"});
  Ideal I = mk(R3, {"x^2", "y^2"});
  CHECK(equal_ideals(colon(I, Poly::constant(R3->amb, 1)), I));
  CHECK(gb_strings(colon(I, parse_poly("x*y", R3))) ==
        std::vector<std::string>{"y", "x"});

  // colon by zero: the whole ring, flagged as a unit ideal, not an error
  CHECK(colon(I, Poly::zero(R3->amb)).is_unit_ideal());
  auto F2 = make_ring(2, {"u", "v"}, {"u*v"});
  CHECK(colon(mk(F2, {"u"}), parse_poly("u*v", F2)).is_unit_ideal());
}

TEST_CASE("g * (I : g) lies in I") {
  Rng rng(17);
  auto R = make_ring(3, {"x", "y"});
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Poly> gens{rng.poly(R->amb, 2, 3, false), rng.poly(R->amb, 2, 3, false)};
    Ideal I(R, gens);
    Poly g = rng.poly(R->amb, 2, 2, false);
    Ideal c = colon(I, g);
    for (const Poly& h : c.groebner()) CHECK(contains(I, h * g));
  }
}

TEST_CASE("intersection examples and idempotence") {
  auto R2 = make_ring(2, {"x", "y"});
  CHECK(gb_strings(intersect(mk(R2, {"x"}), mk(R2, {"y"}))) ==
        std::vector<std::string>{"x*y"});

  auto R3 = make_ring(3, {"x", "y", "z"});
  CHECK(gb_strings(intersect(mk(R3, {"x", "y"}), mk(R3, {"x", "z"}))) ==
        std::vector<std::string>{"x", "y*z"});

  Ideal I = mk(R3, {"x^2", "y"});
  CHECK(equal_ideals(intersect(I, I), I));
}

TEST_CASE("standard monomials") {
  auto R5 = make_ring(5, {"x", "y"});
  StandardMonomialBasis b = standard_monomials(mk(R5, {"x^2", "y^3"}));
  CHECK(b.finite);
  CHECK(b.monomials.size() == 6);

  CHECK_FALSE(standard_monomials(mk(R5, {"x"})).finite);

  b = standard_monomials(mk(R5, {"x^2", "x*y", "y^3"}));
  REQUIRE(b.finite);
  std::vector<std::string> names;
  for (const Monomial& m : b.monomials) names.push_back(to_string(m, *R5->amb));
  CHECK(names == std::vector<std::string>{"1", "y", "x", "y^2"});

  // unit ideal: empty basis, still finite
  CHECK(standard_monomials(Ideal::unit(R5)).finite);
  CHECK(standard_monomials(Ideal::unit(R5)).monomials.empty());
}

TEST_CASE("length") {
  auto R3 = make_ring(3, {"x", "y"});
  for (uint64_t q : {1ull, 3ull, 9ull, 27ull})
    CHECK(length(mk(R3, {("x^" + std::to_string(q)).c_str(),
                         ("y^" + std::to_string(q)).c_str()})) == int64_t(q * q));

  auto F7 = make_ring(7, {"x", "y", "z"}, {"x^3+y^3+z^3"});
  CHECK(length(Ideal::maximal(F7)) == 1);

  auto F2 = make_ring(2, {"x", "y", "z"}, {"x^3+y^3+z^3"});
  CHECK(length(mk(F2, {"x^2", "y^2"})) == 12);

  CHECK_THROWS_AS(length(mk(R3, {"x"})), Error);

  // length is antitone in the ideal
  Rng rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    Poly extra = rng.poly(R3->amb, 2, 3);
    Ideal I = mk(R3, {"x^3", "y^3"});
    std::vector<Poly> bigger = I.gens();
    bigger.push_back(extra);
    CHECK(length(I) >= length(Ideal(R3, bigger)));
  }
}

TEST_CASE("length agrees with explicit enumeration") {
  Rng rng(19);
  for (uint32_t p : {2u, 5u}) {
    auto R = make_ring(p, {"x", "y", "z"});
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Poly> gens{parse_poly("x", R).pow(rng.pick(1, 4)),
                             parse_poly("y", R).pow(rng.pick(1, 4)),
                             parse_poly("z", R).pow(rng.pick(1, 4)),
                             rng.poly(R->amb, 2, 3)};
      Ideal I(R, gens);
      StandardMonomialBasis b = standard_monomials(I);
      REQUIRE(b.finite);
      CHECK(length(I) == int64_t(b.monomials.size()));
    }
  }
}

TEST_CASE("krull dimension") {
  auto R3 = make_ring(3, {"x", "y"});
  CHECK(krull_dim(Ideal(R3, {})) == 2);
  auto R7 = make_ring(7, {"x", "y", "z"});
  CHECK(krull_dim(mk(R7, {"x^3+y^3+z^3"})) == 2);
  auto R2 = make_ring(2, {"u", "v"});
  CHECK(krull_dim(mk(R2, {"u*v"})) == 1);
  CHECK(krull_dim(Ideal::unit(R3)) == -1);
  auto F7 = make_ring(7, {"x", "y", "z"}, {"x^3+y^3+z^3"});
  CHECK(krull_dim(F7) == 2);
}

TEST_CASE("hilbert series and multiplicity") {
  auto T = make_ring(2, {"u", "v"}, {"u*v"});
  HilbertSeries h = hilbert_series(Ideal(T, {}));
  CHECK(h.dim == 1);
  CHECK(h.numerator == std::vector<int64_t>{1, 1});
  CHECK(multiplicity(T) == 2);

  auto R = make_ring(5, {"x", "y"});
  CHECK(multiplicity(R) == 1);

  auto F7 = make_ring(7, {"x", "y", "z"}, {"x^3+y^3+z^3"});
  HilbertSeries hf = hilbert_series(Ideal(F7, {}));
  CHECK(hf.numerator == std::vector<int64_t>{1, 1, 1});
  CHECK(multiplicity(F7) == 3);

  CHECK_THROWS_AS(hilbert_series(mk(R, {"x^2+1"})), Error);
}

TEST_CASE("socle and irreducibility") {
  auto R3 = make_ring(3, {"x", "y"});
  std::vector<Poly> s1 = socle(mk(R3, {"x^2", "y^2"}));
  REQUIRE(s1.size() == 1);
  CHECK(to_string(s1[0]) == "x*y");
  CHECK(is_irreducible(mk(R3, {"x^2", "y^2"})));

  std::vector<Poly> s2 = socle(mk(R3, {"x^2", "x*y", "y^2"}));
  CHECK(s2.size() == 2);
  CHECK_FALSE(is_irreducible(mk(R3, {"x^2", "x*y", "y^2"})));

  // not m-primary: dim A/(x) = 1 in the Fermat cubic
  auto F7 = make_ring(7, {"x", "y", "z"}, {"x^3+y^3+z^3"});
  CHECK_THROWS_AS(socle(mk(F7, {"x"})), Error);

  // Gorenstein parameter quotient in the quotient ring
  std::vector<Poly> s3 = socle(mk(F7, {"x", "y"}));
  REQUIRE(s3.size() == 1);
  CHECK(to_string(s3[0]) == "z^2");
}

TEST_CASE("parameter ideals") {
  auto F7 = make_ring(7, {"x", "y", "z"}, {"x^3+y^3+z^3"});
  CHECK(is_parameter_ideal(mk(F7, {"x", "y"})));
  auto R3 = make_ring(3, {"x", "y"});
  CHECK(is_parameter_ideal(mk(R3, {"x*y"})));
  CHECK_FALSE(is_parameter_ideal(mk(R3, {"x", "x*y"})));
}

TEST_CASE("regular sequences") {
  auto R = make_ring(2, {"u", "v"}, {"u*v"});
  CHECK(is_regular_sequence(R, {parse_poly("u+v", R)}));
  CHECK_FALSE(is_regular_sequence(R, {parse_poly("u", R)}));
  auto P = make_ring(3, {"x", "y"});
  CHECK(is_regular_sequence(P, {parse_poly("x", P), parse_poly("y", P)}));
  CHECK_FALSE(is_regular_sequence(P, {parse_poly("x", P), parse_poly("x", P)}));
}

TEST_CASE("resource caps produce explicit errors") {
  auto R = make_ring(3, {"x", "y"});
  int64_t saved_deg = config().gb_degree_cap;
  config().gb_degree_cap = 2;
  // The elimination pass creates x^2*y^2, which exceeds the tiny cap.
  CHECK_THROWS_AS(intersect(mk(R, {"x^2"}), mk(R, {"y^2"})), Error);
  config().gb_degree_cap = saved_deg;
  CHECK(gb_strings(intersect(mk(R, {"x^2"}), mk(R, {"y^2"}))) ==
        std::vector<std::string>{"x^2*y^2"});

  int64_t saved_mono = config().monomial_cap;
  config().monomial_cap = 4;
  CHECK_THROWS_AS(standard_monomials(mk(R, {"x^3", "y^3"})), Error);
  config().monomial_cap = saved_mono;
}

TEST_CASE("groebner cache is shared across copies") {
  auto R = make_ring(5, {"x", "y"});
  Ideal I = mk(R, {"x^2+y", "y^2"});
  Ideal copy = I;
  const auto& a = I.groebner();
  const auto& b = copy.groebner();
  CHECK(&a == &b);
}
