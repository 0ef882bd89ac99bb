#include "doctest.h"

#include <algorithm>
#include <random>

#include "fpure/errors.hpp"
#include "fpure/poly.hpp"
#include "helpers.hpp"

using namespace fpure;
using fpure::testing::evaluate;
using fpure::testing::mono;
using fpure::testing::random_poly;

TEST_CASE("parsing the cone polynomial") {
  Ring R = make_ring(3, {"x", "y", "z", "w"});
  Polynomial f = parse_poly("x^2 - w^2*(y^2 + z^2)", R);
  REQUIRE(f.size() == 3);
  std::vector<std::uint32_t> coeffs;
  for (const Term& t : f.terms()) coeffs.push_back(t.coeff.residue);
  std::sort(coeffs.begin(), coeffs.end());
  CHECK(coeffs == std::vector<std::uint32_t>{1, 2, 2});
  CHECK(f == parse_poly("x^2+2*w^2*y^2+2*w^2*z^2", R));
  CHECK(f.total_degree() == 4);
  CHECK(*f.order() == 2);
}

TEST_CASE("parse errors carry positions") {
  Ring R = make_ring(5, {"x", "y"});
  CHECK_THROWS_WITH_AS(parse_poly("2x", R), "unexpected character 'x' at position 1", ParseError);
  CHECK_THROWS_WITH_AS(parse_poly("x+q", R), "unknown variable 'q' at position 2", ParseError);
  CHECK_THROWS_AS(parse_poly("(x+y", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x^", R), ParseError);
  CHECK_THROWS_AS(parse_poly("", R), ParseError);
  CHECK_THROWS_AS(parse_poly("-x", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x^99999999999", R), InputError);
  CHECK(parse_poly("12345678901234567890*x", R) == parse_poly("0*x", R));
  CHECK(parse_poly("0", R).is_zero());
  CHECK(parse_poly("(x+y)^5", R) == parse_poly("x^5+y^5", R));
}

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(make_ring(3, {"x", "x"}), InputError);
  CHECK_THROWS_AS(make_ring(3, {}), InputError);
  std::vector<std::string> many;
  for (int i = 0; i < 17; ++i) many.push_back("x" + std::to_string(i));
  CHECK_THROWS_AS(make_ring(3, many), InputError);
  many.pop_back();
  CHECK_NOTHROW(make_ring(3, many));
  CHECK_THROWS_AS(make_ring(6, {"x"}), InputError);
  CHECK_THROWS_AS(parse_monomial_order("grevlex"), InputError);
}

TEST_CASE("monomial orders") {
  Monomial xz = mono({1, 0, 1}), yy = mono({0, 2, 0}), x = mono({1, 0, 0});
  auto drl = make_ring(2, {"x", "y", "z"}, MonomialOrder::kDegRevLex);
  auto dl = make_ring(2, {"x", "y", "z"}, MonomialOrder::kDegLex);
  auto lex = make_ring(2, {"x", "y", "z"}, MonomialOrder::kLex);
  CHECK(drl->compare(yy, xz) > 0);
  CHECK(dl->compare(xz, yy) > 0);
  CHECK(lex->compare(xz, yy) > 0);
  CHECK(lex->compare(x, yy) > 0);
  CHECK(drl->compare(yy, x) > 0);
  CHECK(drl->compare(x, x) == 0);
}

TEST_CASE("rendering") {
  Ring R = make_ring(7, {"x", "y"});
  CHECK(parse_poly("3*x^2*y + y + 1", R).to_string() == "3*x^2*y + y + 1");
  CHECK(Polynomial(R).to_string() == "0");
  CHECK(parse_poly("6", R).to_string() == "6");
}

TEST_CASE("arithmetic agrees with pointwise evaluation") {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {2u, 3u, 101u}) {
    Ring R = make_ring(p, {"x", "y", "z"});
    std::uniform_int_distribution<std::uint32_t> coord(0, p - 1);
    for (int trial = 0; trial < 40; ++trial) {
      Polynomial f = random_poly(R, rng), g = random_poly(R, rng);
      for (int k = 0; k < 5; ++k) {
        std::vector<FieldElem> pt{{coord(rng)}, {coord(rng)}, {coord(rng)}};
        const PrimeField& F = R->field();
        CHECK(evaluate(f * g, pt) == F.mul(evaluate(f, pt), evaluate(g, pt)));
        CHECK(evaluate(f + g, pt) == F.add(evaluate(f, pt), evaluate(g, pt)));
        CHECK(evaluate(f - g, pt) == F.sub(evaluate(f, pt), evaluate(g, pt)));
        CHECK(evaluate(pow(f, 3), pt) == F.pow(evaluate(f, pt), 3));
      }
      CHECK(f * g == g * f);
      CHECK((f + g) * g == f * g + g * g);
      CHECK((f - f).is_zero());
    }
  }
}

TEST_CASE("multinomial coefficient of (xyz)^6 in (x^3+y^3+z^3)^6") {
  Ring R = make_ring(101, {"x", "y", "z"});
  Polynomial f = pow(parse_poly("x^3+y^3+z^3", R), 6);
  bool found = false;
  for (const Term& t : f.terms())
    if (t.mono == mono({6, 6, 6})) {
      CHECK(t.coeff.residue == 90);
      found = true;
    }
  CHECK(found);
  Ring R7 = make_ring(7, {"x", "y", "z"});
  Polynomial g = truncated_power(parse_poly("x^3+y^3+z^3", R7), 6, 7);
  CHECK(g.size() == 1);
  CHECK(g.leading_term().coeff.residue == 90 % 7);
}

TEST_CASE("Frobenius image equals the q-th power") {
  std::mt19937_64 rng(2);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Ring R = make_ring(p, {"x", "y"});
    for (int trial = 0; trial < 10; ++trial) {
      Polynomial f = random_poly(R, rng, 4, 3);
      CHECK(frobenius_image(f, 1) == pow(f, p));
      CHECK(frobenius_image(f, 2) == pow(f, p * p));
    }
  }
}

TEST_CASE("truncated powers agree across routes") {
  std::mt19937_64 rng(3);
  struct Case {
    std::uint32_t p;
    std::uint64_t q;
  };
  for (Case c : {Case{2, 4}, Case{2, 8}, Case{3, 9}, Case{5, 25}, Case{3, 27}, Case{2, 6}}) {
    Ring R = make_ring(c.p, {"x", "y", "z"});
    for (int trial = 0; trial < 6; ++trial) {
      Polynomial f = random_poly(R, rng, 4, 3);
      for (std::uint64_t t : {std::uint64_t{0}, std::uint64_t{1}, c.q - 1, c.q / 2 + 1}) {
        Polynomial direct = truncate_below(pow(f, t), c.q);
        CHECK(truncated_power(f, t, c.q) == direct);
        CHECK(truncated_power_by_squaring(f, t, c.q) == direct);
      }
    }
  }
}

TEST_CASE("min_degree_below_q") {
  Ring R = make_ring(3, {"x", "y"});
  CHECK(*min_degree_below_q(parse_poly("x^3 + x*y^2 + y^5", R), 3) == 3);
  CHECK(!min_degree_below_q(parse_poly("x^3 + y^4", R), 3));
  CHECK(*min_degree_below_q(parse_poly("1 + x", R), 3) == 0);
  CHECK(!min_degree_below_q(Polynomial(R), 3));
}

TEST_CASE("power_of_p overflow") {
  CHECK(power_of_p(2, 30) == (1u << 30));
  CHECK_THROWS_AS(power_of_p(2, 31), OverflowError);
  CHECK_THROWS_AS(power_of_p(7, 12), OverflowError);
}

TEST_CASE("remap and substitution") {
  Ring R = make_ring(5, {"x", "y", "z"});
  Ring S = make_ring(5, {"a", "b"});
  std::vector<int> target{0, kSubstituteOne, 1};
  CHECK(remap(parse_poly("x*y + y*z^2 + 3", R), S, target) == parse_poly("a + b^2 + 3", S));
}
