#include "doctest.h"

#include <random>
#include <vector>

#include "fpure/corpus.hpp"
#include "fpure/diffops.hpp"
#include "fpure/errors.hpp"
#include "fpure/invariants.hpp"
#include "helpers.hpp"

using namespace fpure;
using fpure::testing::mono;
using fpure::testing::random_poly;

namespace {

// Largest n such that every operator of order < n with alpha_i < q keeps the
// colon inside P, swept without any pruning box.
ThetaValue brute_theta(const Ideal& I, const Ideal& P, unsigned e) {
  const Ring& R = I.ring();
  const std::uint64_t q = power_of_p(R->characteristic(), e);
  const std::size_t n = R->num_vars();
  const Ideal colon = fedder_colon(I, e);
  std::vector<std::uint32_t> bound(n, static_cast<std::uint32_t>(q - 1));
  for (std::uint64_t d = 0; d <= n * (q - 1); ++d) {
    bool escaped = false;
    for (const Polynomial& g : colon.generators())
      for_each_index_of_degree(bound, d, [&](const Monomial& a) {
        if (!contains(P, apply_divided_power(a, g))) escaped = true;
        return !escaped;
      });
    if (escaped) return d;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("divided powers on monomials") {
  Ring R = make_ring(3, {"x", "y"});
  Polynomial f = parse_poly("x^2*y + y^2 + 1", R);
  CHECK(apply_divided_power(DividedPowerIndex{{0, 0}, 1}, f) == f);
  CHECK(apply_divided_power(DividedPowerIndex{{2, 1}, 1}, parse_poly("x^2*y", R)) ==
        Polynomial::constant(R, 1));
  CHECK(apply_divided_power(DividedPowerIndex{{1, 0}, 1}, parse_poly("x^2*y", R)) ==
        parse_poly("2*x*y", R));
  CHECK(apply_divided_power(DividedPowerIndex{{1, 0}, 1}, parse_poly("x^3", R)).is_zero());
  CHECK(apply_divided_power(DividedPowerIndex{{0, 3}, 2}, parse_poly("y^4", R)) ==
        parse_poly("y", R));
}

TEST_CASE("divided power indices are validated") {
  Ring R = make_ring(3, {"x", "y"});
  Polynomial f = parse_poly("x", R);
  CHECK_THROWS_AS(apply_divided_power(DividedPowerIndex{{3, 0}, 1}, f), InputError);
  CHECK_THROWS_AS(apply_divided_power(DividedPowerIndex{{1}, 1}, f), InputError);
  CHECK_NOTHROW(apply_divided_power(DividedPowerIndex{{8, 0}, 2}, f));
}

TEST_CASE("index enumeration is lexicographic and bounded") {
  std::vector<Monomial> seen;
  bool done = for_each_index_of_degree({1, 2}, 2, [&](const Monomial& a) {
    seen.push_back(a);
    return true;
  });
  CHECK(done);
  CHECK(seen == std::vector<Monomial>{mono({1, 1}), mono({0, 2})});
  int count = 0;
  CHECK(!for_each_index_of_degree({3, 3, 3}, 3, [&](const Monomial&) { return ++count < 2; }));
  CHECK(count == 2);
}

TEST_CASE("differential powers of m match m^n + m^[q]") {
  std::mt19937_64 rng(29);
  for (std::uint32_t p : {2u, 3u}) {
    Ring R = make_ring(p, {"x", "y", "z"});
    Ideal m = Ideal::maximal(R);
    for (unsigned e : {1u, 2u}) {
      const std::uint64_t q = power_of_p(p, e);
      for (int trial = 0; trial < 15; ++trial) {
        Polynomial f = random_poly(R, rng, 4, 5);
        for (std::uint64_t n = 1; n <= 5; ++n) {
          auto low = min_degree_below_q(f, q);
          bool expected = !low || *low >= n;
          CHECK(diff_power_member(f, m, n, e) == expected);
        }
      }
    }
  }
}

TEST_CASE("n = 1 is plain membership") {
  Ring R = make_ring(5, {"x", "y", "z"});
  Ideal P = Ideal::parse(R, {"x-y", "z"});
  CHECK(diff_power_member(parse_poly("x^2-y^2", R), P, 1, 1));
  CHECK(!diff_power_member(parse_poly("x+y", R), P, 1, 1));
}

TEST_CASE("differential powers are ideals") {
  std::mt19937_64 rng(31);
  Ring R = make_ring(3, {"x", "y", "z"});
  Ideal P = Ideal::parse(R, {"x", "y"});
  Polynomial a = parse_poly("x^2*z + x*y", R);
  Polynomial b = parse_poly("y^3 + x^2*y", R);
  REQUIRE(diff_power_member(a, P, 2, 1));
  REQUIRE(diff_power_member(b, P, 2, 1));
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial r = random_poly(R, rng, 3, 3);
    Polynomial s = random_poly(R, rng, 3, 3);
    CHECK(diff_power_member(r * a + s * b, P, 2, 1));
  }
  CHECK(diff_power_member(parse_poly("x^3", R), P, 3, 1));
}

TEST_CASE("theta at the maximal ideal agrees with theta_local") {
  for (const CorpusEntry& c : builtin_corpus()) {
    if (c.p > 3) continue;
    Ideal I = c.ideal();
    if (I.generators().empty()) continue;
    Ideal m = Ideal::maximal(I.ring());
    CHECK_MESSAGE(theta_at_prime(I, m, 1) == theta_local(I, 1), c.name);
  }
}

TEST_CASE("pruned sweep agrees with the unpruned oracle") {
  Ring R = make_ring(2, {"x", "y", "z"});
  std::vector<std::vector<std::string>> ideals = {{"x*y"}, {"x*y", "x*z", "y*z"}, {"x*y*z"}};
  for (const auto& gens : ideals) {
    Ideal I = Ideal::parse(R, gens);
    for (const Ideal& P : {Ideal::maximal(R), Ideal::parse(R, {"x", "y"})}) {
      if (!contains(P, I)) continue;
      for (unsigned e : {1u, 2u}) CHECK(theta_at_prime(I, P, e) == brute_theta(I, P, e));
    }
  }
}

TEST_CASE("a smooth hypersurface has theta q-1 at a containing prime") {
  for (std::uint32_t p : {2u, 3u}) {
    Ring R = make_ring(p, {"x", "y", "z"});
    Ideal I = Ideal::parse(R, {"x"});
    Ideal P = Ideal::parse(R, {"x", "y"});
    for (unsigned e : {1u, 2u}) {
      const std::uint64_t q = power_of_p(p, e);
      CHECK(*theta_at_prime(I, P, e) == q - 1);
      CHECK(*brute_theta(I, P, e) == q - 1);
    }
  }
}

TEST_CASE("global theta dominates local values and equals them for graded ideals") {
  Ring R = make_ring(2, {"x", "y", "z"});
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"x*y"}, {"x*y", "x*z", "y*z"}, {"x*y*z"}, {"x"}}) {
    Ideal I = Ideal::parse(R, gens);
    ThetaValue g = theta_global(I, 1);
    REQUIRE(g.has_value());
    CHECK(g == theta_local(I, 1));
    CHECK(global_fedder(I, 1));
    for (const Ideal& P : {Ideal::parse(R, {"x", "y"}), Ideal::parse(R, {"x", "z"}),
                           Ideal::parse(R, {"x"})}) {
      if (!contains(P, I)) continue;
      ThetaValue local = theta_at_prime(I, P, 1);
      REQUIRE(local.has_value());
      CHECK(*g >= *local);
    }
  }
}

TEST_CASE("theta is additive over disjoint variables") {
  Ring R = make_ring(3, {"x", "y", "z", "w"});
  ThetaValue a = theta_global(Ideal::parse(R, {"x*y"}), 1);
  ThetaValue b = theta_global(Ideal::parse(R, {"z*w"}), 1);
  ThetaValue ab = theta_global(Ideal::parse(R, {"x*y", "z*w"}), 1);
  REQUIRE(a);
  REQUIRE(b);
  REQUIRE(ab);
  CHECK(*ab == *a + *b);
}

TEST_CASE("global Fedder examples") {
  Ring R = make_ring(5, {"x", "y", "z"});
  CHECK(global_fedder(Ideal::zero(R), 1));
  CHECK(*theta_global(Ideal::zero(R), 1) == 0);
  CHECK(!global_fedder(Ideal::parse(R, {"x^3+y^3+z^3"}), 1));
  CHECK(!theta_global(Ideal::parse(R, {"x^3+y^3+z^3"}), 1).has_value());
  Ring S = make_ring(7, {"x", "y", "z"});
  CHECK(global_fedder(Ideal::parse(S, {"x^3+y^3+z^3"}), 1));
  CHECK(theta_global(Ideal::parse(S, {"x^3+y^3+z^3"}), 1) == theta_local(Ideal::parse(S, {"x^3+y^3+z^3"}), 1));
}
