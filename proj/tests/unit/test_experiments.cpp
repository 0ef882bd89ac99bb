#include "doctest.h"

#include <algorithm>
#include <vector>

#include "fpure/errors.hpp"
#include "fpure/experiments.hpp"

using namespace fpure;

namespace {

Rational R_(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

const StratumRecord& find_stratum(const std::vector<StratumRecord>& strata, const VarSet& P) {
  auto it = std::find_if(strata.begin(), strata.end(),
                         [&](const StratumRecord& s) { return s.prime == P; });
  REQUIRE(it != strata.end());
  return *it;
}

Ideal monomial_example() {
  Ring R = make_ring(2, {"x1", "x2", "x3", "x4", "x5", "y"});
  return Ideal::parse(R, {"x3*y", "x1*x4*y", "x1*x5*y", "x2*x4*y", "x2*x5*y"});
}

}  // namespace

TEST_CASE("minimal primes of monomial ideals") {
  Ring R = make_ring(2, {"x", "y", "z"});
  CHECK(monomial_minimal_primes(Ideal::parse(R, {"x*y", "x*z", "y*z"})) ==
        std::vector<VarSet>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(monomial_minimal_primes(Ideal::parse(R, {"x"})) == std::vector<VarSet>{{0}});
  CHECK(monomial_minimal_primes(Ideal::zero(R)) == std::vector<VarSet>{{}});
  CHECK_THROWS_AS(monomial_minimal_primes(Ideal::parse(R, {"x+y"})), InputError);
  CHECK(monomial_minimal_primes(monomial_example()) ==
        std::vector<VarSet>{{5}, {0, 1, 2}, {2, 3, 4}});
}

TEST_CASE("localization at variables") {
  Ring R = make_ring(3, {"x", "y", "z"});
  Ideal L = localize_at_variables(Ideal::parse(R, {"x*y*z", "x^2"}), {0, 1});
  CHECK(L.ring()->num_vars() == 2);
  CHECK(same_ideal(L, Ideal::parse(L.ring(), {"x*y", "x^2"})));
}

TEST_CASE("non-radical monomial input is refused") {
  Ring R = make_ring(2, {"x", "y"});
  CHECK_THROWS_WITH_AS(stratify_monomial(Ideal::parse(R, {"x^2*y"}), {1}),
                       "not radical; F-purity fails", InputError);
}

TEST_CASE("a smooth hypersurface brackets dfpt 0 everywhere") {
  Ring R = make_ring(3, {"x", "y"});
  auto strata = stratify_monomial(Ideal::parse(R, {"x"}), {1, 2});
  CHECK(strata.size() == 2);
  for (const StratumRecord& s : strata)
    for (const StratumLevel& l : s.levels) {
      REQUIRE(l.dfpt.has_value());
      CHECK(l.dfpt->contains(R_(0)));
      CHECK(l.theta == l.local_theta);
    }
}

TEST_CASE("the node brackets dfpt 1 at the origin and 0 on a branch") {
  Ring R = make_ring(2, {"x", "y"});
  auto strata = stratify_monomial(Ideal::parse(R, {"x*y"}), {1, 2, 3});
  for (const StratumLevel& l : find_stratum(strata, {0, 1}).levels) CHECK(l.dfpt->contains(R_(1)));
  for (const StratumLevel& l : find_stratum(strata, {0}).levels) CHECK(l.dfpt->contains(R_(0)));
  CHECK(semicontinuity_violations(strata).empty());
}

TEST_CASE("maxima of dfpt and mfpt sit at different primes") {
  Ideal I = monomial_example();
  auto strata = stratify_monomial(I, {1, 2});
  CHECK(semicontinuity_violations(strata).empty());
  const StratumRecord& p1 = find_stratum(strata, {0, 1, 2, 3, 5});
  const StratumRecord& p2 = find_stratum(strata, {0, 1, 2, 3, 4});
  CHECK(p1.edim == 5);
  CHECK(p2.edim == 4);
  for (const StratumLevel& l : p1.levels) {
    CHECK(l.theta == l.local_theta);
    CHECK(l.dfpt->contains(R_(3)));
    CHECK(l.presentation_defect->contains(R_(4)));
    CHECK(l.mfpt->contains(R_(4)));
  }
  for (const StratumLevel& l : p2.levels) {
    CHECK(l.theta == l.local_theta);
    CHECK(l.dfpt->contains(R_(2)));
    CHECK(l.presentation_defect->contains(R_(5)));
    CHECK(l.mfpt->contains(R_(4)));
  }
}

TEST_CASE("parallel stratification matches serial") {
  Ideal I = monomial_example();
  auto serial = stratify_monomial(I, {1});
  auto parallel = stratify_monomial(I, {1}, 3);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    CHECK(serial[k].prime == parallel[k].prime);
    CHECK(serial[k].levels[0].theta == parallel[k].levels[0].theta);
    CHECK(serial[k].levels[0].dfpt == parallel[k].levels[0].dfpt);
  }
}

TEST_CASE("hyperplane sections") {
  Ring R = make_ring(7, {"x", "y", "z"});
  VerdictRecord v = hyperplane_check(Ideal::zero(R), parse_poly("x^3+y^3+z^3", R), 1);
  CHECK(v.passed);
  CHECK(v.equality);
  Ring S = make_ring(3, {"x", "y", "z", "w"});
  VerdictRecord u = hyperplane_check(Ideal::parse(S, {"x^2-y*z"}), parse_poly("w", S), 1);
  CHECK(u.passed);
}

TEST_CASE("perturbations must lie deep enough") {
  Ring R = make_ring(3, {"x", "y"});
  Ideal I = Ideal::zero(R);
  std::vector<Polynomial> f{parse_poly("x*y", R)};
  VerdictRecord ok = perturbation_check(I, f, {parse_poly("x^3", R)}, 1);
  CHECK(ok.precondition_ok);
  CHECK(ok.passed);
  VerdictRecord bad = perturbation_check(I, f, {parse_poly("x^2", R)}, 1);
  CHECK(!bad.precondition_ok);
  CHECK(!bad.passed);
}

TEST_CASE("tensor additivity") {
  Ring A = make_ring(2, {"x", "y"});
  Ring B = make_ring(2, {"u", "v", "w"});
  VerdictRecord v = tensor_check(Ideal::parse(A, {"x*y"}), Ideal::parse(B, {"u*v", "v*w"}), 2);
  CHECK(v.passed);
}
