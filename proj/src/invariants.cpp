#include "fpure/invariants.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "fpure/diffops.hpp"
#include "fpure/errors.hpp"

namespace fpure {
namespace {

std::int64_t to_i64(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw OverflowError("value does not fit a 64-bit rational");
  return static_cast<std::int64_t>(v);
}

Interval clamp(const Interval& in, const Rational& lo, const Rational& hi, bool& clamped) {
  Interval out{std::max(in.lo, lo), std::min(in.hi, hi)};
  if (out.lo != in.lo || out.hi != in.hi) clamped = true;
  if (out.hi < out.lo) out.hi = out.lo;
  return out;
}

/// Number of degree-t monomials with exponents below q, saturating at cap + 1.
std::uint64_t count_capped(std::size_t n, std::uint64_t t, std::uint64_t q, std::uint64_t cap) {
  std::vector<std::uint64_t> ways(t + 1, 0);
  ways[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next(t + 1, 0);
    for (std::uint64_t s = 0; s <= t; ++s) {
      if (!ways[s]) continue;
      for (std::uint64_t a = 0; a < q && s + a <= t; ++a)
        next[s + a] = std::min(cap + 1, next[s + a] + ways[s]);
    }
    ways.swap(next);
  }
  return ways[t];
}

}  // namespace

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Ideal splitting_ideal_pullback(const Ideal& I, unsigned e) {
  require_inside_maximal_ideal(I);
  Ideal mq = bracket_power(Ideal::maximal(I.ring()), e);
  return colon_by_ideal(mq, fedder_colon(I, e));
}

std::uint64_t loewy_length(const Ideal& J, std::uint64_t q, std::uint64_t monomial_cap) {
  const Ring& ring = J.ring();
  const std::size_t n = ring->num_vars();
  if (is_unit_ideal(J)) return 0;
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m;
    m.set(i, static_cast<std::uint32_t>(q));
    if (!contains(J, Polynomial::monomial(ring, m, ring->field().one())))
      throw InputError("loewy_length: ideal does not contain m^[q]");
  }
  const std::vector<std::uint32_t> box(n, static_cast<std::uint32_t>(q - 1));
  auto covers = [&](std::uint64_t t) {
    if (count_capped(n, t, q, monomial_cap) > monomial_cap)
      throw BudgetExhausted("loewy_length: too many monomials of degree " + std::to_string(t));
    return for_each_index_of_degree(box, t, [&](const Monomial& m) {
      return contains(J, Polynomial::monomial(ring, m, ring->field().one()));
    });
  };
  // m^t lies in J for every t >= n(q-1)+1 because then each monomial has an exponent >= q.
  std::uint64_t lo = 1, hi = n * (q - 1) + 1;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (covers(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

ThetaValue theta_local(const Ideal& I, unsigned e, ThetaMethod method) {
  require_inside_maximal_ideal(I);
  if (method == ThetaMethod::kAuto)
    method = I.generators().size() == 1 ? ThetaMethod::kHypersurface : ThetaMethod::kGeneric;
  if (method == ThetaMethod::kHypersurface) {
    if (I.generators().size() != 1)
      throw InputError("hypersurface method needs exactly one generator");
    return hypersurface_theta(I.generators().front(), e);
  }
  const std::uint64_t q = power_of_p(I.ring()->characteristic(), e);
  ThetaValue best;
  const Ideal colon = fedder_colon(I, e);
  for (const Polynomial& g : colon.groebner_basis()) {
    auto d = min_degree_below_q(g, q);
    if (d && (!best || *d < *best)) best = d;
  }
  return best;
}

MainFormulaResult main_formula_check(const Ideal& I, unsigned e) {
  const std::uint64_t q = power_of_p(I.ring()->characteristic(), e);
  const std::size_t n = I.ring()->num_vars();
  ThetaValue theta = theta_local(I, e, ThetaMethod::kGeneric);
  if (!theta) throw NotFpureError("not F-pure at the origin");
  MainFormulaResult r;
  r.theta = *theta;
  r.loewy = loewy_length(splitting_ideal_pullback(I, e), q);
  r.expected = n * (q - 1) + 1;
  r.holds = r.loewy + r.theta == r.expected;
  return r;
}

std::size_t height_of(const Ideal& I) { return I.ring()->num_vars() - krull_dimension(I); }

InvariantReport fpt_bounds(const Ideal& I, unsigned e, const FptOptions& options) {
  require_inside_maximal_ideal(I);
  bool minimal = true;
  for (const Polynomial& g : I.generators())
    if (g.order().value_or(2) < 2) minimal = false;
  if (!minimal && options.require_minimal) throw InputError("presentation not minimal");

  InvariantReport r;
  r.e = e;
  r.q = power_of_p(I.ring()->characteristic(), e);
  r.num_vars = I.ring()->num_vars();
  ThetaValue theta = theta_local(I, e, options.method);
  if (!theta) throw NotFpureError("not F-pure at the origin");
  r.theta = *theta;
  const std::uint64_t top = r.num_vars * (r.q - 1);
  r.b_value = top - r.theta;
  r.loewy = r.b_value + 1;
  r.dim_r = krull_dimension(I);
  r.height = r.num_vars - r.dim_r;

  const std::int64_t q = to_i64(r.q), n = to_i64(r.num_vars), th = to_i64(r.theta);
  const std::int64_t b = to_i64(r.b_value), ht = to_i64(r.height);
  r.fpt = {Rational(b, q), Rational(b + n, q)};
  r.dfpt = {Rational(th, q) - ht, Rational(th + n, q) - ht};
  if (minimal) r.mfpt = Interval{Rational(th, q), Rational(th + n, q)};
  const Rational dim(to_i64(r.dim_r));
  r.fpt_feasible = clamp(r.fpt, Rational(0), dim, r.clamped);
  r.dfpt_feasible = clamp(r.dfpt, Rational(0), dim, r.clamped);
  return r;
}

std::uint64_t nu_value(const Ideal& I, const Ideal& J, unsigned e, std::uint64_t product_cap) {
  if (!I.ring()->same_as(*J.ring())) throw InputError("ideals live in different rings");
  for (const Polynomial& g : I.generators()) {
    bool found = false;
    for (unsigned k = 0; k <= 30 && !found; ++k) {
      try {
        found = contains(J, frobenius_image(g, k));
      } catch (const OverflowError&) {
        break;
      }
    }
    if (!found) throw InputError("a generator of I has no p-power inside J");
  }
  const Ideal Jq = bracket_power(J, e);
  if (is_unit_ideal(Jq)) throw InputError("nu_value: J is the unit ideal");
  const std::vector<Polynomial>& gens = I.generators();
  if (gens.empty()) throw InputError("nu_value: I is the zero ideal");

  std::uint64_t products = 0;
  // Is some t-fold product of generators outside J^[q]?
  auto escapes = [&](std::uint64_t t) {
    std::function<bool(std::size_t, std::uint64_t, const Polynomial&)> rec =
        [&](std::size_t first, std::uint64_t left, const Polynomial& acc) {
          if (left == 0) {
            if (++products > product_cap) throw BudgetExhausted("nu_value: product budget exhausted");
            return !contains(Jq, acc);
          }
          for (std::size_t k = first; k < gens.size(); ++k) {
            Polynomial next = normal_form(acc * gens[k], Jq);
            if (next.is_zero()) continue;
            if (rec(k, left - 1, next)) return true;
          }
          return false;
        };
    return rec(0, t, Polynomial::constant(I.ring(), 1));
  };
  std::uint64_t t = 0;
  while (escapes(t + 1)) ++t;
  return t;
}

std::vector<SignatureTerm> fsignature_estimate(const Ideal& I, unsigned e_max) {
  std::vector<SignatureTerm> out;
  const std::size_t dim = krull_dimension(I);
  for (unsigned e = 1; e <= e_max; ++e) {
    SignatureTerm s;
    s.e = e;
    s.q = power_of_p(I.ring()->characteristic(), e);
    s.colength = colength(splitting_ideal_pullback(I, e));
    std::int64_t denom = 1;
    for (std::size_t i = 0; i < dim; ++i) {
      if (static_cast<std::uint64_t>(denom) > std::numeric_limits<std::int64_t>::max() / s.q)
        throw OverflowError("q^dim does not fit a 64-bit rational");
      denom *= static_cast<std::int64_t>(s.q);
    }
    s.value = s.colength ? Rational(to_i64(*s.colength), denom) : Rational(0);
    out.push_back(s);
  }
  return out;
}

}  // namespace fpure
