#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fpure/poly.hpp"

namespace fpure::testing {

inline Polynomial random_poly(const Ring& ring, std::mt19937_64& rng, int max_terms = 5,
                              std::uint32_t max_exp = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<std::uint32_t> expo(0, max_exp);
  std::uniform_int_distribution<std::int64_t> coeff(1, 1 << 20);
  std::vector<Term> terms;
  for (int t = nterms(rng); t > 0; --t) {
    Monomial m;
    for (std::size_t i = 0; i < ring->num_vars(); ++i) m.set(i, expo(rng));
    terms.push_back({m, ring->field().make(coeff(rng))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

/// Value of f at a point of F_p^n, by direct summation of terms.
inline FieldElem evaluate(const Polynomial& f, const std::vector<FieldElem>& point) {
  const PrimeField& F = f.ring()->field();
  FieldElem acc = F.zero();
  for (const Term& t : f.terms()) {
    FieldElem v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) v = F.mul(v, F.pow(point[i], t.mono[i]));
    acc = F.add(acc, v);
  }
  return acc;
}

inline Monomial mono(std::initializer_list<std::uint32_t> exps) {
  Monomial m;
  std::size_t i = 0;
  for (auto e : exps) m.set(i++, e);
  return m;
}

/// Membership of a monomial in the monomial ideal generated by `gens`.
inline bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& gens) {
  for (const Monomial& g : gens)
    if (divides(g, m)) return true;
  return false;
}

}  // namespace fpure::testing
