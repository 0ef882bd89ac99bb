#include "fpure/frobenius.hpp"

#include "fpure/errors.hpp"

namespace fpure {

void require_inside_maximal_ideal(const Ideal& I) {
  for (const Polynomial& g : I.generators())
    for (const Term& t : g.terms())
      if (t.mono.is_one())
        throw InputError("generator " + g.to_string() + " does not vanish at the origin");
}

Ideal bracket_power(const Ideal& I, unsigned e) {
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const Polynomial& g : I.generators()) gens.push_back(frobenius_image(g, e));
  return Ideal(I.ring(), std::move(gens));
}

Ideal fedder_colon(const Ideal& I, unsigned e) {
  if (I.generators().empty()) return Ideal::unit(I.ring());
  if (is_unit_ideal(I)) throw InputError("Fedder colon of the unit ideal");
  if (I.generators().size() == 1) {
    // S is a domain, so (f^q) : f = (f^{q-1}).
    const std::uint64_t q = power_of_p(I.ring()->characteristic(), e);
    return Ideal(I.ring(), {pow(I.generators().front(), q - 1)});
  }
  return colon_by_ideal(bracket_power(I, e), I);
}

FedderWitness is_fpure_at_origin(const Ideal& I, unsigned e) {
  require_inside_maximal_ideal(I);
  FedderWitness w;
  w.e = e;
  w.q = power_of_p(I.ring()->characteristic(), e);
  for (const Polynomial& g : I.generators())
    if (g.order().value_or(2) < 2) w.inside_m_squared = false;

  Ideal colon = fedder_colon(I, e);
  w.colon_generators = colon.groebner_basis();
  for (const Polynomial& g : w.colon_generators) {
    for (const Term& t : g.terms()) {
      bool below = true;
      for (std::size_t i = 0; i < I.ring()->num_vars(); ++i)
        if (t.mono[i] >= w.q) below = false;
      if (below && (!w.witness_monomial || t.mono.degree < w.witness_monomial->degree)) {
        w.fpure = true;
        w.witness = g;
        w.witness_monomial = t.mono;
      }
    }
  }
  return w;
}

ThetaValue hypersurface_theta(const Polynomial& f, unsigned e) {
  if (f.is_zero()) throw InputError("hypersurface_theta needs a nonzero polynomial");
  for (const Term& t : f.terms())
    if (t.mono.is_one()) throw InputError("hypersurface_theta needs f in the maximal ideal");
  const std::uint64_t q = power_of_p(f.ring()->characteristic(), e);
  return min_degree_below_q(truncated_power(f, q - 1, q), q);
}

Ideal gorenstein_colon_shift(const Ideal& I, const Polynomial& f, unsigned e) {
  const std::uint64_t q = power_of_p(I.ring()->characteristic(), e);
  Polynomial shift = pow(f, q - 1);
  std::vector<Polynomial> gens;
  const Ideal colon = fedder_colon(I, e);
  for (const Polynomial& g : colon.groebner_basis()) gens.push_back(shift * g);
  std::vector<Polynomial> j_gens = I.generators();
  j_gens.push_back(f);
  const Ideal bracket = bracket_power(Ideal(I.ring(), j_gens), e);
  for (const Polynomial& g : bracket.generators())
    gens.push_back(g);
  return Ideal(I.ring(), std::move(gens));
}

}  // namespace fpure
