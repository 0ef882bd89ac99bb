#include "fpure/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>

#include "fpure/errors.hpp"

namespace fpure {
namespace {

std::atomic<std::uint64_t> g_pair_budget{2'000'000};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& l) {
  // Both inputs are monic.
  Polynomial s = f.times_monomial(l / f.leading_monomial(), f.ring()->field().one());
  s.sub_scaled_shift(g.ring()->field().one(), l / g.leading_monomial(), g);
  return s;
}

// Reduce against the non-redundant elements of `basis` only.
Polynomial reduce_active(const Polynomial& f, const std::vector<Polynomial>& basis,
                         const std::vector<bool>& active) {
  const PrimeField& field = f.ring()->field();
  Polynomial work = f;
  std::vector<Term> rest;
  while (!work.is_zero()) {
    const Term& lead = work.leading_term();
    const Polynomial* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!active[k]) continue;
      if (divides(basis[k].leading_monomial(), lead.mono)) {
        divisor = &basis[k];
        break;
      }
    }
    if (divisor) {
      FieldElem c = field.mul(lead.coeff, field.inv(divisor->leading_term().coeff));
      work.sub_scaled_shift(c, lead.mono / divisor->leading_monomial(), *divisor);
    } else {
      rest.push_back(work.pop_leading());
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(rest));
}

// Gebauer-Moeller update when h = basis.back() joins the basis.
void update_pairs(std::vector<Polynomial>& basis, std::vector<bool>& active,
                  std::vector<Pair>& pairs) {
  const std::size_t h = basis.size() - 1;
  const Monomial& lh = basis[h].leading_monomial();

  std::vector<Pair> fresh;
  for (std::size_t g = 0; g < h; ++g)
    if (active[g]) fresh.push_back({g, h, lcm(basis[g].leading_monomial(), lh)});

  // Chain criterion among the new pairs; coprime pairs are kept for now so
  // that they can still shadow others, and dropped below.
  std::vector<Pair> kept;
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    const Pair& pa = fresh[a];
    bool coprime_pair = coprime(basis[pa.i].leading_monomial(), lh);
    bool dominated = false;
    if (!coprime_pair) {
      for (std::size_t b = a + 1; b < fresh.size() && !dominated; ++b)
        if (divides(fresh[b].lcm, pa.lcm)) dominated = true;
      for (const Pair& pk : kept)
        if (!dominated && divides(pk.lcm, pa.lcm)) dominated = true;
    }
    if (!dominated) kept.push_back(pa);
  }
  std::vector<Pair> new_pairs;
  for (const Pair& pk : kept)
    if (!coprime(basis[pk.i].leading_monomial(), lh)) new_pairs.push_back(pk);

  // Old pairs made superfluous by h.
  std::vector<Pair> survivors;
  survivors.reserve(pairs.size() + new_pairs.size());
  for (const Pair& pr : pairs) {
    bool drop = divides(lh, pr.lcm) &&
                !(lcm(basis[pr.i].leading_monomial(), lh) == pr.lcm) &&
                !(lcm(basis[pr.j].leading_monomial(), lh) == pr.lcm);
    if (!drop) survivors.push_back(pr);
  }
  for (const Pair& pk : new_pairs) survivors.push_back(pk);
  pairs = std::move(survivors);

  for (std::size_t g = 0; g < h; ++g)
    if (active[g] && divides(lh, basis[g].leading_monomial())) active[g] = false;
}

}  // namespace

void set_pair_budget(std::uint64_t max_pairs) noexcept { g_pair_budget = max_pairs; }
std::uint64_t pair_budget() noexcept { return g_pair_budget; }

std::vector<Polynomial> compute_groebner_basis(const Ring& ring, std::vector<Polynomial> gens) {
  std::vector<Polynomial> basis;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  const RingContext& ctx = *ring;
  const std::uint64_t budget = pair_budget();

  auto admit = [&](Polynomial h) {
    if (h.is_zero()) return;
    basis.push_back(h.monic());
    active.push_back(true);
    update_pairs(basis, active, pairs);
  };

  // Feed generators smallest first; many inputs reduce to zero early.
  std::sort(gens.begin(), gens.end(), [&ctx](const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return !a.is_zero() && b.is_zero();
    return ctx.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (!g.ring()->same_as(ctx)) throw InputError("generator belongs to a different ring");
    admit(reduce_active(g, basis, active));
  }

  std::uint64_t processed = 0;
  while (!pairs.empty()) {
    // Normal strategy: smallest lcm first.
    auto best = std::min_element(pairs.begin(), pairs.end(), [&ctx](const Pair& a, const Pair& b) {
      return ctx.compare(a.lcm, b.lcm) < 0;
    });
    Pair pr = *best;
    *best = pairs.back();
    pairs.pop_back();
    if (++processed > budget) throw BudgetExhausted("computation budget exhausted");
    Polynomial s = s_polynomial(basis[pr.i], basis[pr.j], pr.lcm);
    admit(reduce_active(s, basis, active));
  }

  // Minimal basis, then interreduce.
  std::vector<Polynomial> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (active[k]) minimal.push_back(basis[k]);
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    Polynomial head = Polynomial::monomial(ring, minimal[k].leading_monomial(),
                                           minimal[k].leading_term().coeff);
    Polynomial tail = minimal[k] - head;
    reduced.push_back((head + reduce(tail, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&ctx](const Polynomial& a, const Polynomial& b) {
    return ctx.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return reduced;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
  std::vector<bool> active(basis.size(), true);
  return reduce_active(f, basis, active);
}

// ---------------------------------------------------------------------------

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), gens_(std::move(generators)) {
  for (const Polynomial& g : gens_)
    if (g.ring() && !g.ring()->same_as(*ring_))
      throw InputError("generator belongs to a different ring");
  std::erase_if(gens_, [](const Polynomial& g) { return g.is_zero(); });
}

Ideal Ideal::unit(Ring ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::maximal(Ring ring) {
  std::vector<std::size_t> all(ring->num_vars());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return of_variables(std::move(ring), all);
}

Ideal Ideal::of_variables(Ring ring, const std::vector<std::size_t>& vars) {
  std::vector<Polynomial> gens;
  for (std::size_t v : vars) gens.push_back(Polynomial::variable(ring, v));
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::parse(Ring ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  for (const std::string& g : generators) gens.push_back(parse_poly(g, ring));
  return Ideal(std::move(ring), std::move(gens));
}

const std::vector<Polynomial>& Ideal::groebner_basis() const& { return groebner_basis_ref(); }

const std::vector<Polynomial>& Ideal::groebner_basis_ref() const {
  std::call_once(cache_->once, [this] {
    cache_->basis = compute_groebner_basis(ring_, gens_);
    cache_->ready = true;
  });
  return cache_->basis;
}

bool Ideal::has_cached_basis() const noexcept { return cache_->ready; }

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].to_string();
  }
  os << ')';
  return os.str();
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  return reduce(f, I.groebner_basis());
}

bool contains(const Ideal& I, const Polynomial& f) { return normal_form(f, I).is_zero(); }

bool contains(const Ideal& I, const Ideal& J) {
  for (const Polynomial& g : J.generators())
    if (!contains(I, g)) return false;
  return true;
}

bool same_ideal(const Ideal& I, const Ideal& J) {
  const auto& a = I.groebner_basis();
  const auto& b = J.groebner_basis();
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k] == b[k])) return false;
  return true;
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Monomial l = lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
      if (!reduce(s_polynomial(basis[i].monic(), basis[j].monic(), l), basis).is_zero())
        return false;
    }
  return true;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> gens;
  for (const Polynomial& a : I.generators())
    for (const Polynomial& b : J.generators()) gens.push_back(a * b);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  const Ring& ring = I.ring();
  if (I.generators().empty() || J.generators().empty()) return Ideal::zero(ring);
  if (is_unit_ideal(I)) return J;
  if (is_unit_ideal(J)) return I;

  Ring tagged = ring_with_tag(ring);
  std::vector<int> up(ring->num_vars());
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = static_cast<int>(i + 1);
  Polynomial t = Polynomial::variable(tagged, 0);
  Polynomial one_minus_t = Polynomial::constant(tagged, 1) - t;

  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.groebner_basis()) gens.push_back(t * remap(g, tagged, up));
  for (const Polynomial& h : J.groebner_basis()) gens.push_back(one_minus_t * remap(h, tagged, up));
  std::vector<Polynomial> basis = compute_groebner_basis(tagged, std::move(gens));

  std::vector<int> down(tagged->num_vars());
  down[0] = kSubstituteOne;
  for (std::size_t i = 1; i < down.size(); ++i) down[i] = static_cast<int>(i - 1);
  std::vector<Polynomial> out;
  for (const Polynomial& g : basis)
    if (g.leading_monomial()[0] == 0) out.push_back(remap(g, ring, down));
  return Ideal(ring, std::move(out));
}

Polynomial exact_divide(const Polynomial& g, const Polynomial& f) {
  if (f.is_zero()) throw MathError("division by zero polynomial");
  const PrimeField& field = f.ring()->field();
  const FieldElem inv_lead = field.inv(f.leading_term().coeff);
  Polynomial rem = g;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lead = rem.leading_term();
    if (!divides(f.leading_monomial(), lead.mono))
      throw Error("internal error: inexact division in colon computation");
    Term qt{lead.mono / f.leading_monomial(), field.mul(lead.coeff, inv_lead)};
    rem.sub_scaled_shift(qt.coeff, qt.mono, f);
    quotient.push_back(qt);
  }
  return Polynomial::from_terms(g.ring(), std::move(quotient));
}

Ideal colon_by_element(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw InputError("colon by the zero polynomial");
  const Ring& ring = I.ring();
  if (f.is_constant()) return I;
  if (contains(I, f)) return Ideal::unit(ring);
  Ideal both = ideal_intersection(I, Ideal(ring, {f}));
  std::vector<Polynomial> gens;
  for (const Polynomial& g : both.groebner_basis()) gens.push_back(exact_divide(g, f));
  return Ideal(ring, std::move(gens));
}

Ideal colon_by_ideal(const Ideal& I, const Ideal& J) {
  if (J.generators().empty()) throw InputError("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const Polynomial& g : J.generators()) {
    Ideal part = colon_by_element(I, g);
    acc = acc ? ideal_intersection(*acc, part) : part;
  }
  return *acc;
}

bool is_unit_ideal(const Ideal& I) {
  for (const Polynomial& g : I.generators())
    if (!g.is_zero() && g.is_constant()) return true;
  const auto& basis = I.groebner_basis();
  return basis.size() == 1 && basis.front().is_constant();
}

std::size_t krull_dimension(const Ideal& I) {
  if (is_unit_ideal(I)) throw MathError("empty variety");
  const std::size_t n = I.ring()->num_vars();
  std::vector<std::uint32_t> supports;
  for (const Polynomial& g : I.groebner_basis()) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.leading_monomial()[i]) mask |= 1u << i;
    supports.push_back(mask);
  }
  std::size_t best = 0;
  for (std::uint32_t u = 0; u < (1u << n); ++u) {
    auto size = static_cast<std::size_t>(std::popcount(u));
    if (size <= best) continue;
    bool independent = std::all_of(supports.begin(), supports.end(),
                                   [u](std::uint32_t s) { return (s & ~u) != 0; });
    if (independent) best = size;
  }
  return best;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  if (r > ~std::uint64_t{0}) throw OverflowError("colength exceeds 64 bits");
  return static_cast<std::uint64_t>(r);
}

void minimize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree < b.degree; });
  std::vector<Monomial> out;
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& k : out)
      if (divides(k, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  gens = std::move(out);
}

// Standard monomials in variables [0, k); the generators are finite-colength.
std::uint64_t count_slices(std::vector<Monomial> gens, std::size_t k) {
  minimize(gens);
  for (const Monomial& m : gens)
    if (m.is_one()) return 0;
  if (k == 0) return 1;
  const std::size_t v = k - 1;
  std::uint32_t pure = 0;
  bool have_pure = false;
  std::vector<std::uint32_t> breaks{0};
  for (const Monomial& m : gens) {
    if (m.exp[v] > 0) breaks.push_back(m.exp[v]);
    if (m.degree == m.exp[v] && (!have_pure || m.exp[v] < pure)) {
      pure = m.exp[v];
      have_pure = true;
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < breaks.size() && breaks[s] < pure; ++s) {
    std::uint32_t lo = breaks[s];
    std::uint32_t hi = s + 1 < breaks.size() ? std::min(breaks[s + 1], pure) : pure;
    std::vector<Monomial> slice;
    for (const Monomial& m : gens) {
      if (m.exp[v] > lo) continue;
      Monomial r = m;
      r.set(v, 0);
      slice.push_back(r);
    }
    total += checked_mul(hi - lo, count_slices(std::move(slice), v));
  }
  return total;
}

}  // namespace

std::optional<std::uint64_t> count_standard_monomials(std::vector<Monomial> leading,
                                                      std::size_t num_vars) {
  for (const Monomial& m : leading)
    if (m.is_one()) return 0;
  for (std::size_t v = 0; v < num_vars; ++v) {
    bool has_pure = std::any_of(leading.begin(), leading.end(), [v](const Monomial& m) {
      return m.exp[v] > 0 && m.degree == m.exp[v];
    });
    if (!has_pure) return std::nullopt;
  }
  return count_slices(std::move(leading), num_vars);
}

std::optional<std::uint64_t> colength(const Ideal& I) {
  std::vector<Monomial> leading;
  for (const Polynomial& g : I.groebner_basis()) leading.push_back(g.leading_monomial());
  return count_standard_monomials(std::move(leading), I.ring()->num_vars());
}

}  // namespace fpure
