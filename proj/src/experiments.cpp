#include "fpure/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "fpure/diffops.hpp"
#include "fpure/errors.hpp"

namespace fpure {
namespace {

std::string theta_text(const ThetaValue& t) { return t ? std::to_string(*t) : "NOT_FPURE"; }

bool subset(const VarSet& a, const VarSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool by_size_then_lex(const VarSet& a, const VarSet& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

std::vector<Monomial> monomial_generators(const Ideal& I) {
  std::vector<Monomial> out;
  for (const Polynomial& g : I.groebner_basis()) {
    if (!g.is_monomial()) throw InputError("ideal is not monomial: " + g.to_string());
    out.push_back(g.leading_monomial());
  }
  return out;
}

Ideal joined(const Ideal& I, const Polynomial& f) {
  std::vector<Polynomial> gens = I.generators();
  gens.push_back(f);
  return Ideal(I.ring(), std::move(gens));
}

StratumRecord compute_stratum(const Ideal& I, const VarSet& P, const std::vector<VarSet>& minimal,
                              const std::vector<unsigned>& levels) {
  const Ring& ring = I.ring();
  StratumRecord rec;
  rec.prime = P;
  for (std::size_t v : P) rec.prime_names.push_back(ring->names()[v]);
  rec.local_dim = P.size();
  rec.height = P.size();
  for (const VarSet& m : minimal)
    if (subset(m, P)) rec.height = std::min(rec.height, m.size());

  Ideal prime = Ideal::of_variables(ring, P);
  Ideal local = localize_at_variables(I, P);

  // Minimal presentation of R_P: linear generators cut out whole variables.
  VarSet kept;
  std::vector<bool> linear(P.size(), false);
  for (const Polynomial& g : local.groebner_basis())
    if (g.total_degree() == 1)
      for (std::size_t i = 0; i < P.size(); ++i)
        if (g.leading_monomial()[i] == 1) linear[i] = true;
  for (std::size_t i = 0; i < P.size(); ++i)
    if (!linear[i]) kept.push_back(i);
  rec.edim = kept.size();
  std::optional<Ideal> presentation;
  if (!kept.empty()) {
    std::vector<Polynomial> gens;
    std::vector<int> target(P.size(), kSubstituteOne);
    Ring small = make_ring(ring->characteristic(), [&] {
      std::vector<std::string> names;
      for (std::size_t i : kept) names.push_back(rec.prime_names[i]);
      return names;
    }(), ring->order());
    for (std::size_t k = 0; k < kept.size(); ++k) target[kept[k]] = static_cast<int>(k);
    for (const Polynomial& g : local.groebner_basis()) {
      bool touches_linear = false;
      for (std::size_t i = 0; i < P.size(); ++i)
        if (linear[i] && g.leading_monomial()[i] > 0) touches_linear = true;
      if (!touches_linear) gens.push_back(remap(g, small, target));
    }
    presentation = Ideal(small, std::move(gens));
  }

  for (unsigned e : levels) {
    StratumLevel lv;
    lv.e = e;
    lv.q = power_of_p(ring->characteristic(), e);
    lv.theta = theta_at_prime(I, prime, e);
    lv.local_theta = theta_local(local, e, ThetaMethod::kGeneric);
    const std::int64_t q = static_cast<std::int64_t>(lv.q);
    if (lv.theta) {
      const std::int64_t th = static_cast<std::int64_t>(*lv.theta);
      const std::int64_t ht = static_cast<std::int64_t>(rec.height);
      const std::int64_t d = static_cast<std::int64_t>(rec.local_dim);
      lv.dfpt = Interval{Rational(th, q) - ht, Rational(th + d, q) - ht};
      lv.presentation_defect = Interval{Rational(th, q), Rational(th + d, q)};
    }
    if (presentation) {
      ThetaValue t = theta_local(*presentation, e, ThetaMethod::kGeneric);
      if (t) {
        const std::int64_t th = static_cast<std::int64_t>(*t);
        const std::int64_t d = static_cast<std::int64_t>(rec.edim);
        lv.mfpt = Interval{Rational(th, q), Rational(th + d, q)};
      }
    } else {
      lv.mfpt = Interval{Rational(0), Rational(0)};
    }
    rec.levels.push_back(lv);
  }
  return rec;
}

}  // namespace

std::vector<VarSet> monomial_minimal_primes(const Ideal& I) {
  std::vector<Monomial> gens = monomial_generators(I);
  const std::size_t n = I.ring()->num_vars();
  std::set<VarSet> covers;
  VarSet chosen;
  std::function<void(void)> rec = [&] {
    for (const Monomial& m : gens) {
      bool hit = false;
      for (std::size_t v : chosen) hit = hit || m[v] > 0;
      if (hit) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (m[v] == 0) continue;
        chosen.push_back(v);
        rec();
        chosen.pop_back();
      }
      return;
    }
    VarSet c = chosen;
    std::sort(c.begin(), c.end());
    covers.insert(c);
  };
  rec();
  std::vector<VarSet> all(covers.begin(), covers.end());
  std::sort(all.begin(), all.end(), by_size_then_lex);
  std::vector<VarSet> minimal;
  for (const VarSet& c : all) {
    bool redundant = false;
    for (const VarSet& m : minimal) redundant = redundant || subset(m, c);
    if (!redundant) minimal.push_back(c);
  }
  return minimal;
}

Ideal localize_at_variables(const Ideal& I, const VarSet& keep) {
  const Ring& ring = I.ring();
  std::vector<std::string> names;
  std::vector<int> target(ring->num_vars(), kSubstituteOne);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    names.push_back(ring->names()[keep[k]]);
    target[keep[k]] = static_cast<int>(k);
  }
  Ring small = make_ring(ring->characteristic(), names, ring->order());
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators()) gens.push_back(remap(g, small, target));
  return Ideal(small, std::move(gens));
}

std::vector<StratumRecord> stratify_monomial(const Ideal& I, const std::vector<unsigned>& levels,
                                             unsigned jobs) {
  for (const Monomial& m : monomial_generators(I))
    for (std::size_t i = 0; i < I.ring()->num_vars(); ++i)
      if (m[i] > 1) throw InputError("not radical; F-purity fails");
  const std::vector<VarSet> minimal = monomial_minimal_primes(I);
  const std::size_t n = I.ring()->num_vars();

  std::vector<VarSet> primes;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    VarSet P;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) P.push_back(i);
    for (const VarSet& m : minimal)
      if (subset(m, P)) {
        primes.push_back(P);
        break;
      }
  }
  std::sort(primes.begin(), primes.end(), by_size_then_lex);

  std::vector<StratumRecord> out(primes.size());
  I.groebner_basis();
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next++) < primes.size();) {
      try {
        out[k] = compute_stratum(I, primes[k], minimal, levels);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(primes.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> semicontinuity_violations(
    const std::vector<StratumRecord>& strata) {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t a = 0; a < strata.size(); ++a)
    for (std::size_t b = 0; b < strata.size(); ++b) {
      if (a == b || !subset(strata[a].prime, strata[b].prime)) continue;
      for (std::size_t l = 0; l < strata[a].levels.size(); ++l) {
        const ThetaValue& s = strata[a].levels[l].theta;
        const ThetaValue& t = strata[b].levels[l].theta;
        // nullopt stands for +infinity.
        bool le = !s ? !t : (!t || *s <= *t);
        if (!le) {
          bad.emplace_back(a, b);
          break;
        }
      }
    }
  return bad;
}

VerdictRecord hyperplane_check(const Ideal& I, const Polynomial& f, unsigned e) {
  VerdictRecord v;
  v.check = "hyperplane";
  v.e = e;
  const std::uint64_t q = power_of_p(I.ring()->characteristic(), e);
  auto ord = f.order();
  if (!ord || *ord == 0) {
    v.precondition_ok = false;
    v.message = "f must be a nonzero element of the maximal ideal";
    return v;
  }
  ThetaValue base = theta_local(I, e, ThetaMethod::kGeneric);
  Ideal J = joined(I, f);
  ThetaValue cut = theta_local(J, e, ThetaMethod::kGeneric);
  ThetaValue shifted;
  const Ideal shift = gorenstein_colon_shift(I, f, e);
  for (const Polynomial& g : shift.groebner_basis()) {
    auto d = min_degree_below_q(g, q);
    if (d && (!shifted || *d < *shifted)) shifted = d;
  }
  v.values = {{"q", std::to_string(q)},
              {"theta_I", theta_text(base)},
              {"theta_I_plus_f", theta_text(cut)},
              {"theta_shifted_colon", theta_text(shifted)},
              {"ord_f", std::to_string(*ord)}};
  if (!base || !cut) {
    v.precondition_ok = false;
    v.message = "S/I and S/(I+f) must both be F-pure at the origin";
    return v;
  }
  const std::uint64_t bound = *base + (q - 1) * *ord;
  v.values.emplace_back("bound", std::to_string(bound));
  v.passed = *cut >= bound;
  v.equality = *cut == bound;
  if (shifted != cut) v.message = "shifted Gorenstein colon disagrees; hypotheses likely violated";
  else if (!v.passed) v.message = "inequality fails";
  return v;
}

VerdictRecord perturbation_check(const Ideal& I, const std::vector<Polynomial>& f,
                                 const std::vector<Polynomial>& h, unsigned e) {
  VerdictRecord v;
  v.check = "perturbation";
  v.e = e;
  if (f.size() != h.size()) throw InputError("perturbation_check needs one h per f");
  const std::size_t n = I.ring()->num_vars();
  const std::uint64_t q = power_of_p(I.ring()->characteristic(), e);
  v.values.emplace_back("q", std::to_string(q));
  for (std::size_t i = 0; i < h.size(); ++i)
    for (const Term& t : h[i].terms()) {
      bool deep = t.mono.degree > n * (q - 1);
      for (std::size_t k = 0; k < n && !deep; ++k) deep = t.mono[k] >= q;
      if (!deep) {
        v.precondition_ok = false;
        v.message = "perturbation " + h[i].to_string() + " is not inside m^[q]";
        return v;
      }
    }
  v.passed = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    ThetaValue a = theta_local(joined(I, f[i]), e, ThetaMethod::kGeneric);
    ThetaValue b = theta_local(joined(I, f[i] + h[i]), e, ThetaMethod::kGeneric);
    v.values.emplace_back("theta_" + std::to_string(i), theta_text(a));
    v.values.emplace_back("theta_perturbed_" + std::to_string(i), theta_text(b));
    if (a != b) v.passed = false;
  }
  if (!v.passed) v.message = "Theta changed under perturbation";
  return v;
}

VerdictRecord tensor_check(const Ideal& I, const Ideal& J, unsigned e) {
  VerdictRecord v;
  v.check = "tensor";
  v.e = e;
  const Ring& A = I.ring();
  const Ring& B = J.ring();
  if (A->characteristic() != B->characteristic())
    throw InputError("tensor_check needs a common characteristic");
  std::vector<std::string> names = A->names();
  for (const std::string& s : B->names()) {
    if (A->index_of(s)) throw InputError("variable blocks are not disjoint: " + s);
    names.push_back(s);
  }
  Ring both = make_ring(A->characteristic(), names, A->order());
  std::vector<int> ta(A->num_vars()), tb(B->num_vars());
  for (std::size_t i = 0; i < ta.size(); ++i) ta[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < tb.size(); ++i) tb[i] = static_cast<int>(A->num_vars() + i);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators()) gens.push_back(remap(g, both, ta));
  for (const Polynomial& g : J.generators()) gens.push_back(remap(g, both, tb));
  Ideal sum(both, std::move(gens));

  ThetaValue ti = theta_local(I, e, ThetaMethod::kGeneric);
  ThetaValue tj = theta_local(J, e, ThetaMethod::kGeneric);
  ThetaValue ts = theta_local(sum, e, ThetaMethod::kGeneric);
  v.values = {{"theta_I", theta_text(ti)}, {"theta_J", theta_text(tj)}, {"theta_sum", theta_text(ts)}};
  if (!ti || !tj) {
    v.precondition_ok = false;
    v.message = "both factors must be F-pure at the origin";
    return v;
  }
  v.passed = ts && *ts == *ti + *tj;
  v.equality = v.passed;
  if (!v.passed) v.message = "Theta is not additive";
  return v;
}

}  // namespace fpure
