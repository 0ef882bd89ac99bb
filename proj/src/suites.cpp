#include "fpure/suites.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "fpure/diffops.hpp"
#include "fpure/errors.hpp"
#include "fpure/experiments.hpp"
#include "fpure/invariants.hpp"

namespace fpure {
namespace {

std::string show(const ThetaValue& t) { return t ? std::to_string(*t) : "NOT_FPURE"; }

std::string level_label(const std::string& name, unsigned e) {
  return name + " e=" + std::to_string(e);
}

CaseResult from_verdict(const std::string& label, const VerdictRecord& v) {
  std::ostringstream os;
  for (const auto& [k, val] : v.values) os << k << "=" << val << " ";
  if (!v.message.empty()) os << "(" << v.message << ")";
  return {label, v.precondition_ok && v.passed, os.str()};
}

/// Ideal m^n + m^[q] in `ring`.
Ideal power_plus_bracket(const Ring& ring, std::uint64_t n, std::uint64_t q) {
  std::vector<Polynomial> gens;
  const std::size_t k = ring->num_vars();
  std::vector<std::uint32_t> box(k, static_cast<std::uint32_t>(n));
  for_each_index_of_degree(box, n, [&](const Monomial& m) {
    gens.push_back(Polynomial::monomial(ring, m, ring->field().one()));
    return true;
  });
  for (std::size_t i = 0; i < k; ++i) {
    Monomial m;
    m.set(i, static_cast<std::uint32_t>(q));
    gens.push_back(Polynomial::monomial(ring, m, ring->field().one()));
  }
  return Ideal(ring, std::move(gens));
}

}  // namespace

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.passed; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"main-formula", "scaling",    "semicontinuity",
                                                 "tensor",       "hyperplane", "perturbation",
                                                 "diffpow"};
  return names;
}

SuiteResult run_suite(const std::string& name, const std::vector<CorpusEntry>& corpus,
                      unsigned jobs) {
  if (name == "main-formula") return run_main_formula_suite(corpus, {1, 2});
  if (name == "scaling") return run_scaling_suite(corpus, 2);
  if (name == "semicontinuity") return run_semicontinuity_suite(corpus, {1, 2}, jobs);
  if (name == "tensor") return run_tensor_suite({1, 2});
  if (name == "hyperplane") return run_hyperplane_suite({1, 2});
  if (name == "perturbation") return run_perturbation_suite({1, 2});
  if (name == "diffpow") return run_diffpow_suite();
  throw InputError("unknown suite '" + name + "'");
}

SuiteResult run_main_formula_suite(const std::vector<CorpusEntry>& corpus,
                                   const std::vector<unsigned>& levels) {
  SuiteResult out{"main-formula", {}};
  for (const CorpusEntry& c : corpus) {
    Ideal I = c.ideal();
    for (unsigned e : levels) {
      CaseResult r{level_label(c.name, e), false, ""};
      try {
        MainFormulaResult m = main_formula_check(I, e);
        r.passed = m.holds;
        r.detail = "loewy=" + std::to_string(m.loewy) + " theta=" + std::to_string(m.theta) +
                   " n(q-1)+1=" + std::to_string(m.expected);
      } catch (const NotFpureError&) {
        r.detail = "not F-pure";
      }
      out.cases.push_back(r);
    }
  }
  return out;
}

SuiteResult run_scaling_suite(const std::vector<CorpusEntry>& corpus, unsigned e_max) {
  SuiteResult out{"scaling", {}};
  for (const CorpusEntry& c : corpus) {
    Ideal I = c.ideal();
    const std::uint64_t p = c.p;
    ThetaValue prev_theta;
    std::uint64_t prev_b = 0;
    for (unsigned e = 1; e <= e_max; ++e) {
      ThetaValue theta = theta_local(I, e);
      const std::uint64_t q = power_of_p(c.p, e);
      std::uint64_t b = loewy_length(splitting_ideal_pullback(I, e), q) - 1;
      if (e > 1) {
        const std::string label = level_label(c.name, e);
        const std::uint64_t n = c.vars.size();
        const bool known = theta && prev_theta;
        const std::string thetas = "theta " + show(prev_theta) + " -> " + show(theta);
        out.cases.push_back({label + " b' >= p*b", b >= p * prev_b,
                             "b " + std::to_string(prev_b) + " -> " + std::to_string(b)});
        out.cases.push_back({label + " theta' <= p*theta + n(p-1)",
                             known && *theta <= p * *prev_theta + n * (p - 1), thetas});
        out.cases.push_back(
            {label + " theta' <= p*theta", known && *theta <= p * *prev_theta, thetas});
      }
      prev_theta = theta;
      prev_b = b;
    }
  }
  return out;
}

SuiteResult run_semicontinuity_suite(const std::vector<CorpusEntry>& corpus,
                                     const std::vector<unsigned>& levels, unsigned jobs) {
  SuiteResult out{"semicontinuity", {}};
  for (const CorpusEntry& c : corpus) {
    if (!c.monomial) continue;
    Ideal I = c.ideal();
    std::vector<StratumRecord> strata = stratify_monomial(I, levels, jobs);
    auto bad = semicontinuity_violations(strata);
    CaseResult mono{c.name + " monotone", bad.empty(),
                    std::to_string(strata.size()) + " strata, " + std::to_string(bad.size()) +
                        " violations"};
    out.cases.push_back(mono);

    std::size_t disagreements = 0;
    for (const StratumRecord& s : strata)
      for (const StratumLevel& l : s.levels)
        if (l.theta != l.local_theta) ++disagreements;
    out.cases.push_back({c.name + " localized agrees", disagreements == 0,
                         std::to_string(disagreements) + " disagreements"});

    for (std::size_t k = 0; k < levels.size(); ++k) {
      ThetaValue best;
      for (const StratumRecord& s : strata) {
        const ThetaValue& t = s.levels[k].theta;
        if (t && (!best || *t > *best)) best = t;
      }
      ThetaValue global = theta_global(I, levels[k]);
      out.cases.push_back({level_label(c.name, levels[k]) + " global = max over strata",
                           global == best,
                           "theta_global=" + show(global) + " max=" + show(best)});
    }
  }
  return out;
}

SuiteResult run_tensor_suite(const std::vector<unsigned>& levels) {
  struct Pair {
    std::uint32_t p;
    std::vector<std::string> va, ga, vb, gb;
  };
  const std::vector<Pair> pairs = {
      {3, {"x", "y"}, {"x*y"}, {"u", "v"}, {"u*v"}},
      {3, {"x", "y", "z", "w"}, {"x^2-w^2*(y^2+z^2)"}, {"u"}, {}},
      {7, {"x", "y", "z"}, {"x^3+y^3+z^3"}, {"u", "v"}, {"u*v"}},
      {2, {"x", "y", "z"}, {"x*y", "x*z", "y*z"}, {"u", "v"}, {"u*v"}},
      {3, {"x", "y"}, {"x^2+y^2"}, {"u", "v", "s"}, {"u*v*s"}},
  };
  SuiteResult out{"tensor", {}};
  for (const Pair& pr : pairs) {
    Ideal a = Ideal::parse(make_ring(pr.p, pr.va), pr.ga);
    Ideal b = Ideal::parse(make_ring(pr.p, pr.vb), pr.gb);
    for (unsigned e : levels)
      out.cases.push_back(
          from_verdict(level_label(a.to_string() + " (x) " + b.to_string() + " p=" +
                                       std::to_string(pr.p), e),
                       tensor_check(a, b, e)));
  }
  return out;
}

SuiteResult run_hyperplane_suite(const std::vector<unsigned>& levels) {
  struct Case {
    std::uint32_t p;
    std::vector<std::string> vars, gens;
    std::string f;
  };
  const std::vector<Case> cases = {
      {7, {"x", "y", "z"}, {}, "x^3+y^3+z^3"},
      {3, {"x", "y"}, {}, "x"},
      {3, {"x", "y", "z", "w"}, {"x^2-y*z"}, "w"},
      {3, {"x", "y", "z"}, {"x*y"}, "z"},
      {2, {"x", "y", "z", "w"}, {"x*y"}, "z*w"},
  };
  SuiteResult out{"hyperplane", {}};
  for (const Case& c : cases) {
    Ring ring = make_ring(c.p, c.vars);
    Ideal I = Ideal::parse(ring, c.gens);
    Polynomial f = parse_poly(c.f, ring);
    for (unsigned e : levels) {
      VerdictRecord v = hyperplane_check(I, f, e);
      CaseResult r = from_verdict(
          level_label(I.to_string() + " + (" + f.to_string() + ") p=" + std::to_string(c.p), e), v);
      // Equality is forced when I = (0): Theta((f)) = (q-1) ord(f) for these f.
      if (c.gens.empty() && !v.equality) r.passed = false;
      r.detail += v.equality ? " [equality]" : " [strict]";
      out.cases.push_back(r);
    }
  }
  return out;
}

SuiteResult run_perturbation_suite(const std::vector<unsigned>& levels) {
  using Builder = std::function<Polynomial(const Ring&, std::uint64_t)>;
  auto var = [](const Ring& r, const char* name) {
    return Polynomial::variable(r, *r->index_of(name));
  };
  struct Case {
    std::uint32_t p;
    std::vector<std::string> vars, gens;
    std::string f;
    Builder h;
  };
  const std::vector<Case> cases = {
      {3, {"x", "y", "z", "w"}, {}, "x^2-w^2*(y^2+z^2)",
       [&](const Ring& r, std::uint64_t q) { return pow(var(r, "x"), 2 * q); }},
      {3, {"x", "y"}, {}, "x*y",
       [&](const Ring& r, std::uint64_t q) { return pow(var(r, "x"), q) * pow(var(r, "y"), q); }},
      {7, {"x", "y", "z"}, {}, "x^3+y^3+z^3",
       [&](const Ring& r, std::uint64_t q) { return pow(var(r, "x"), q) * var(r, "y"); }},
      {3, {"x", "y", "z", "w"}, {"x^2-y*z"}, "w",
       [&](const Ring& r, std::uint64_t q) {
         return pow(var(r, "w"), q) + pow(var(r, "x"), q) * var(r, "y");
       }},
      {2, {"x", "y", "z"}, {}, "x*y+z^2",
       [&](const Ring& r, std::uint64_t q) {
         return pow(var(r, "z"), 2 * q) + pow(var(r, "y"), q) * var(r, "z");
       }},
  };
  SuiteResult out{"perturbation", {}};
  for (const Case& c : cases) {
    Ring ring = make_ring(c.p, c.vars);
    Ideal I = Ideal::parse(ring, c.gens);
    Polynomial f = parse_poly(c.f, ring);
    for (unsigned e : levels) {
      Polynomial h = c.h(ring, power_of_p(c.p, e));
      out.cases.push_back(from_verdict(
          level_label(I.to_string() + " + (" + c.f + ") + " + h.to_string() + " p=" +
                          std::to_string(c.p),
                      e),
          perturbation_check(I, {f}, {h}, e)));
    }
  }
  return out;
}

SuiteResult run_diffpow_suite(std::size_t random_samples) {
  SuiteResult out{"diffpow", {}};
  struct Level {
    std::uint32_t p;
    unsigned e;
  };
  const std::vector<Level> levels = {{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}};
  std::mt19937_64 rng(20240611);
  for (const Level& lv : levels) {
    Ring ring = make_ring(lv.p, {"x", "y", "z"});
    const std::uint64_t q = power_of_p(lv.p, lv.e);
    std::vector<Polynomial> sample;
    for (std::uint64_t d = 0; d <= 6; ++d)
      for_each_index_of_degree({6, 6, 6}, d, [&](const Monomial& m) {
        sample.push_back(Polynomial::monomial(ring, m, ring->field().one()));
        return true;
      });
    std::uniform_int_distribution<int> nterms(1, 6), expo(0, 10), coeff(1, 1000);
    for (std::size_t k = 0; k < random_samples; ++k) {
      std::vector<Term> terms;
      for (int t = nterms(rng); t > 0; --t) {
        Monomial m;
        for (std::size_t i = 0; i < 3; ++i) m.set(i, static_cast<std::uint32_t>(expo(rng)));
        terms.push_back({m, ring->field().make(coeff(rng))});
      }
      sample.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    Ideal m = Ideal::maximal(ring);
    for (std::uint64_t n = 1; n <= 6; ++n) {
      Ideal target = power_plus_bracket(ring, n, q);
      std::size_t mismatches = 0;
      std::string first;
      for (const Polynomial& f : sample) {
        bool a = diff_power_member(f, m, n, lv.e);
        bool b = contains(target, f);
        if (a != b) {
          if (!mismatches) first = f.to_string();
          ++mismatches;
        }
      }
      out.cases.push_back({"q=" + std::to_string(q) + " n=" + std::to_string(n),
                           mismatches == 0,
                           std::to_string(sample.size()) + " polynomials, " +
                               std::to_string(mismatches) + " mismatches" +
                               (first.empty() ? "" : ", e.g. " + first)});
    }
  }
  return out;
}

}  // namespace fpure
