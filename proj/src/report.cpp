#include "fpure/report.hpp"

#include <algorithm>
#include <sstream>

namespace fpure {
namespace {

const char* const kFormulaTheta = "Theta_e = min degree of a monomial with exponents < q in I^[q]:I";
const char* const kFormulaLoewy = "loewy = n(q-1)+1 - Theta_e";
const char* const kFormulaB = "b = loewy - 1 = n(q-1) - Theta_e";
const char* const kFormulaFpt = "b/q <= fpt <= (b+n)/q";
const char* const kFormulaDfpt = "Theta_e/q - height <= dfpt <= (Theta_e+n)/q - height";
const char* const kFormulaMfpt = "Theta_e/q <= mfpt <= (Theta_e+n)/q";
const char* const kFormulaFeasible = "intersection with [0, dim R]";
const char* const kFormulaStratumDfpt = "Theta_P/q - height_P <= dfpt(R_P) <= (Theta_P+|P|)/q - height_P";
const char* const kFormulaStratumDefect = "Theta_P/q <= dim S_P - fpt(R_P) <= (Theta_P+|P|)/q";
const char* const kFormulaStratumMfpt = "Theta'/q <= mfpt(R_P) <= (Theta'+edim)/q, Theta' of a minimal presentation";

}  // namespace

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  return Polynomial::monomial(ring, m, ring->field().one()).to_string();
}

Json to_json(const Interval& interval) {
  return Json::array({to_string(interval.lo), to_string(interval.hi)});
}

Json to_json(const ThetaValue& theta) {
  if (theta) return *theta;
  return "NOT_FPURE";
}

Json to_json(const InvariantReport& r) {
  Json j;
  j["e"] = r.e;
  j["q"] = r.q;
  j["n"] = r.num_vars;
  j["theta"] = r.theta;
  j["loewy"] = r.loewy;
  j["b"] = r.b_value;
  j["height"] = r.height;
  j["dimR"] = r.dim_r;
  j["fpt"] = to_json(r.fpt);
  j["dfpt"] = to_json(r.dfpt);
  j["mfpt"] = r.mfpt ? to_json(*r.mfpt) : Json(nullptr);
  j["fpt_feasible"] = to_json(r.fpt_feasible);
  j["dfpt_feasible"] = to_json(r.dfpt_feasible);
  j["clamped"] = r.clamped;
  j["fpure"] = r.fpure;
  j["formulas"] = {{"theta", kFormulaTheta}, {"loewy", kFormulaLoewy}, {"b", kFormulaB},
                   {"fpt", kFormulaFpt},     {"dfpt", kFormulaDfpt},   {"mfpt", kFormulaMfpt},
                   {"feasible", kFormulaFeasible}};
  return j;
}

Json to_json(const FedderWitness& w, const Ring& ring) {
  Json j;
  j["e"] = w.e;
  j["q"] = w.q;
  j["fpure"] = w.fpure;
  j["inside_m_squared"] = w.inside_m_squared;
  j["witness"] = w.witness ? Json(w.witness->to_string()) : Json(nullptr);
  j["witness_monomial"] =
      w.witness_monomial ? Json(monomial_to_string(*w.witness_monomial, ring)) : Json(nullptr);
  Json gens = Json::array();
  for (const Polynomial& g : w.colon_generators) gens.push_back(g.to_string());
  j["colon_generators"] = gens;
  j["criterion"] = "F-pure iff I^[q]:I is not inside m^[q]";
  return j;
}

Json to_json(const StratumRecord& s) {
  Json j;
  j["prime"] = s.prime_names;
  j["height"] = s.height;
  j["dimS_P"] = s.local_dim;
  j["edim"] = s.edim;
  Json levels = Json::array();
  for (const StratumLevel& l : s.levels) {
    Json lj;
    lj["e"] = l.e;
    lj["q"] = l.q;
    lj["theta"] = to_json(l.theta);
    lj["theta_localized"] = to_json(l.local_theta);
    lj["dfpt"] = l.dfpt ? to_json(*l.dfpt) : Json(nullptr);
    lj["presentation_defect"] = l.presentation_defect ? to_json(*l.presentation_defect) : Json(nullptr);
    lj["mfpt"] = l.mfpt ? to_json(*l.mfpt) : Json(nullptr);
    lj["formulas"] = {{"dfpt", kFormulaStratumDfpt},
                      {"presentation_defect", kFormulaStratumDefect},
                      {"mfpt", kFormulaStratumMfpt}};
    levels.push_back(lj);
  }
  j["levels"] = levels;
  return j;
}

Json to_json(const VerdictRecord& v) {
  Json j;
  j["check"] = v.check;
  j["e"] = v.e;
  j["precondition_ok"] = v.precondition_ok;
  j["passed"] = v.passed;
  j["equality"] = v.equality;
  Json values = Json::object();
  for (const auto& [k, val] : v.values) values[k] = val;
  j["values"] = values;
  j["message"] = v.message;
  return j;
}

std::string render_interval(const Interval& interval) {
  return "[" + to_string(interval.lo) + ", " + to_string(interval.hi) + "]";
}

std::string render_text(const InvariantReport& r) {
  std::ostringstream os;
  os << "e=" << r.e << " q=" << r.q << " theta=" << r.theta << " loewy=" << r.loewy
     << " b=" << r.b_value << " height=" << r.height << " dimR=" << r.dim_r << "\n";
  os << "  fpt  in " << render_interval(r.fpt) << "  feasible " << render_interval(r.fpt_feasible)
     << "\n";
  os << "  dfpt in " << render_interval(r.dfpt) << "  feasible "
     << render_interval(r.dfpt_feasible) << "\n";
  if (r.mfpt) os << "  mfpt in " << render_interval(*r.mfpt) << "\n";
  if (r.clamped) os << "  (clamped to [0, dim R])\n";
  return os.str();
}

std::string render_table(const std::vector<StratumRecord>& strata) {
  std::vector<std::vector<std::string>> rows = {
      {"prime", "ht", "|P|", "edim", "e", "theta", "dfpt", "dimS_P-fpt", "mfpt"}};
  auto opt = [](const std::optional<Interval>& i) { return i ? render_interval(*i) : "-"; };
  for (const StratumRecord& s : strata) {
    std::string name = "(";
    for (std::size_t i = 0; i < s.prime_names.size(); ++i)
      name += (i ? "," : "") + s.prime_names[i];
    name += ")";
    for (const StratumLevel& l : s.levels)
      rows.push_back({name, std::to_string(s.height), std::to_string(s.local_dim),
                      std::to_string(s.edim), std::to_string(l.e),
                      l.theta ? std::to_string(*l.theta) : "NOT_FPURE", opt(l.dfpt),
                      opt(l.presentation_defect), opt(l.mfpt)});
  }
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << "\n";
  }
  os << "(monomial primes only)\n";
  return os.str();
}

}  // namespace fpure
