#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fpure/cli.hpp"
#include "fpure/diffops.hpp"
#include "fpure/errors.hpp"
#include "fpure/experiments.hpp"
#include "fpure/invariants.hpp"
#include "fpure/report.hpp"

namespace py = pybind11;
using namespace fpure;

namespace {

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Ideal make_ideal(std::uint32_t p, const std::vector<std::string>& vars,
                 const std::vector<std::string>& gens, const std::string& order) {
  return Ideal::parse(make_ring(p, vars, parse_monomial_order(order)), gens);
}

py::object theta_object(const ThetaValue& t) {
  if (t) return py::int_(*t);
  return py::none();
}

ThetaMethod parse_method(const std::string& m) {
  if (m == "auto") return ThetaMethod::kAuto;
  if (m == "generic") return ThetaMethod::kGeneric;
  if (m == "hypersurface") return ThetaMethod::kHypersurface;
  throw InputError("unknown method '" + m + "'");
}

}  // namespace

PYBIND11_MODULE(_fpure, m) {
  m.doc() = "Exact F-purity and F-pure threshold invariants over F_p";

  static py::exception<Error> error(m, "Error");
  static py::exception<InputError> input_error(m, "InputError", error.ptr());
  static py::exception<MathError> math_error(m, "MathError", error.ptr());
  static py::exception<NotFpureError> not_fpure(m, "NotFpureError", math_error.ptr());
  static py::exception<BudgetExhausted> budget(m, "BudgetExhausted", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NotFpureError& e) {
      py::set_error(not_fpure, e.what());
    } catch (const InputError& e) {
      py::set_error(input_error, e.what());
    } catch (const MathError& e) {
      py::set_error(math_error, e.what());
    } catch (const BudgetExhausted& e) {
      py::set_error(budget, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("set_pair_budget", &set_pair_budget, py::arg("max_pairs"));

  m.def(
      "groebner_basis",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens, const std::string& order) {
        std::vector<std::string> out;
        for (const Polynomial& g : make_ideal(p, vars, gens, order).groebner_basis())
          out.push_back(g.to_string());
        return out;
      },
      py::arg("p"), py::arg("vars"), py::arg("gens"), py::arg("order") = "degrevlex");

  m.def(
      "fedder",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens, unsigned e) {
        Ideal I = make_ideal(p, vars, gens, "degrevlex");
        return to_python(to_json(is_fpure_at_origin(I, e), I.ring()));
      },
      py::arg("p"), py::arg("vars"), py::arg("gens"), py::arg("e") = 1);

  m.def(
      "theta",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens, unsigned e, const std::string& method) {
        return theta_object(theta_local(make_ideal(p, vars, gens, "degrevlex"), e, parse_method(method)));
      },
      py::arg("p"), py::arg("vars"), py::arg("gens"), py::arg("e") = 1,
      py::arg("method") = "auto");

  m.def(
      "theta_at_prime",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens, const std::vector<std::string>& prime, unsigned e) {
        Ideal I = make_ideal(p, vars, gens, "degrevlex");
        return theta_object(theta_at_prime(I, Ideal::parse(I.ring(), prime), e));
      },
      py::arg("p"), py::arg("vars"), py::arg("gens"), py::arg("prime"), py::arg("e") = 1);

  m.def(
      "theta_global",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens, unsigned e) {
        return theta_object(theta_global(make_ideal(p, vars, gens, "degrevlex"), e));
      },
      py::arg("p"), py::arg("vars"), py::arg("gens"), py::arg("e") = 1);

  m.def(
      "fpt_bounds",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens, unsigned e, bool allow_nonminimal) {
        FptOptions options;
        options.require_minimal = !allow_nonminimal;
        return to_python(to_json(fpt_bounds(make_ideal(p, vars, gens, "degrevlex"), e, options)));
      },
      py::arg("p"), py::arg("vars"), py::arg("gens"), py::arg("e") = 1,
      py::arg("allow_nonminimal") = false);

  m.def(
      "main_formula",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens, unsigned e) {
        MainFormulaResult r = main_formula_check(make_ideal(p, vars, gens, "degrevlex"), e);
        py::dict d;
        d["holds"] = r.holds;
        d["loewy"] = r.loewy;
        d["theta"] = r.theta;
        d["expected"] = r.expected;
        return d;
      },
      py::arg("p"), py::arg("vars"), py::arg("gens"), py::arg("e") = 1);

  m.def(
      "diff_power_member",
      [](std::uint32_t p, const std::vector<std::string>& vars, const std::string& f,
         const std::vector<std::string>& prime, std::uint64_t n, unsigned e) {
        Ring ring = make_ring(p, vars);
        return diff_power_member(parse_poly(f, ring), Ideal::parse(ring, prime), n, e);
      },
      py::arg("p"), py::arg("vars"), py::arg("f"), py::arg("prime"), py::arg("n"),
      py::arg("e") = 1);

  m.def(
      "apply_divided_power",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::uint32_t>& alpha, const std::string& f, unsigned e) {
        Ring ring = make_ring(p, vars);
        return apply_divided_power(DividedPowerIndex{alpha, e}, parse_poly(f, ring)).to_string();
      },
      py::arg("p"), py::arg("vars"), py::arg("alpha"), py::arg("f"), py::arg("e") = 1);

  m.def(
      "stratify",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens, const std::vector<unsigned>& levels, unsigned jobs) {
        Json arr = Json::array();
        for (const StratumRecord& s :
             stratify_monomial(make_ideal(p, vars, gens, "degrevlex"), levels, jobs))
          arr.push_back(to_json(s));
        return to_python(arr);
      },
      py::arg("p"), py::arg("vars"), py::arg("gens"), py::arg("levels") = std::vector<unsigned>{1},
      py::arg("jobs") = 1);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line tool in-process; returns (exit_code, stdout, stderr).");
}
