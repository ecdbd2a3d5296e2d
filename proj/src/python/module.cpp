#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "teq/cli/driver.hpp"
#include "teq/core/erase.hpp"
#include "teq/frontend/parser.hpp"
#include "teq/frontend/printer.hpp"
#include "teq/typecheck/typecheck.hpp"
#include "teq/wprime/translate.hpp"
#include "teq/wproof/check.hpp"

namespace py = pybind11;
using namespace teq;

namespace {

// Syntax classes compare up to alpha and print in surface syntax.
template <class T>
void syntax_class(py::module_& m, const char* name, T (*parse)(std::string_view)) {
    py::class_<T>(m, name)
        .def(py::init([parse](const std::string& s) { return parse(s); }), py::arg("source"))
        .def("__eq__", [](const T& a, const T& b) { return a == b; })
        .def("__str__", [](const T& a) { return frontend::print(a); })
        .def("__repr__", [name](const T& a) {
            return std::string(name) + "(" + py::repr(py::str(frontend::print(a))).cast<std::string>() + ")";
        })
        .attr("__hash__") = py::none();
}

Effect effect_of(const std::string& s) {
    if (s == "!") return Effect::Total;
    if (s == "?") return Effect::General;
    throw py::value_error("effect must be '!' or '?'");
}

Context context_of(const std::vector<std::pair<std::string, AType>>& bs) {
    Context g;
    for (const auto& [x, s] : bs) g.push(x, s);
    return g;
}

}  // namespace

PYBIND11_MODULE(_teqt, m) {
    m.doc() = "Annotated Teq checker, evaluator and translator";

    py::register_exception<frontend::ParseError>(m, "ParseError", PyExc_ValueError);

    syntax_class<Term>(m, "Term", frontend::parse_term);
    syntax_class<Type>(m, "Type", frontend::parse_type);
    syntax_class<ATerm>(m, "ATerm", frontend::parse_aterm);
    syntax_class<AType>(m, "AType", frontend::parse_atype);
    syntax_class<Formula>(m, "Formula", frontend::parse_formula);
    syntax_class<Sort>(m, "Sort", frontend::parse_sort);

    py::class_<check::Diagnostic>(m, "Diagnostic")
        .def_readonly("rule", &check::Diagnostic::rule)
        .def_readonly("premise", &check::Diagnostic::premise)
        .def_readonly("path", &check::Diagnostic::path)
        .def_readonly("message", &check::Diagnostic::message)
        .def_readonly("expected", &check::Diagnostic::expected)
        .def_readonly("actual", &check::Diagnostic::actual)
        .def("__repr__", [](const check::Diagnostic& d) {
            return "Diagnostic(" + d.rule + ": " + d.message + ")";
        });

    py::class_<wproof::ProofFailure>(m, "ProofFailure")
        .def_readonly("rule", &wproof::ProofFailure::rule)
        .def_readonly("position", &wproof::ProofFailure::position)
        .def_readonly("message", &wproof::ProofFailure::message)
        .def("__repr__", [](const wproof::ProofFailure& f) {
            return "ProofFailure(" + f.rule + " at " + f.position + ")";
        });

    m.def("erase", &erase_term, py::arg("term"));
    m.def("erase_type", &erase_type, py::arg("type"));

    m.def(
        "infer",
        [](const ATerm& a, const std::string& effect,
           const std::vector<std::pair<std::string, AType>>& context,
           std::size_t join_fuel) -> py::object {
            auto r = check::infer(context_of(context), a, effect_of(effect), {join_fuel});
            if (r) return py::cast(*r);
            return py::cast(r.error());
        },
        py::arg("term"), py::arg("effect") = "!",
        py::arg("context") = std::vector<std::pair<std::string, AType>>{},
        py::arg("join_fuel") = eval::kDefaultFuel,
        "The inferred AType, or a Diagnostic naming the failed rule.");

    m.def("is_value", &eval::is_value, py::arg("term"));
    m.def("step", &eval::step, py::arg("term"));
    m.def(
        "evaluate",
        [](const Term& t, std::size_t fuel) {
            eval::Trace tr = eval::reduce_trace(t, fuel);
            return py::make_tuple(tr.last(), tr.steps(), tr.fuel_exhausted);
        },
        py::arg("term"), py::arg("fuel") = eval::kDefaultFuel,
        "(final term, steps, fuel exhausted)");
    m.def("joinable", &eval::joinable, py::arg("a"), py::arg("b"), py::arg("fuel") = eval::kDefaultFuel);

    m.def("sort_of", &wprime::trans_type_c, py::arg("type"));
    m.def("trans_term", &wprime::trans_term_c, py::arg("term"));
    m.def(
        "formula_of",
        [](const Type& t, const std::string& effect, const Term& w) {
            return wprime::trans_type_l_eff(t, effect_of(effect), w);
        },
        py::arg("type"), py::arg("effect"), py::arg("witness"));
    m.def(
        "obligation",
        [](const ATerm& a, const std::string& effect,
           const std::vector<std::pair<std::string, AType>>& context, std::size_t join_fuel) {
            Context g = context_of(context);
            Effect e = effect_of(effect);
            auto r = check::infer(g, a, e, {join_fuel});
            if (!r) throw py::value_error(r.error().rule + ": " + r.error().message);
            return frontend::print(wprime::make_obligation(g, erase_term(a), erase_type(*r), e));
        },
        py::arg("term"), py::arg("effect") = "!",
        py::arg("context") = std::vector<std::pair<std::string, AType>>{},
        py::arg("join_fuel") = eval::kDefaultFuel);

    m.def(
        "check_proofs",
        [](const std::string& script, std::size_t fuel) {
            py::list out;
            for (const auto& b : frontend::parse_proof_script(script)) {
                auto r = wproof::check_proof(b.sequent, b.proof, {fuel});
                out.append(r ? py::none() : py::cast(r.error()));
            }
            return out;
        },
        py::arg("script"), py::arg("fuel") = eval::kDefaultFuel,
        "One entry per block: None when the proof checks, else a ProofFailure.");

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the teqt command line; returns (exit code, stdout, stderr).");
}
