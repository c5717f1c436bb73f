#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leibform/eval.hpp"
#include "leibform/graded_rep.hpp"
#include "leibform/text.hpp"
#include "leibform/torus.hpp"
#include "leibform/verify.hpp"

namespace py = pybind11;
using namespace leibform;

namespace {

std::string normalize(const std::string& text, const std::string& ring, int n) {
    const ParsedObject p = parse_object(strip_format_header(text));
    const int dim = n > 0 ? n : implied_dim(p);
    const bool trig = ring == "trig" || (ring.empty() && p.trig_tokens);
    if (p.kind == ObjectKind::vec)
        return trig ? format(build_graded<TrigCoeff, VecKind>(p, dim)) : format(build_graded<PolyCoeff, VecKind>(p, dim));
    return trig ? format(build_graded<TrigCoeff, FormKind>(p, dim)) : format(build_graded<PolyCoeff, FormKind>(p, dim));
}

std::string verify_json(std::uint64_t seed, const std::string& ring, const std::vector<std::string>& suites, int n,
                        int deg_cap, int freq_cap) {
    VerifyConfig cfg;
    cfg.seed = seed;
    cfg.ring = ring;
    cfg.suites = suites;
    cfg.n = n;
    cfg.caps.deg_cap = deg_cap;
    cfg.caps.freq_cap = freq_cap;
    return report_json(run_suites(cfg)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Cartan calculus on polynomial and trigonometric forms";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<EvalError>(m, "EvalError", PyExc_ValueError);

    m.def(
        "eval",
        [](const std::string& expr, const std::string& ring, int n) { return eval_expr(expr, EvalOptions{ring, n}).text; },
        py::arg("expr"), py::arg("ring") = "", py::arg("n") = 0);
    m.def("normalize", &normalize, "Parse a form or multivector and print it in canonical shorthand.", py::arg("text"),
          py::arg("ring") = "", py::arg("n") = 0);
    m.def("verify_json", &verify_json, py::arg("seed") = 1, py::arg("ring") = "poly",
          py::arg("suites") = std::vector<std::string>{}, py::arg("n") = 0, py::arg("deg_cap") = 3, py::arg("freq_cap") = 2);
    m.def("suite_names", &suite_names);

    m.def("divfree_dim", [](int n, int k) { return basis_divfree(n, k).dim(); });
    m.def("divfree_dim_formula", &divfree_dim_formula);
    m.def("whitehead_h1", [](int n) { return whitehead_h1(n); });
    m.def("intertwiner_dim", &intertwiner_dim);
    m.def("endo_dim_tensor", &endo_dim_tensor);
    m.def("pairing_rank", [](int n) { return pairing_matrix(n).rank(); });
}
