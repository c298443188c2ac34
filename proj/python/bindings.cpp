#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hlchi/cli.hpp"
#include "hlchi/error.hpp"
#include "hlchi/euler.hpp"
#include "hlchi/fexpr.hpp"
#include "hlchi/hall_littlewood.hpp"
#include "hlchi/parallel.hpp"

namespace py = pybind11;
using namespace hlchi;

namespace {

// (a, b, "value") triples for every nonzero coefficient.
std::vector<std::tuple<int, int, std::string>> series_terms(const BiSeries& s) {
    std::vector<std::tuple<int, int, std::string>> out;
    for (const auto& [a, b, v] : s.terms()) out.emplace_back(a, b, v.get_str());
    return out;
}

Method method_from(const std::string& name) {
    if (name == "theorem") return Method::Theorem;
    if (name == "localization") return Method::Localization;
    if (name == "constant-term") return Method::ConstantTerm;
    throw Error("usage", "unknown method '" + name + "'");
}

Convention convention_from(const std::string& name) {
    if (name == "row") return Convention::Row;
    if (name == "col") return Convention::Col;
    throw Error("usage", "unknown convention '" + name + "'");
}

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Hall-Littlewood algebra and Euler characteristics on Hilbert schemes of points";

    // Leaked on purpose so the translator never sees a destroyed handle.
    static PyObject* error_type = py::exception<Error>(m, "Error", PyExc_ValueError).release().ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(error_type, (e.code() + ": " + e.what()).c_str());
        }
    });

    m.def(
        "chi",
        [](const std::string& f, int n, int max_deg, const std::string& method, const std::string& convention) {
            const SymFunc sf = parse_symfunc(f);
            py::gil_scoped_release release;
            return series_terms(run_method(method_from(method), sf, n, max_deg, convention_from(convention)).series);
        },
        py::arg("f"), py::arg("n"), py::arg("max_deg") = 5, py::arg("method") = "theorem",
        py::arg("convention") = "row", "Nonzero coefficients (a, b, value) of chi_n(f) up to z1^D z2^D.");

    m.def(
        "partition_function",
        [](int n, int max_deg) { return series_terms(partition_function(n, max_deg).at(static_cast<std::size_t>(n))); },
        py::arg("n"), py::arg("max_deg"), "q^n coefficient of prod (1 - z1^i z2^j q)^-1.");

    m.def(
        "hl_poly",
        [](const std::vector<int>& lambda, const std::string& basis) {
            const auto b = basis_from_name(basis.empty() ? '?' : basis[0]);
            if (!b || basis.size() != 1) throw Error("usage", "unknown basis '" + basis + "'");
            return convert(hl_P(to_partition(lambda)), *b).to_string("z");
        },
        py::arg("lambda_"), py::arg("basis") = "m", "Hall-Littlewood P in the given basis.");

    m.def(
        "hl_inner",
        [](const std::string& f, const std::string& g, std::optional<int> n) {
            const SymFunc a = parse_symfunc(f);
            const SymFunc b = parse_symfunc(g);
            return (n ? hl_inner_finite(a, b, *n) : hl_inner(a, b)).to_string("z");
        },
        py::arg("f"), py::arg("g"), py::arg("n") = py::none(), "Hall-Littlewood scalar product.");

    m.def(
        "jing", [](int k, const std::string& f) { return jing_J(k, parse_symfunc(f)).to_string("z"); }, py::arg("k"),
        py::arg("f") = "1", "Jing's operator J_k applied to f, in power sums.");

    m.def(
        "k_exponent",
        [](const std::vector<int>& mu, const std::vector<int>& nu) {
            return k_exponent(to_partition(mu), to_partition(nu));
        },
        py::arg("mu"), py::arg("nu"));

    m.def(
        "verify_lemma",
        [](const std::vector<int>& mu, const std::vector<int>& nu) {
            return verify_lemma(to_partition(mu), to_partition(nu)).pass;
        },
        py::arg("mu"), py::arg("nu"));

    m.def("set_threads", &set_thread_count, py::arg("n"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return std::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line in-process: (exit status, stdout, stderr).");
}
