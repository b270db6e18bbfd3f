// Python bindings. Structured values cross the boundary as JSON text and are
// decoded on the Python side; big integers travel as decimal strings.

#include "mfb/arrangement.hpp"
#include "mfb/calculus.hpp"
#include "mfb/curve_config.hpp"
#include "mfb/error.hpp"
#include "mfb/generic_algebra.hpp"
#include "mfb/homology.hpp"
#include "mfb/io.hpp"
#include "mfb/pipeline.hpp"
#include "mfb/strings.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mfb;

namespace {

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

IntMatrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorCode::InvalidInput, "ragged matrix");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Int(rows[i][j]);
    }
    return m;
}

std::vector<std::vector<std::string>> matrix_to_rows(const IntMatrix& m) {
    std::vector<std::vector<std::string>> rows(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).str();
    return rows;
}

PlumbingGraph graph_or_pipeline(const Json& j, bool reduce) {
    if (looks_like_graph(j)) return graph_from_json(j);
    return boundary_graph(arrangement_from_json(j).incidence, reduce);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Milnor fiber boundary of line arrangements (native core)";

    static py::exception<Error> error(m, "MfbError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, (std::string(e.code_name()) + ": " + e.what()).c_str());
        }
    });

    m.def("generate_family", [](const std::string& family, std::size_t n) {
        return incidence_to_json(generate_family(parse_family(family), n)).dump();
    });
    m.def("random_lines", [](std::size_t n, int bound, std::uint64_t seed) {
        return lines_to_json(random_lines(n, bound, seed)).dump();
    });
    m.def("incidence", [](const std::string& arrangement) {
        return incidence_to_json(arrangement_from_json(parse(arrangement)).incidence).dump();
    });
    m.def("gamma_c", [](const std::string& arrangement) {
        return graph_to_json(build_gamma_c(arrangement_from_json(parse(arrangement)).incidence)).dump();
    });
    m.def("boundary_graph", [](const std::string& arrangement, bool reduce) {
        return graph_to_json(boundary_graph(arrangement_from_json(parse(arrangement)).incidence, reduce)).dump();
    }, py::arg("arrangement"), py::arg("reduce") = false);
    m.def("homology", [](const std::string& input, bool reduce) {
        return group_to_json(homology_of_graph(graph_or_pipeline(parse(input), reduce))).dump();
    }, py::arg("input"), py::arg("reduce") = false);
    m.def("betti_formula", [](const std::string& arrangement) {
        return betti_formula(arrangement_from_json(parse(arrangement)).incidence);
    });
    m.def("probe_conjecture", [](const std::string& arrangement) {
        return conjecture_to_json(probe_conjecture(arrangement_from_json(parse(arrangement)).incidence)).dump();
    });
    m.def("build_string", [](long long a, long long b, long long c, bool plus) {
        return string_graph_to_json(build_string(a, b, c, plus ? Sign::plus : Sign::minus)).dump();
    }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("plus") = false);
    m.def("run_script", [](const std::string& graph, const std::string& script) {
        const auto moves = script_from_json(parse(script));
        const auto r = run_script(graph_from_json(parse(graph)), moves);
        return graph_to_json(canonical_layout(r.result)).dump();
    });
    m.def("to_dot", [](const std::string& input, bool reduce) {
        return to_dot(graph_or_pipeline(parse(input), reduce));
    }, py::arg("input"), py::arg("reduce") = false);
    m.def("smith_normal_form", [](const std::vector<std::vector<std::string>>& rows) {
        const auto s = smith_normal_form(matrix_from_rows(rows));
        std::vector<std::string> factors;
        for (const auto& d : s.factors) factors.push_back(d.str());
        return py::make_tuple(factors, s.corank());
    });
    m.def("build_An", [](long long n) { return matrix_to_rows(build_An(n)); });
    m.def("build_Xn", [](long long n) { return matrix_to_rows(build_Xn(n)); });
    m.def("generic_h1_closed_form", [](long long n) { return group_to_json(generic_h1_closed_form(n)).dump(); });
    m.def("lemma_identities_hold", [](long long n) { return check_lemma_identities(n).all_hold(); });
}
