// Python bindings. Structured values cross the boundary as JSON strings so
// exact integers survive untruncated; the package wrapper turns them into
// dicts. Scalars (degrees, divisor coefficients) come back as decimal
// strings for the same reason.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "json.hpp"
#include "orbitclass/classes.hpp"
#include "orbitclass/json_io.hpp"
#include "orbitclass/localize.hpp"
#include "orbitclass/split.hpp"

namespace py = pybind11;
using json = nlohmann::json;
using namespace orbitclass;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
    }
}

// Accept either a matrix document or a matroid document, possibly wrapped in
// a result envelope.
Matroid matroid_like(const std::string& text) {
    json j = parse(text);
    if (j.is_object() && j.contains("result")) j = j.at("result");
    if (j.is_object() && j.contains("entries")) return matroid_of_matrix(matrix_from_json(j));
    if (j.is_object() && j.contains("bases")) return matroid_from_json(j);
    throw Error(ErrorKind::ParseError,
                "input must be a matrix ({\"entries\": ...}) or a matroid ({\"bases\": ...})");
}

Poly poly_like(const std::string& text) {
    json j = parse(text);
    if (j.is_object() && j.contains("result")) j = j.at("result");
    if (j.is_object() && j.contains("polynomial")) j = j.at("polynomial");
    if (!j.is_array() || j.empty() || !j.front().is_object() || !j.front().contains("u"))
        throw Error(ErrorKind::ParseError, "expected a nonempty polynomial term array");
    VarSpace vs(static_cast<int>(j.front().at("u").size()),
                static_cast<int>(j.front().at("t").size()));
    return poly_from_json(vs, j);
}

std::string render_schur(const Poly& c) {
    if (c.is_zero()) return "0";
    SchurExpansion e = schur_expand(c);
    std::string out;
    for (const auto& [lam, q] : e.coeffs) {
        if (!out.empty()) out += " + ";
        std::string qs = q.to_string();
        if (qs.find_first_of("+-") != std::string::npos && qs.rfind("-", 0) != 0)
            qs = "(" + qs + ")";
        else if (qs.rfind("-", 0) == 0)
            qs = "(" + qs + ")";
        out += (qs == "1" ? "" : qs + "*") + std::string("s[") + lam.to_string() + "](u)";
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact equivariant classes of matrix and torus orbit closures";
    m.attr("__version__") = "0.1.0";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            std::string msg = std::string(error_kind_name(e.kind())) + ": " + e.what();
            PyErr_SetString(PyExc_ValueError, msg.c_str());
        }
    });

    m.def("column_matroid",
          [](const std::string& matrix_json) {
              json j = parse(matrix_json);
              if (j.is_object() && j.contains("result")) j = j.at("result");
              return matroid_to_json(matroid_of_matrix(matrix_from_json(j))).dump();
          },
          py::arg("matrix_json"), "Column matroid of a rational matrix document");

    m.def("localization",
          [](const std::string& input_json, const std::vector<int>& basis) {
              Matroid mat = matroid_like(input_json);
              std::uint32_t B = subset_of_elements(basis, mat.n());
              return poly_to_json(orbit_chow_localization(mat, B)).dump();
          },
          py::arg("input_json"), py::arg("basis"),
          "Fixed-point restriction of the torus orbit closure at one basis");

    m.def("full_tuple",
          [](const std::string& input_json) {
              return tuple_to_json(full_orbit_tuple(matroid_like(input_json))).dump();
          },
          py::arg("input_json"), "Restriction tuple at every fixed point");

    m.def("gkm_violations",
          [](const std::string& tuple_json) {
              json out = json::array();
              for (const GKMViolation& v : gkm_check(tuple_from_json(parse(tuple_json))))
                  out.push_back({{"basis", subset_elements(v.B)}, {"i", v.i}, {"j", v.j}});
              return out.dump();
          },
          py::arg("tuple_json"), "Exchange-edge divisibility failures of a tuple");

    m.def("uniform_class",
          [](int r, int n, const std::string& form) {
              if (form == "omega") return poly_to_json(uniform_matrix_class_omega(r, n)).dump();
              if (form == "lr") return poly_to_json(uniform_matrix_class_lr(r, n)).dump();
              throw Error(ErrorKind::InvalidArgument, "form must be 'lr' or 'omega'");
          },
          py::arg("r"), py::arg("n"), py::arg("form") = "lr",
          "Ambient class of the uniform matrix orbit closure");

    m.def("schur_rendering",
          [](const std::string& poly_json) { return render_schur(poly_like(poly_json)); },
          py::arg("poly_json"), "Human-readable Schur-function form of a class");

    m.def("lift_tuple",
          [](const std::string& tuple_json) {
              GKMTuple f = tuple_from_json(parse(tuple_json));
              RestrictionConvention conv = resolve_convention(f.r, f.n);
              return poly_to_json(lift(schubert_expand_tuple(f, conv))).dump();
          },
          py::arg("tuple_json"), "Ambient class reconstructed from a restriction tuple");

    m.def("expand_tuple",
          [](const std::string& tuple_json) {
              GKMTuple f = tuple_from_json(parse(tuple_json));
              RestrictionConvention conv = resolve_convention(f.r, f.n);
              return schubert_expansion_to_json(schubert_expand_tuple(f, conv)).dump();
          },
          py::arg("tuple_json"), "Matrix Schubert expansion of a restriction tuple");

    m.def("expand_class",
          [](const std::string& poly_json) {
              Poly c = poly_like(poly_json);
              RestrictionConvention conv = resolve_convention(c.space().r, c.space().n);
              return schubert_expansion_to_json(factorial_expand(c, conv.eps_t)).dump();
          },
          py::arg("poly_json"), "Matrix Schubert expansion of an ambient class");

    m.def("degree",
          [](int r, int n) { return uniform_degree(r, n).get_str(); }, py::arg("r"),
          py::arg("n"), "Projective degree of the uniform orbit closure, as a decimal string");

    m.def("klyachko_coefficient",
          [](const std::vector<int>& lam, int r, int n, int start_index) {
              return klyachko_coefficient(Partition(lam), r, n, start_index).get_str();
          },
          py::arg("lam"), py::arg("r"), py::arg("n"), py::arg("start_index") = 0,
          "Non-equivariant divisor coefficient, as a decimal string");

    m.def("cauchy_check", &cauchy_check, py::arg("size_t_alphabet"), py::arg("size_v_alphabet"),
          "Rectangle expansion identity for the given alphabet sizes");
}
