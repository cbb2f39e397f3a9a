#include "orbitclass/json_io.hpp"

#include <algorithm>
#include <bit>

namespace orbitclass {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw Error(ErrorKind::ParseError, what);
}

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer()) parse_fail(std::string(what) + " must be an integer");
    return j.get<int>();
}

const json& require_field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        parse_fail(std::string("missing field '") + name + "'");
    return j.at(name);
}

Int int_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        Int v;
        if (v.set_str(j.get<std::string>(), 10) != 0)
            parse_fail(std::string(what) + ": invalid integer literal '" +
                       j.get<std::string>() + "'");
        return v;
    }
    parse_fail(std::string(what) + " must be an integer or a decimal string");
}

Rat rat_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    parse_fail(std::string(what) + " must be an integer or a 'p/q' string");
}

std::vector<int> int_vector(const json& j, const char* what) {
    if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const json& v : j) out.push_back(require_int(v, what));
    return out;
}

// Unwrap {"result": payload} envelopes.
const json& payload_of(const json& j) {
    if (j.is_object() && j.contains("result")) return j.at("result");
    return j;
}

}  // namespace

json poly_to_json(const Poly& p) {
    const VarSpace& vs = p.space();
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["c"] = c.get_str();
        term["u"] = std::vector<int>(e.begin(), e.begin() + vs.r);
        term["t"] = std::vector<int>(e.begin() + vs.r, e.end());
        terms.push_back(std::move(term));
    }
    return terms;
}

Poly poly_from_json(const VarSpace& vs, const json& jin) {
    const json& j = payload_of(jin);
    if (!j.is_array()) parse_fail("polynomial must be an array of terms");
    Poly p(vs);
    for (const json& term : j) {
        Int c = int_from_json(require_field(term, "c"), "coefficient");
        std::vector<int> ue = int_vector(require_field(term, "u"), "u exponents");
        std::vector<int> te = int_vector(require_field(term, "t"), "t exponents");
        if (static_cast<int>(ue.size()) != vs.r || static_cast<int>(te.size()) != vs.n)
            parse_fail("exponent vector lengths must be r and n");
        ExpVec e;
        e.reserve(vs.num_vars());
        e.insert(e.end(), ue.begin(), ue.end());
        e.insert(e.end(), te.begin(), te.end());
        for (int v : e)
            if (v < 0) parse_fail("exponents must be nonnegative");
        p.add_term(e, c);
    }
    return p;
}

json partition_to_json(const Partition& p) { return json(p.parts); }

Partition partition_from_json(const json& j) {
    std::vector<int> parts = int_vector(j, "partition");
    try {
        return Partition(std::move(parts));
    } catch (const Error& e) {
        parse_fail(e.what());
    }
}

json matrix_to_json(const RationalMatrix& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

RationalMatrix matrix_from_json(const json& jin) {
    const json& j = payload_of(jin);
    int rows = require_int(require_field(j, "rows"), "rows");
    int cols = require_int(require_field(j, "cols"), "cols");
    const json& entries = require_field(j, "entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        parse_fail("entries must be an array of 'rows' rows");
    std::vector<std::vector<Rat>> data(rows);
    for (int i = 0; i < rows; ++i) {
        const json& row = entries.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            parse_fail("every entry row must have 'cols' values");
        data[i].reserve(cols);
        for (const json& v : row) data[i].push_back(rat_from_json(v, "matrix entry"));
    }
    try {
        return RationalMatrix(rows, cols, std::move(data));
    } catch (const Error& e) {
        parse_fail(e.what());
    }
}

json matroid_to_json(const Matroid& m) {
    json bases = json::array();
    for (std::uint32_t b : m.bases()) bases.push_back(subset_elements(b));
    return json{{"n", m.n()}, {"r", m.rank()}, {"bases", std::move(bases)}};
}

Matroid matroid_from_json(const json& jin) {
    const json& j = payload_of(jin);
    int n = require_int(require_field(j, "n"), "n");
    int r = require_int(require_field(j, "r"), "r");
    const json& bases = require_field(j, "bases");
    if (!bases.is_array()) parse_fail("bases must be an array");
    std::vector<std::uint32_t> masks;
    masks.reserve(bases.size());
    try {
        for (const json& b : bases)
            masks.push_back(subset_of_elements(int_vector(b, "basis"), n));
        return Matroid::from_bases(n, r, std::move(masks));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SizeLimit) throw;
        parse_fail(e.what());
    }
}

json tuple_to_json(const GKMTuple& f) {
    json out = json::array();
    for (const auto& [B, value] : f.values)
        out.push_back(json{{"basis", subset_elements(B)}, {"value", poly_to_json(value)}});
    return out;
}

GKMTuple tuple_from_json(const json& jin) {
    const json& j = payload_of(jin);
    if (!j.is_array() || j.empty()) parse_fail("tuple must be a nonempty array of entries");

    // Sizes: trust envelope fields when present, otherwise infer r from the
    // basis lists and n from the largest element (every r-subset is present
    // in a valid tuple, so the maximum element is n).
    int r = -1, n = -1;
    if (jin.is_object() && jin.contains("r") && jin.contains("n")) {
        r = require_int(jin.at("r"), "r");
        n = require_int(jin.at("n"), "n");
    } else {
        n = 0;
        for (const json& entry : j) {
            std::vector<int> b = int_vector(require_field(entry, "basis"), "basis");
            if (r < 0)
                r = static_cast<int>(b.size());
            else if (r != static_cast<int>(b.size()))
                parse_fail("all basis lists must have the same size");
            for (int e : b) n = std::max(n, e);
        }
    }
    if (n < 1 || n > 16) parse_fail("tuple ground set size out of range");
    if (r < 0 || r > n) parse_fail("tuple rank out of range");

    VarSpace vs(r, n);
    GKMTuple f;
    f.r = r;
    f.n = n;
    for (const json& entry : j) {
        std::uint32_t B;
        try {
            B = subset_of_elements(int_vector(require_field(entry, "basis"), "basis"), n);
        } catch (const Error& e) {
            parse_fail(e.what());
        }
        if (std::popcount(B) != r) parse_fail("every basis list must have exactly r elements");
        Poly value = poly_from_json(vs, require_field(entry, "value"));
        if (value.has_u_vars()) parse_fail("tuple values must not involve u variables");
        if (!f.values.emplace(B, std::move(value)).second)
            parse_fail("duplicate tuple entry for a basis");
    }
    for (std::uint32_t B : all_subsets(n, r))
        if (!f.values.count(B)) parse_fail("tuple is missing an r-subset entry");
    return f;
}

json schur_expansion_to_json(const SchurExpansion& e) {
    json out = json::array();
    for (const auto& [lam, q] : e.coeffs)
        out.push_back(json{{"partition", partition_to_json(lam)}, {"coeff", poly_to_json(q)}});
    return out;
}

json schubert_expansion_to_json(const SchubertExpansion& e) {
    json coeffs = json::array();
    for (const auto& [lam, q] : e.coefficients)
        coeffs.push_back(json{{"partition", partition_to_json(lam)}, {"coeff", poly_to_json(q)}});
    return json{{"coefficients", std::move(coeffs)},
                {"overflow", schur_expansion_to_json(e.overflow)},
                {"convention", json{{"eps_u", e.conv.eps_u}, {"eps_t", e.conv.eps_t}}}};
}

SchubertExpansion schubert_expansion_from_json(const VarSpace& vs, const json& jin) {
    const json& j = payload_of(jin);
    const json& conv = require_field(j, "convention");
    int eps_u = require_int(require_field(conv, "eps_u"), "eps_u");
    int eps_t = require_int(require_field(conv, "eps_t"), "eps_t");
    if ((eps_u != 1 && eps_u != -1) || (eps_t != 1 && eps_t != -1))
        parse_fail("convention signs must be +1 or -1");

    SchubertExpansion e(vs, RestrictionConvention{eps_u, eps_t});
    const json& coeffs = require_field(j, "coefficients");
    if (!coeffs.is_array()) parse_fail("coefficients must be an array");
    for (const json& item : coeffs) {
        Partition lam = partition_from_json(require_field(item, "partition"));
        Poly q = poly_from_json(vs, require_field(item, "coeff"));
        if (!e.coefficients.emplace(std::move(lam), std::move(q)).second)
            parse_fail("duplicate partition in coefficients");
    }
    if (j.contains("overflow")) {
        const json& over = j.at("overflow");
        if (!over.is_array()) parse_fail("overflow must be an array");
        for (const json& item : over) {
            Partition lam = partition_from_json(require_field(item, "partition"));
            Poly q = poly_from_json(vs, require_field(item, "coeff"));
            if (!e.overflow.coeffs.emplace(std::move(lam), std::move(q)).second)
                parse_fail("duplicate partition in overflow");
        }
    }
    return e;
}

}  // namespace orbitclass
