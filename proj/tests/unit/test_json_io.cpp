#include "doctest.h"
#include "orbitclass/classes.hpp"
#include "orbitclass/json_io.hpp"
#include "orbitclass/localize.hpp"
#include "orbitclass/split.hpp"

using namespace orbitclass;
using nlohmann::json;

TEST_CASE("polynomial JSON round trip") {
    VarSpace vs(2, 4);
    Poly p = Poly::var_u(vs, 1) * Poly::var_t(vs, 3) * Int(-7) + Poly::one(vs);
    json j = poly_to_json(p);
    CHECK(j.is_array());
    CHECK(j.size() == 2);
    for (const json& term : j) {
        CHECK(term.at("u").size() == 2);
        CHECK(term.at("t").size() == 4);
        CHECK(term.at("c").is_string());
    }
    CHECK(poly_from_json(vs, j) == p);
}

TEST_CASE("polynomial JSON accepts integer coefficients") {
    VarSpace vs(1, 2);
    json j = json::array({json{{"c", 5}, {"u", {1}}, {"t", {0, 2}}}});
    Poly p = poly_from_json(vs, j);
    CHECK(p == Poly::var_u(vs, 1) * Poly::var_t(vs, 2) * Poly::var_t(vs, 2) * Int(5));
}

TEST_CASE("polynomial JSON validation") {
    VarSpace vs(1, 2);
    CHECK_THROWS_AS(poly_from_json(vs, json::parse("{}")), Error);
    // Wrong exponent-vector lengths.
    json bad = json::array({json{{"c", "1"}, {"u", {0, 0}}, {"t", {0, 0}}}});
    CHECK_THROWS_AS(poly_from_json(vs, bad), Error);
    try {
        poly_from_json(vs, json::array({json{{"c", "x"}, {"u", {0}}, {"t", {0, 0}}}}));
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
    }
}

TEST_CASE("matrix JSON round trip with rational entries") {
    json j = {{"rows", 2},
              {"cols", 2},
              {"entries", {{"1/2", "0"}, {1, "-3"}}}};
    RationalMatrix m = matrix_from_json(j);
    CHECK(m.at(0, 0) == Rat(1, 2));
    CHECK(m.at(1, 0) == Rat(1));
    CHECK(m.at(1, 1) == Rat(-3));
    RationalMatrix back = matrix_from_json(matrix_to_json(m));
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) CHECK(back.at(i, k) == m.at(i, k));
}

TEST_CASE("matrix JSON validation") {
    CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), Error);
    json shape_mismatch = {{"rows", 2}, {"cols", 2}, {"entries", {{"1", "0"}}}};
    CHECK_THROWS_AS(matrix_from_json(shape_mismatch), Error);
}

TEST_CASE("matroid JSON round trip") {
    Matroid m = Matroid::uniform(2, 4);
    json j = matroid_to_json(m);
    CHECK(j.at("n") == 4);
    CHECK(j.at("r") == 2);
    CHECK(j.at("bases").size() == 6);
    CHECK(matroid_from_json(j) == m);
}

TEST_CASE("matroid JSON keeps error kinds for bad inputs") {
    json not_exchange = {{"n", 4}, {"r", 2}, {"bases", {{1, 2}, {3, 4}}}};
    try {
        matroid_from_json(not_exchange);
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
    }
    json too_big = {{"n", 20}, {"r", 1}, {"bases", {{1}}}};
    try {
        matroid_from_json(too_big);
        FAIL("expected SizeLimit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeLimit);
    }
}

TEST_CASE("tuple JSON round trip") {
    GKMTuple f = full_orbit_tuple(Matroid::uniform(2, 4));
    json j = tuple_to_json(f);
    CHECK(j.is_array());
    CHECK(j.size() == 6);
    GKMTuple back = tuple_from_json(j);
    CHECK(back.r == 2);
    CHECK(back.n == 4);
    CHECK(back.values == f.values);
}

TEST_CASE("tuple JSON accepts an envelope with explicit sizes") {
    GKMTuple f = full_orbit_tuple(Matroid::uniform(1, 3));
    json envelope = {{"r", 1}, {"n", 3}, {"result", tuple_to_json(f)}};
    GKMTuple back = tuple_from_json(envelope);
    CHECK(back.values == f.values);
}

TEST_CASE("tuple JSON rejects incomplete or u-laden tuples") {
    GKMTuple f = full_orbit_tuple(Matroid::uniform(2, 4));
    json j = tuple_to_json(f);
    j.erase(0);
    CHECK_THROWS_AS(tuple_from_json(j), Error);

    VarSpace vs(2, 4);
    json k = tuple_to_json(f);
    k[0]["value"] = poly_to_json(Poly::var_u(vs, 1));
    CHECK_THROWS_AS(tuple_from_json(k), Error);
}

TEST_CASE("schubert expansion JSON round trip") {
    VarSpace vs(2, 4);
    RestrictionConvention conv = resolve_convention(2, 4);
    SchubertExpansion e =
        schubert_expand_tuple(full_orbit_tuple(Matroid::uniform(2, 4)), conv);
    json j = schubert_expansion_to_json(e);
    CHECK(j.at("convention").at("eps_u") == -1);
    SchubertExpansion back = schubert_expansion_from_json(vs, j);
    CHECK(back.coefficients == e.coefficients);
    CHECK(back.conv == e.conv);
    CHECK(back.overflow.coeffs == e.overflow.coeffs);
}

TEST_CASE("partition JSON") {
    CHECK(partition_from_json(json::array({3, 1})) == Partition({3, 1}));
    CHECK(partition_to_json(Partition({2, 2})) == json::array({2, 2}));
    CHECK_THROWS_AS(partition_from_json(json::array({1, 2})), Error);
}
