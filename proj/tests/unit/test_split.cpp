#include "doctest.h"
#include "orbitclass/classes.hpp"
#include "orbitclass/localize.hpp"
#include "orbitclass/split.hpp"

using namespace orbitclass;

namespace {

const VarSpace vs24(2, 4);

Poly T(int j) { return Poly::var_t(vs24, j); }
Poly U(int k) { return Poly::var_u(vs24, k); }

}  // namespace

TEST_CASE("factorial_expand of a single matrix Schubert class") {
    SchubertExpansion e = factorial_expand(factorial_schur(vs24, Partition({1}), 1), 1);
    CHECK(e.coefficients.size() == 1);
    CHECK(e.coefficients.at(Partition({1})) == Poly::one(vs24));
    CHECK(e.overflow.coeffs.empty());
}

TEST_CASE("factorial_expand of the (2,4) ambient class") {
    Poly c = (U(1) + U(2)) * Int(2) + T(1) + T(2) + T(3) + T(4);
    SchubertExpansion e = factorial_expand(c, 1);
    CHECK(e.coefficients.at(Partition({1})) == Poly::constant(vs24, Int(2)));
    CHECK(e.coefficients.at(Partition()) ==
          T(1) * Int(3) + T(2) * Int(3) + T(3) + T(4));
    CHECK(e.overflow.coeffs.empty());
}

TEST_CASE("factorial_expand banks width-overflow terms") {
    SchubertExpansion e = factorial_expand(schur_in_u(vs24, Partition({3})), 1);
    CHECK(e.coefficients.empty());
    CHECK(e.overflow.coeffs.size() == 1);
    CHECK(e.overflow.coeffs.at(Partition({3})) == Poly::one(vs24));
}

TEST_CASE("factorial_expand rejects non-symmetric input") {
    try {
        factorial_expand(U(1), 1);
        FAIL("expected NotSymmetric");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotSymmetric);
    }
}

TEST_CASE("lift basics and round trips") {
    SchubertExpansion unit(vs24, RestrictionConvention{-1, 1});
    unit.coefficients.emplace(Partition(), Poly::one(vs24));
    CHECK(lift(unit) == Poly::one(vs24));

    // Round-trip the (2,4) expansion example.
    Poly c = (U(1) + U(2)) * Int(2) + T(1) + T(2) + T(3) + T(4);
    CHECK(lift(factorial_expand(c, 1)) == c);

    // And a larger class under the resolved convention.
    RestrictionConvention conv25 = resolve_convention(2, 5);
    Poly c25 = uniform_matrix_class_lr(2, 5);
    CHECK(lift(factorial_expand(c25, conv25.eps_t)) == c25);
}

TEST_CASE("lift refuses overflow terms") {
    SchubertExpansion e = factorial_expand(schur_in_u(vs24, Partition({3})), 1);
    try {
        lift(e);
        FAIL("expected OverflowNonEmpty");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::OverflowNonEmpty);
    }
}

TEST_CASE("restrict_ambient substitutes u for basis t-variables") {
    RestrictionConvention conv;  // eps_u = -1
    CHECK(restrict_ambient(U(1) + U(2), 0b0011u, conv) == -T(1) - T(2));
    Poly c = (U(1) + U(2)) * Int(2) + T(1) + T(2) + T(3) + T(4);
    CHECK(restrict_ambient(c, 0b0011u, conv) == T(3) + T(4) - T(1) - T(2));
    CHECK(restrict_ambient(Poly::one(vs24), 0b0101u, conv) == Poly::one(vs24));
}

TEST_CASE("tuple_of_ambient matches the orbit tuple at (2,4)") {
    RestrictionConvention conv = resolve_convention(2, 4);
    GKMTuple from_class = tuple_of_ambient(uniform_matrix_class_lr(2, 4), conv);
    GKMTuple from_orbit = full_orbit_tuple(Matroid::uniform(2, 4));
    CHECK(from_class.values == from_orbit.values);

    GKMTuple ones = tuple_of_ambient(Poly::one(vs24), conv);
    for (const auto& [B, v] : ones.values) CHECK(v == Poly::one(vs24));

    GKMTuple t1s = tuple_of_ambient(T(1), conv);
    for (const auto& [B, v] : t1s.values) CHECK(v == T(1));
}

TEST_CASE("schubert_tuple divisor support depends on the t sign") {
    // eps_t = -1: the divisor tuple vanishes at exactly one basis ({1,2});
    // eps_t = +1: it vanishes nowhere.
    RestrictionConvention minus{-1, -1}, plus{-1, 1};
    GKMTuple neg = schubert_tuple(Partition({1}), vs24, minus);
    int zeros = 0;
    for (const auto& [B, v] : neg.values) {
        Poly expect = T(1) + T(2);
        for (int e : subset_elements(B)) expect -= T(e);
        CHECK(v == expect);
        if (v.is_zero()) ++zeros;
    }
    CHECK(zeros == 1);
    CHECK(neg.values.at(0b0011u).is_zero());

    GKMTuple pos = schubert_tuple(Partition({1}), vs24, plus);
    for (const auto& [B, v] : pos.values) CHECK_FALSE(v.is_zero());
}

TEST_CASE("schubert_tuple of the empty shape is constant 1") {
    RestrictionConvention conv = resolve_convention(2, 4);
    for (const auto& [B, v] : schubert_tuple(Partition(), vs24, conv).values)
        CHECK(v == Poly::one(vs24));
}

TEST_CASE("schubert_tuple shape must fit the box") {
    RestrictionConvention conv;
    CHECK_THROWS_AS(schubert_tuple(Partition({5}), vs24, conv), Error);
}

TEST_CASE("resolve_convention picks the sign with divisor support") {
    RestrictionConvention c24 = resolve_convention(2, 4);
    CHECK(c24.eps_u == -1);
    CHECK(c24.eps_t == -1);
    CHECK(resolve_convention(1, 2).eps_t == c24.eps_t);
    CHECK(resolve_convention(2, 5).eps_t == c24.eps_t);
}

TEST_CASE("every schubert tuple passes the divisibility check") {
    for (auto [r, n] : {std::pair{2, 4}, {2, 5}, {3, 5}}) {
        VarSpace vs(r, n);
        RestrictionConvention conv = resolve_convention(r, n);
        for (const Partition& lam : partitions_in_box(r, n - r))
            CHECK(gkm_check(schubert_tuple(lam, vs, conv)).empty());
    }
}

TEST_CASE("schubert_expand_tuple on basis tuples") {
    RestrictionConvention conv = resolve_convention(2, 4);
    GKMTuple f = schubert_tuple(Partition({1}), vs24, conv);
    SchubertExpansion e = schubert_expand_tuple(f, conv);
    CHECK(e.coefficients.size() == 1);
    CHECK(e.coefficients.at(Partition({1})) == Poly::one(vs24));

    GKMTuple sevens;
    sevens.r = 2;
    sevens.n = 4;
    for (std::uint32_t B : all_subsets(4, 2))
        sevens.values.emplace(B, Poly::constant(vs24, Int(7)));
    SchubertExpansion e7 = schubert_expand_tuple(sevens, conv);
    CHECK(e7.coefficients.size() == 1);
    CHECK(e7.coefficients.at(Partition()) == Poly::constant(vs24, Int(7)));
}

TEST_CASE("schubert_expand_tuple of the uniform (2,4) orbit tuple") {
    RestrictionConvention conv = resolve_convention(2, 4);
    SchubertExpansion e =
        schubert_expand_tuple(full_orbit_tuple(Matroid::uniform(2, 4)), conv);
    CHECK(e.coefficients.at(Partition({1})) == Poly::constant(vs24, Int(2)));
    Poly q0 = e.coefficients.at(Partition());
    CHECK(q0.is_homogeneous());
    CHECK(q0.total_degree() == 1);
    // Reconstruction: the lift restricts back to the tuple.
    Poly lifted = lift(e);
    GKMTuple back = tuple_of_ambient(lifted, conv);
    CHECK(back.values == full_orbit_tuple(Matroid::uniform(2, 4)).values);
}

TEST_CASE("frozen Schubert coefficients of the uniform (2,5) class") {
    VarSpace vs(2, 5);
    auto t = [&](int j) { return Poly::var_t(vs, j); };
    RestrictionConvention conv = resolve_convention(2, 5);
    SchubertExpansion e =
        schubert_expand_tuple(full_orbit_tuple(Matroid::uniform(2, 5)), conv);

    Poly q_empty = t(1) * t(1) + t(1) * t(2) - t(1) * t(3) - t(1) * t(4) - t(1) * t(5) +
                   t(2) * t(2) - t(2) * t(3) - t(2) * t(4) - t(2) * t(5) +
                   t(3) * t(4) + t(3) * t(5) + t(4) * t(5);
    Poly q_1 = -t(1) * Int(2) - t(2) - t(3) + t(4) * Int(2) + t(5) * Int(2);

    CHECK(e.coefficients.at(Partition()) == q_empty);
    CHECK(e.coefficients.at(Partition({1})) == q_1);
    CHECK(e.coefficients.at(Partition({1, 1})) == Poly::one(vs));
    CHECK(e.coefficients.at(Partition({2})) == Poly::constant(vs, Int(3)));

    // The lifted class is the ambient uniform class.
    CHECK(lift(e) == uniform_matrix_class_lr(2, 5));
}

TEST_CASE("expansion reproduces the tuple as a Schubert-tuple combination") {
    RestrictionConvention conv = resolve_convention(2, 4);
    GKMTuple f = full_orbit_tuple(Matroid::uniform(2, 4));
    SchubertExpansion e = schubert_expand_tuple(f, conv);
    for (std::uint32_t B : all_subsets(4, 2)) {
        Poly sum = Poly::zero(vs24);
        for (const auto& [lam, q] : e.coefficients)
            sum += q * schubert_tuple(lam, vs24, conv).values.at(B);
        CHECK(sum == f.values.at(B));
    }
}

TEST_CASE("schubert_expand_tuple rejects tuples outside the span") {
    RestrictionConvention conv = resolve_convention(2, 4);
    // A tuple failing the divisibility conditions is rejected up front.
    GKMTuple bad;
    bad.r = 2;
    bad.n = 4;
    for (std::uint32_t B : all_subsets(4, 2)) bad.values.emplace(B, Poly::zero(vs24));
    bad.values.at(0b0011u) = T(1);
    CHECK_THROWS_AS(schubert_expand_tuple(bad, conv), Error);
}

TEST_CASE("width bound holds for expanded orbit tuples") {
    for (auto [r, n] : {std::pair{2, 4}, {2, 5}}) {
        RestrictionConvention conv = resolve_convention(r, n);
        GKMTuple f = full_orbit_tuple(Matroid::uniform(r, n));
        SchubertExpansion e = schubert_expand_tuple(f, conv);
        CHECK(e.overflow.coeffs.empty());
        Poly lifted = lift(e);
        for (int k = 1; k <= r; ++k) CHECK(lifted.max_degree_in_u_var(k) <= n - r);
        // Re-expanding the lifted class directly gives the same coefficients.
        SchubertExpansion again = factorial_expand(lifted, conv.eps_t);
        CHECK(again.overflow.coeffs.empty());
        CHECK(again.coefficients == e.coefficients);
    }
}
