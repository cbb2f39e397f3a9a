#include <random>

#include "doctest.h"
#include "orbitclass/schur.hpp"

using namespace orbitclass;

namespace {

const VarSpace vs24(2, 4);

Poly T(int j) { return Poly::var_t(vs24, j); }
Poly U(int k) { return Poly::var_u(vs24, k); }

}  // namespace

TEST_CASE("schur_poly single-row basics") {
    CHECK(schur_poly(vs24, Partition({1}), t_args(vs24, {3, 4})) == T(3) + T(4));
    CHECK(schur_poly(vs24, Partition({1}), t_args(vs24, {1, 2}, -1)) == -T(1) - T(2));
}

TEST_CASE("schur_poly counts tableaux at all-ones arguments") {
    EvalArgs ones = {EvalArg::constant(Rat(1)), EvalArg::constant(Rat(1))};
    CHECK(schur_poly(vs24, Partition({2, 1}), ones) == Poly::constant(vs24, Int(2)));
}

TEST_CASE("schur_in_u") {
    CHECK(schur_in_u(vs24, Partition({1})) == U(1) + U(2));
    CHECK(schur_in_u(vs24, Partition({1, 1, 1})) == Poly::zero(vs24));
    CHECK(schur_in_u(vs24, Partition({2})) == U(1) * U(1) + U(1) * U(2) + U(2) * U(2));
}

TEST_CASE("lr_coeff small cases") {
    CHECK(lr_coeff(Partition(), Partition({1}), Partition({1})) == 1);
    // s_1 * s_1 = s_2 + s_11, so (2,1) does not appear.
    CHECK(lr_coeff(Partition({1}), Partition({1}), Partition({2, 1})) == 0);
    CHECK(lr_coeff(Partition({2}), Partition({1}), Partition({2, 1})) == 1);
    // Weight mismatch is zero, not an error.
    CHECK(lr_coeff(Partition({1}), Partition({1}), Partition({3})) == 0);
}

TEST_CASE("lr_coeff is symmetric in the two factors") {
    auto box = partitions_in_box(2, 2);
    for (const Partition& a : box)
        for (const Partition& b : box)
            for (const Partition& nu : partitions_in_box(3, 4))
                CHECK(lr_coeff(a, b, nu) == lr_coeff(b, a, nu));
}

TEST_CASE("schur_expand basics") {
    Poly p = (U(1) + U(2)) * Poly::constant(vs24, Int(2)) + T(1);
    SchurExpansion e = schur_expand(p);
    CHECK(e.coeffs.size() == 2);
    CHECK(e.coeffs.at(Partition({1})) == Poly::constant(vs24, Int(2)));
    CHECK(e.coeffs.at(Partition()) == T(1));

    Poly q = schur_in_u(vs24, Partition({2})) + schur_in_u(vs24, Partition({1, 1}));
    SchurExpansion f = schur_expand(q);
    CHECK(f.coeffs.size() == 2);
    CHECK(f.coeffs.at(Partition({2})) == Poly::one(vs24));
    CHECK(f.coeffs.at(Partition({1, 1})) == Poly::one(vs24));

    // u_1 u_2 (u_1 + u_2) = s_{(2,1)}(u_1, u_2)
    SchurExpansion g = schur_expand(U(1) * U(2) * (U(1) + U(2)));
    CHECK(g.coeffs.size() == 1);
    CHECK(g.coeffs.at(Partition({2, 1})) == Poly::one(vs24));
}

TEST_CASE("schur_expand rejects non-symmetric input") {
    try {
        schur_expand(U(1) + T(1));
        FAIL("expected NotSymmetric");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotSymmetric);
    }
}

TEST_CASE("schur_expand inverts evaluation on random expansions") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto box = partitions_in_box(vs24.r, vs24.n - vs24.r);
    for (int trial = 0; trial < 20; ++trial) {
        SchurExpansion e(vs24);
        for (const Partition& lam : box) {
            Poly c = Poly::zero(vs24);
            int a = coef(rng), b = coef(rng);
            if (a != 0) c += Poly::constant(vs24, Int(a));
            if (b != 0) c += T(1 + static_cast<int>(rng() % 4)) * Int(b);
            if (!c.is_zero()) e.coeffs.emplace(lam, c);
        }
        SchurExpansion back = schur_expand(expansion_value(e));
        CHECK(back.coeffs == e.coeffs);
    }
}

TEST_CASE("Pieri sum over the 2x2 box with three arguments") {
    VarSpace vs(3, 3);
    EvalArgs args = u_args(vs);
    for (const Partition& lam : partitions_in_box(2, 2)) {
        for (const Partition& mu : partitions_in_box(2, 2)) {
            Poly product = schur_poly(vs, lam, args) * schur_poly(vs, mu, args);
            Poly sum = Poly::zero(vs);
            // All nu of the right weight with at most 3 rows contribute.
            for (const Partition& nu : partitions_in_box(3, 4)) {
                if (nu.weight() != lam.weight() + mu.weight()) continue;
                Int c = lr_coeff(lam, mu, nu);
                if (c != 0) sum += schur_poly(vs, nu, args) * c;
            }
            CHECK(product == sum);
        }
    }
}

TEST_CASE("tableau sum agrees with Jacobi-Trudi in a 3x3 box") {
    VarSpace vs(4, 4);
    std::vector<EvalArgs> argsets = {
        u_args(vs),
        t_args(vs, {1, 2, 3}, -1),
        {EvalArg::u(1), EvalArg::t(2, -1), EvalArg::constant(Rat(1)), EvalArg::t(4)},
    };
    for (const Partition& lam : partitions_in_box(3, 3))
        for (const EvalArgs& args : argsets)
            CHECK(schur_poly(vs, lam, args) == schur_poly_jt(vs, lam, args));
}

TEST_CASE("omega_transpose") {
    SchurExpansion e(vs24);
    e.coeffs.emplace(Partition({1}), Poly::one(vs24));
    SchurExpansion f = omega_transpose(e);
    CHECK(f.coeffs.at(Partition({1})) == Poly::one(vs24));

    SchurExpansion g(vs24);
    g.coeffs.emplace(Partition({2}), Poly::one(vs24));
    CHECK(omega_transpose(g).coeffs.count(Partition({1, 1})) == 1);

    SchurExpansion h(vs24);
    h.coeffs.emplace(Partition({2, 1}), T(1));
    CHECK(omega_transpose(h).coeffs.at(Partition({2, 1})) == T(1));
}

TEST_CASE("omega_transpose overflow error") {
    // (1,1,1) transposes to (3), fine at r=2; but (3) needs 3 rows transposed.
    SchurExpansion e(vs24);
    e.coeffs.emplace(Partition({3}), Poly::one(vs24));
    try {
        omega_transpose(e);
        FAIL("expected TransposeOverflow");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::TransposeOverflow);
    }
}

TEST_CASE("omega_transpose is an involution on box-bounded expansions") {
    // Partitions in the 2x2 box at r=2: shapes and transposes both fit.
    SchurExpansion e(vs24);
    e.coeffs.emplace(Partition({2}), T(1));
    e.coeffs.emplace(Partition({1, 1}), T(2) + T(3));
    e.coeffs.emplace(Partition({2, 1}), Poly::constant(vs24, Int(-3)));
    SchurExpansion back = omega_transpose(omega_transpose(e));
    CHECK(back.coeffs == e.coeffs);
}

TEST_CASE("factorial_schur basics") {
    CHECK(factorial_schur(vs24, Partition(), 1) == Poly::one(vs24));
    CHECK(factorial_schur(vs24, Partition({1}), 1) == U(1) + U(2) - T(1) - T(2));
    CHECK(factorial_schur(vs24, Partition({1}), -1) == U(1) + U(2) + T(1) + T(2));
}

TEST_CASE("factorial_schur shape must fit the r x (n-r) box") {
    try {
        factorial_schur(vs24, Partition({3}), 1);
        FAIL("expected ShapeOutOfBox");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ShapeOutOfBox);
    }
    CHECK_THROWS_AS(factorial_schur(vs24, Partition({1, 1, 1}), 1), Error);
}

TEST_CASE("factorial_schur top u-degree part is the plain Schur polynomial") {
    for (int r = 1; r <= 3; ++r) {
        for (int n = r + 1; n <= 5; ++n) {
            VarSpace vs(r, n);
            for (const Partition& lam : partitions_in_box(r, n - r)) {
                for (int sign : {1, -1}) {
                    Poly diff = factorial_schur(vs, lam, sign) - schur_in_u(vs, lam);
                    if (!diff.is_zero()) CHECK(diff.max_u_degree() < lam.weight());
                }
            }
        }
    }
}

TEST_CASE("schur_principal") {
    CHECK(schur_principal(Partition({1}), 2) == 2);
    CHECK(schur_principal(Partition({2, 1}), 1) == 0);
    CHECK(schur_principal(Partition({2, 1}), 2) == 2);
    CHECK(schur_principal(Partition(), 0) == 1);
    // Against direct SST enumeration.
    for (const Partition& lam : partitions_in_box(3, 3))
        for (int k = 0; k <= 3; ++k)
            CHECK(schur_principal(lam, k) == Int(sst_enumerate(lam, k).size()));
}

TEST_CASE("schur_eval matches polynomial evaluation") {
    std::vector<Rat> args = {Rat(2), Rat(-3), Rat(5)};
    VarSpace vs(3, 3);
    for (const Partition& lam : partitions_in_box(2, 2)) {
        Poly p = schur_poly(vs, lam, u_args(vs));
        std::vector<Rat> pt = {Rat(2), Rat(-3), Rat(5), Rat(0), Rat(0), Rat(0)};
        CHECK(schur_eval(lam, args) == p.eval(pt));
    }
}

TEST_CASE("Q-side localization display at (2,4)") {
    // Expanding s_nu over the joint alphabet (u_1, u_2, t_1..t_4) and applying
    // omega on the u side must match the Littlewood-Richardson splitting
    // sum_{lam,mu} c^nu_{lam,mu} s_lam(t) s_{mu'}(u).
    EvalArgs joint = u_args(vs24);
    for (const EvalArg& a : t_args(vs24, {1, 2, 3, 4})) joint.push_back(a);
    for (const Partition& nu : partitions_in_box(2, 2)) {
        SchurExpansion e = schur_expand(schur_poly(vs24, nu, joint));
        Poly lhs = expansion_value(omega_transpose(e));
        Poly rhs = Poly::zero(vs24);
        for (const Partition& lam : subpartitions(nu))
            for (const Partition& mu : subpartitions(nu)) {
                if (lam.weight() + mu.weight() != nu.weight()) continue;
                Int c = lr_coeff(lam, mu, nu);
                if (c == 0) continue;
                rhs += schur_poly(vs24, lam, t_args(vs24, {1, 2, 3, 4})) *
                       schur_in_u(vs24, mu.transpose()) * c;
            }
        CHECK(lhs == rhs);
    }
}
