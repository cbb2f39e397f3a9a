#include "orbitclass/localize.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace orbitclass {

namespace {

// Shared-prefix walk over the permutations whose greedy lex-first basis is B:
// a prefix is viable only while the greedily kept set stays inside B, and
// every completed permutation then ends exactly at B. Each recursion returns
// the sum of the chain fractions of the subtree hanging off `last`.
//
// In the Chow sum the edge last -> e contributes 1/(t_e - t_last); in the
// K-theory sum it contributes t_last/(t_last - t_e), the cleared form of
// 1/(1 - t_e/t_last).
struct PermSum {
    const Matroid& m;
    std::uint32_t B;
    VarSpace vs;
    bool k_theory;
    std::uint32_t full;

    LinFormFraction walk(std::uint32_t used, std::uint32_t kept, int last) {
        if (used == full) return LinFormFraction::from_poly(Poly::one(vs));
        LinFormFraction total = LinFormFraction::zero(vs);
        for (int e = 1; e <= m.n(); ++e) {
            const std::uint32_t bit = 1u << (e - 1);
            if (used & bit) continue;
            std::uint32_t cand = kept | bit;
            std::uint32_t next_kept = m.is_independent(cand) ? cand : kept;
            if (next_kept & ~B) continue;
            LinFormFraction sub = walk(used | bit, next_kept, e);
            if (sub.is_zero()) continue;
            if (k_theory) {
                sub.divide_by_form(last, e);
                sub.scale_numerator(Poly::var_t(vs, last));
            } else {
                sub.divide_by_form(e, last);
            }
            total = total + sub;
        }
        return total;
    }

    LinFormFraction run() {
        LinFormFraction total = LinFormFraction::zero(vs);
        for (int e = 1; e <= m.n(); ++e) {
            const std::uint32_t bit = 1u << (e - 1);
            std::uint32_t next_kept = m.is_independent(bit) ? bit : 0;
            if (next_kept & ~B) continue;
            total = total + walk(bit, next_kept, e);
        }
        return total;
    }
};

void require_fixed_point(const Matroid& m, std::uint32_t B) {
    if (std::popcount(B) != m.rank() || (B >> m.n()) != 0)
        throw Error(ErrorKind::InvalidArgument,
                    "B must be an r-subset of the ground set");
}

}  // namespace

Poly orbit_chow_localization(const Matroid& m, std::uint32_t B) {
    require_fixed_point(m, B);
    VarSpace vs(m.rank(), m.n());
    if (!m.is_basis(B)) return Poly::zero(vs);
    if (m.rank() == m.n()) return Poly::one(vs);

    PermSum sum{m, B, vs, /*k_theory=*/false, (1u << m.n()) - 1};
    LinFormFraction total = sum.run();
    for (int i = 1; i <= m.n(); ++i) {
        if (!(B & (1u << (i - 1)))) continue;
        for (int j = 1; j <= m.n(); ++j)
            if (!(B & (1u << (j - 1)))) total.multiply_by_form(j, i);
    }
    try {
        return total.to_poly();
    } catch (const Error&) {
        throw Error(ErrorKind::InternalNonPolynomial,
                    "localization sum did not reduce to a polynomial");
    }
}

Rat orbit_chow_localization_eval(const Matroid& m, std::uint32_t B,
                                 const std::vector<Rat>& tvals) {
    require_fixed_point(m, B);
    if (static_cast<int>(tvals.size()) != m.n())
        throw Error(ErrorKind::InvalidArgument, "point must list one value per t variable");
    for (std::size_t a = 0; a < tvals.size(); ++a)
        for (std::size_t b = a + 1; b < tvals.size(); ++b)
            if (tvals[a] == tvals[b])
                throw Error(ErrorKind::DenominatorZero,
                            "evaluation point must have pairwise distinct coordinates");
    if (!m.is_basis(B)) return Rat(0);
    if (m.rank() == m.n()) return Rat(1);

    const std::uint32_t full = (1u << m.n()) - 1;
    std::function<Rat(std::uint32_t, std::uint32_t, int)> walk =
        [&](std::uint32_t used, std::uint32_t kept, int last) -> Rat {
        if (used == full) return Rat(1);
        Rat total(0);
        for (int e = 1; e <= m.n(); ++e) {
            const std::uint32_t bit = 1u << (e - 1);
            if (used & bit) continue;
            std::uint32_t cand = kept | bit;
            std::uint32_t next_kept = m.is_independent(cand) ? cand : kept;
            if (next_kept & ~B) continue;
            total += walk(used | bit, next_kept, e) / (tvals[e - 1] - tvals[last - 1]);
        }
        return total;
    };

    Rat sum(0);
    for (int e = 1; e <= m.n(); ++e) {
        const std::uint32_t bit = 1u << (e - 1);
        std::uint32_t next_kept = m.is_independent(bit) ? bit : 0;
        if (next_kept & ~B) continue;
        sum += walk(bit, next_kept, e);
    }
    for (int i = 1; i <= m.n(); ++i) {
        if (!(B & (1u << (i - 1)))) continue;
        for (int j = 1; j <= m.n(); ++j)
            if (!(B & (1u << (j - 1)))) sum *= tvals[j - 1] - tvals[i - 1];
    }
    return sum;
}

Poly orbit_chow_localization_telescoped(const Matroid& m, std::uint32_t B) {
    if (!m.is_uniform())
        throw Error(ErrorKind::NotUniform, "the single-sum form requires a uniform matroid");
    require_fixed_point(m, B);
    VarSpace vs(m.rank(), m.n());
    if (m.rank() == m.n()) return Poly::one(vs);

    LinFormFraction total = LinFormFraction::zero(vs);
    for (int b = 1; b <= m.n(); ++b) {
        if (!(B & (1u << (b - 1)))) continue;
        LinFormFraction term = LinFormFraction::from_poly(Poly::one(vs));
        for (int i = 1; i <= m.n(); ++i) {
            if (i == b) continue;
            if (B & (1u << (i - 1)))
                term.divide_by_form(b, i);  // 1/(t_b - t_i)
            else
                term.divide_by_form(i, b);  // 1/(t_i - t_b)
        }
        total = total + term;
    }
    for (int i = 1; i <= m.n(); ++i) {
        if (!(B & (1u << (i - 1)))) continue;
        for (int j = 1; j <= m.n(); ++j)
            if (!(B & (1u << (j - 1)))) total.multiply_by_form(j, i);
    }
    try {
        return total.to_poly();
    } catch (const Error&) {
        throw Error(ErrorKind::InternalNonPolynomial,
                    "single-sum localization did not reduce to a polynomial");
    }
}

LaurentFraction orbit_k_localization(const Matroid& m, std::uint32_t B) {
    require_fixed_point(m, B);
    VarSpace vs(m.rank(), m.n());
    if (!m.is_basis(B)) return LaurentFraction::zero(vs);

    PermSum sum{m, B, vs, /*k_theory=*/true, (1u << m.n()) - 1};
    LinFormFraction total = sum.run();
    // prod_{i in B, j notin B} (1 - t_j/t_i) = prod (t_i - t_j) / t_B^{n-r}
    std::vector<int> offsets(m.n(), 0);
    for (int i = 1; i <= m.n(); ++i) {
        if (!(B & (1u << (i - 1)))) continue;
        offsets[i - 1] = -(m.n() - m.rank());
        for (int j = 1; j <= m.n(); ++j)
            if (!(B & (1u << (j - 1)))) total.multiply_by_form(i, j);
    }
    Poly num(vs);
    try {
        num = total.to_poly();
    } catch (const Error&) {
        throw Error(ErrorKind::InternalNonPolynomial,
                    "K localization sum did not reduce to a polynomial");
    }
    if (num.is_zero()) return LaurentFraction::zero(vs);
    return LaurentFraction(num, Poly::one(vs), offsets);
}

Poly kms_chow_from_k(const LaurentFraction& k, int expected_codim) {
    if (k.is_zero())
        throw Error(ErrorKind::ZeroPolynomial, "the K class is zero");
    Poly num = k.numerator().subst_t_one_minus();
    Poly den = k.denominator().subst_t_one_minus();
    auto [dn, fn] = num.lowest_form();
    auto [dd, fd] = den.lowest_form();
    auto q = exact_divide(fn, fd);
    if (!q)
        throw Error(ErrorKind::NotDivisible,
                    "lowest form of the numerator is not divisible by that of the denominator");
    int degree = dn - dd;
    if (degree != expected_codim)
        throw Error(ErrorKind::CodimMismatch,
                    "lowest form has degree " + std::to_string(degree) + ", expected " +
                        std::to_string(expected_codim));
    return *q;
}

GKMTuple full_orbit_tuple(const Matroid& m) {
    GKMTuple f;
    f.r = m.rank();
    f.n = m.n();
    for (std::uint32_t B : all_subsets(m.n(), m.rank()))
        f.values.emplace(B, orbit_chow_localization(m, B));
    return f;
}

std::vector<GKMViolation> gkm_check(const GKMTuple& f) {
    for (std::uint32_t B : all_subsets(f.n, f.r))
        if (!f.values.count(B))
            throw Error(ErrorKind::InvalidArgument,
                        "tuple is missing a fixed point entry");

    std::vector<GKMViolation> bad;
    for (std::uint32_t B : all_subsets(f.n, f.r)) {
        const Poly& fB = f.values.at(B);
        for (int i = 1; i <= f.n; ++i) {
            if (!(B & (1u << (i - 1)))) continue;
            for (int j = 1; j <= f.n; ++j) {
                if (B & (1u << (j - 1))) continue;
                std::uint32_t neighbor = (B & ~(1u << (i - 1))) | (1u << (j - 1));
                Poly diff = fB - f.values.at(neighbor);
                if (!diff.subst_t_equal(j, i).is_zero())
                    bad.push_back({B, i, j});
            }
        }
    }
    return bad;
}

}  // namespace orbitclass
