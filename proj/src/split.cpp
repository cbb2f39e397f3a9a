#include "orbitclass/split.hpp"

#include <algorithm>

namespace orbitclass {

SchubertExpansion factorial_expand(const Poly& c, int t_sign) {
    const VarSpace& vs = c.space();
    if (!c.is_symmetric_in_u())
        throw Error(ErrorKind::NotSymmetric, "class is not symmetric in the u variables");

    SchubertExpansion out(vs, RestrictionConvention{-1, t_sign});
    Poly w = c;
    while (!w.is_zero()) {
        const int d = w.max_u_degree();
        SchurExpansion top = schur_expand(w.u_degree_part(d));
        for (const auto& [lam, q] : top.coeffs) {
            if (lam.part(1) <= vs.n - vs.r) {
                w -= q * factorial_schur(vs, lam, t_sign);
                out.coefficients.emplace(lam, q);
            } else {
                w -= q * schur_in_u(vs, lam);
                out.overflow.coeffs.emplace(lam, q);
            }
        }
    }
    return out;
}

Poly lift(const SchubertExpansion& e) {
    if (!e.overflow.coeffs.empty())
        throw Error(ErrorKind::OverflowNonEmpty,
                    "expansion has width-overflow terms and cannot be lifted");
    Poly total(e.vs);
    for (const auto& [lam, q] : e.coefficients)
        total += q * factorial_schur(e.vs, lam, e.conv.eps_t);
    return total;
}

Poly restrict_ambient(const Poly& c, std::uint32_t B, const RestrictionConvention& conv) {
    return c.restrict_u(subset_elements(B), conv.eps_u);
}

GKMTuple tuple_of_ambient(const Poly& c, const RestrictionConvention& conv) {
    const VarSpace& vs = c.space();
    GKMTuple f;
    f.r = vs.r;
    f.n = vs.n;
    for (std::uint32_t B : all_subsets(vs.n, vs.r))
        f.values.emplace(B, restrict_ambient(c, B, conv));
    return f;
}

GKMTuple schubert_tuple(const Partition& lam, const VarSpace& vs,
                        const RestrictionConvention& conv) {
    return tuple_of_ambient(factorial_schur(vs, lam, conv.eps_t), conv);
}

RestrictionConvention resolve_convention(int r, int n) {
    VarSpace vs(r, n);
    const Partition divisor{1};
    for (int eps_t : {-1, +1}) {
        RestrictionConvention conv{-1, eps_t};
        bool ok = true;
        for (const Partition& lam : partitions_in_box(r, n - r)) {
            GKMTuple tup = schubert_tuple(lam, vs, conv);
            if (!gkm_check(tup).empty()) {
                ok = false;
                break;
            }
            if (lam == divisor) {
                int zeros = 0;
                for (const auto& [B, value] : tup.values)
                    if (value.is_zero()) ++zeros;
                if (zeros != 1) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return conv;
    }
    throw Error(ErrorKind::NoConsistentConvention,
                "no t sign passes both the divisibility and divisor-support checks");
}

SchubertExpansion schubert_expand_tuple(const GKMTuple& f, const RestrictionConvention& conv) {
    VarSpace vs(f.r, f.n);
    if (!gkm_check(f).empty())
        throw Error(ErrorKind::InvalidArgument,
                    "input tuple fails the divisibility conditions");

    const std::vector<Partition> shapes = partitions_in_box(f.r, f.n - f.r);
    const std::vector<std::uint32_t> subsets = all_subsets(f.n, f.r);
    std::map<Partition, GKMTuple> schubert;
    for (const Partition& lam : shapes)
        schubert.emplace(lam, schubert_tuple(lam, vs, conv));

    GKMTuple residual = f;
    SchubertExpansion out(vs, conv);
    for (std::size_t idx = 0; idx < shapes.size(); ++idx) {
        const Partition& lam = shapes[idx];
        const GKMTuple& own = schubert.at(lam);

        std::uint32_t pivot = 0;
        bool found = false;
        for (std::uint32_t B : subsets) {
            if (own.values.at(B).is_zero()) continue;
            bool later_vanish = true;
            for (std::size_t j = idx + 1; j < shapes.size() && later_vanish; ++j)
                later_vanish = schubert.at(shapes[j]).values.at(B).is_zero();
            if (later_vanish) {
                pivot = B;
                found = true;
                break;
            }
        }
        if (!found)
            throw Error(ErrorKind::NotInSpan,
                        "no pivot basis separates " + lam.to_string() +
                            " from the remaining shapes");

        auto q = exact_divide(residual.values.at(pivot), own.values.at(pivot));
        if (!q)
            throw Error(ErrorKind::NotInSpan,
                        "coefficient of " + lam.to_string() +
                            " is not polynomial at its pivot basis");
        if (q->is_zero()) continue;
        for (std::uint32_t B : subsets)
            residual.values.at(B) -= *q * own.values.at(B);
        out.coefficients.emplace(lam, std::move(*q));
    }

    for (std::uint32_t B : subsets)
        if (!residual.values.at(B).is_zero())
            throw Error(ErrorKind::NotInSpan,
                        "reconstruction does not match the tuple at a basis");
    return out;
}

}  // namespace orbitclass
