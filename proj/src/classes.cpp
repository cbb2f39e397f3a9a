#include "orbitclass/classes.hpp"

#include <algorithm>
#include <bit>

#include "orbitclass/matroid.hpp"

namespace orbitclass {

namespace {

void check_rn(int r, int n) {
    if (r < 1 || r >= n)
        throw Error(ErrorKind::InvalidArgument, "require 1 <= r < n");
}

void check_subset(int r, int n, std::uint32_t B) {
    if (std::popcount(B) != r || (B >> n) != 0)
        throw Error(ErrorKind::InvalidArgument, "B must be an r-subset of the ground set");
}

std::vector<int> complement_elements(std::uint32_t B, int n) {
    std::vector<int> out;
    for (int j = 1; j <= n; ++j)
        if (!(B & (1u << (j - 1)))) out.push_back(j);
    return out;
}

}  // namespace

Poly uniform_orbit_localized(int r, int n, std::uint32_t B) {
    check_rn(r, n);
    check_subset(r, n, B);
    VarSpace vs(r, n);
    EvalArgs inside = t_args(vs, subset_elements(B), -1);
    EvalArgs outside = t_args(vs, complement_elements(B, n), +1);

    Poly total(vs);
    for (const Partition& lam : partitions_in_box(r - 1, n - r - 1)) {
        Partition comp = rect_complement(lam, r - 1, n - r - 1);
        total += schur_poly(vs, lam, inside) * schur_poly(vs, comp.transpose(), outside);
    }
    return total;
}

Rat uniform_orbit_localized_eval(int r, int n, std::uint32_t B,
                                 const std::vector<Rat>& tvals) {
    check_rn(r, n);
    check_subset(r, n, B);
    if (static_cast<int>(tvals.size()) != n)
        throw Error(ErrorKind::InvalidArgument, "point must list one value per t variable");
    std::vector<Rat> inside, outside;
    for (int j = 1; j <= n; ++j) {
        if (B & (1u << (j - 1)))
            inside.push_back(-tvals[j - 1]);
        else
            outside.push_back(tvals[j - 1]);
    }
    Rat total(0);
    for (const Partition& lam : partitions_in_box(r - 1, n - r - 1)) {
        Partition comp = rect_complement(lam, r - 1, n - r - 1);
        total += schur_eval(lam, inside) * schur_eval(comp.transpose(), outside);
    }
    return total;
}

namespace {

// Shared enumeration for the triple sum: visits every (lam, mu, nu) with
// lam in the (r-1) x (n-r-1) box and c^{complement(lam)}_{mu,nu} nonzero.
template <typename Visit>
void lr_sum_terms(int r, int n, Visit visit) {
    for (const Partition& lam : partitions_in_box(r - 1, n - r - 1)) {
        Partition comp = rect_complement(lam, r - 1, n - r - 1);
        std::vector<Partition> subs = subpartitions(comp);
        for (const Partition& mu : subs)
            for (const Partition& nu : subs) {
                if (mu.weight() + nu.weight() != comp.weight()) continue;
                Int c = lr_coeff(mu, nu, comp);
                if (c != 0) visit(lam, mu, nu, c);
            }
    }
}

std::vector<int> all_t_indices(int n) {
    std::vector<int> idx(n);
    for (int j = 0; j < n; ++j) idx[j] = j + 1;
    return idx;
}

}  // namespace

Poly uniform_matrix_class_lr(int r, int n) {
    check_rn(r, n);
    VarSpace vs(r, n);
    EvalArgs all_t = t_args(vs, all_t_indices(n));
    Poly total(vs);
    lr_sum_terms(r, n, [&](const Partition& lam, const Partition& mu, const Partition& nu,
                           const Int& c) {
        total += schur_in_u(vs, lam) * schur_poly(vs, mu.transpose(), all_t) *
                 schur_in_u(vs, nu) * c;
    });
    return total;
}

Rat uniform_matrix_class_lr_eval(int r, int n, const std::vector<Rat>& point) {
    check_rn(r, n);
    if (static_cast<int>(point.size()) != r + n)
        throw Error(ErrorKind::InvalidArgument, "point must list u values then t values");
    std::vector<Rat> uvals(point.begin(), point.begin() + r);
    std::vector<Rat> tvals(point.begin() + r, point.end());
    Rat total(0);
    lr_sum_terms(r, n, [&](const Partition& lam, const Partition& mu, const Partition& nu,
                           const Int& c) {
        total += Rat(c) * schur_eval(lam, uvals) * schur_eval(mu.transpose(), tvals) *
                 schur_eval(nu, uvals);
    });
    return total;
}

namespace {

Partition box_rectangle(int parts, int size) {
    if (parts <= 0 || size <= 0) return Partition();
    return Partition(std::vector<int>(parts, size));
}

// The split-alphabet terms: (beta, gamma, delta, coefficient) with
// s_beta on the t side and s_gamma, s_delta on the u side.
template <typename Visit>
void omega_sum_terms(int r, int n, Visit visit) {
    Partition rect = box_rectangle(n - r - 1, r - 1);
    std::vector<Partition> subs = subpartitions(rect);
    for (const Partition& alpha : subs)
        for (const Partition& beta : subs) {
            if (alpha.weight() + beta.weight() != rect.weight()) continue;
            Int c1 = lr_coeff(alpha, beta, rect);
            if (c1 == 0) continue;
            Partition alpha_t = alpha.transpose();
            std::vector<Partition> inner = subpartitions(alpha_t);
            for (const Partition& gamma : inner)
                for (const Partition& delta : inner) {
                    if (gamma.weight() + delta.weight() != alpha_t.weight()) continue;
                    Int c2 = lr_coeff(gamma, delta, alpha_t);
                    if (c2 != 0) visit(beta, gamma, delta, c1 * c2);
                }
        }
}

}  // namespace

Poly uniform_matrix_class_omega(int r, int n) {
    check_rn(r, n);
    VarSpace vs(r, n);
    EvalArgs all_t = t_args(vs, all_t_indices(n));
    Poly total(vs);
    omega_sum_terms(r, n, [&](const Partition& beta, const Partition& gamma,
                              const Partition& delta, const Int& c) {
        total += schur_poly(vs, beta, all_t) * schur_in_u(vs, gamma) *
                 schur_in_u(vs, delta) * c;
    });
    return total;
}

Rat uniform_matrix_class_omega_eval(int r, int n, const std::vector<Rat>& point) {
    check_rn(r, n);
    if (static_cast<int>(point.size()) != r + n)
        throw Error(ErrorKind::InvalidArgument, "point must list u values then t values");
    std::vector<Rat> uvals(point.begin(), point.begin() + r);
    std::vector<Rat> tvals(point.begin() + r, point.end());
    Rat total(0);
    omega_sum_terms(r, n, [&](const Partition& beta, const Partition& gamma,
                              const Partition& delta, const Int& c) {
        total += Rat(c) * schur_eval(beta, tvals) * schur_eval(gamma, uvals) *
                 schur_eval(delta, uvals);
    });
    return total;
}

bool cauchy_check(int size_T, int size_V) {
    if (size_T < 1 || size_V < 1 || size_T > 4 || size_V > 4)
        throw Error(ErrorKind::InvalidArgument, "alphabet sizes must be between 1 and 4");
    // u variables play the T alphabet, the first size_V t variables play V.
    VarSpace vs(size_T, std::max(size_T, size_V));
    Poly lhs = Poly::one(vs);
    for (int i = 1; i <= size_T; ++i)
        for (int j = 1; j <= size_V; ++j)
            lhs = lhs * (Poly::var_u(vs, i) - Poly::var_t(vs, j));

    std::vector<int> vidx(size_V);
    for (int j = 0; j < size_V; ++j) vidx[j] = j + 1;
    EvalArgs targs = u_args(vs);
    EvalArgs vargs = t_args(vs, vidx, -1);

    Partition rect = box_rectangle(size_T, size_V);
    Poly rhs(vs);
    std::vector<Partition> subs = subpartitions(rect);
    for (const Partition& nu : subs)
        for (const Partition& mu : subs) {
            if (nu.weight() + mu.weight() != rect.weight()) continue;
            Int c = lr_coeff(nu, mu, rect);
            if (c == 0) continue;
            rhs += schur_poly(vs, nu, targs) * schur_poly(vs, mu.transpose(), vargs) * c;
        }
    return lhs == rhs;
}

std::vector<KlyachkoTerm> klyachko_terms(const Partition& lam, int r, int n,
                                         int start_index) {
    check_rn(r, n);
    if (start_index != 0 && start_index != 1)
        throw Error(ErrorKind::InvalidArgument, "start_index must be 0 or 1");
    if (!lam.fits_in(r, n - r))
        throw Error(ErrorKind::ShapeConstraint,
                    lam.to_string() + " does not fit the " + std::to_string(r) + "x" +
                        std::to_string(n - r) + " box");
    if (lam.weight() != n - 1)
        throw Error(ErrorKind::ShapeConstraint,
                    "the shape must be a partition of n-1 = " + std::to_string(n - 1));
    std::vector<KlyachkoTerm> terms;
    for (int i = start_index; i <= r; ++i) {
        KlyachkoTerm term;
        term.i = i;
        mpz_bin_uiui(term.binom.get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(i));
        term.schur = schur_principal(lam, r - i);
        term.value = term.binom * term.schur;
        if (i % 2 == 1) term.value = -term.value;
        terms.push_back(std::move(term));
    }
    return terms;
}

Int klyachko_coefficient(const Partition& lam, int r, int n, int start_index) {
    Int total = 0;
    for (const KlyachkoTerm& term : klyachko_terms(lam, r, n, start_index))
        total += term.value;
    return total;
}

std::vector<DegreeTerm> uniform_degree_terms(int r, int n) {
    check_rn(r, n);
    std::vector<DegreeTerm> terms;
    for (const Partition& lam : partitions_in_box(r - 1, n - r - 1)) {
        Partition comp = rect_complement(lam, r - 1, n - r - 1);
        DegreeTerm term;
        term.lam = lam;
        term.left = schur_principal(lam, r);
        term.right = schur_principal(comp, r);
        terms.push_back(std::move(term));
    }
    return terms;
}

Int uniform_degree(int r, int n) {
    Int total = 0;
    for (const DegreeTerm& term : uniform_degree_terms(r, n))
        total += term.left * term.right;
    return total;
}

}  // namespace orbitclass
