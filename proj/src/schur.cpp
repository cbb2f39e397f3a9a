#include "orbitclass/schur.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <tuple>

namespace orbitclass {

EvalArgs u_args(const VarSpace& vs, int sign) {
    EvalArgs args;
    args.reserve(vs.r);
    for (int k = 1; k <= vs.r; ++k) args.push_back(EvalArg::u(k, sign));
    return args;
}

EvalArgs t_args(const VarSpace& vs, const std::vector<int>& idx, int sign) {
    EvalArgs args;
    args.reserve(idx.size());
    for (int j : idx) {
        if (j < 1 || j > vs.n)
            throw Error(ErrorKind::InvalidArgument, "t index out of range");
        args.push_back(EvalArg::t(j, sign));
    }
    return args;
}

// ---------------------------------------------------------------------------
// Rational-coefficient term maps, local to this translation unit. Schur
// evaluations with rational constant arguments accumulate here and convert
// to integer polynomials at the end.

namespace {

using RatTerms = std::map<ExpVec, Rat, TermOrder>;

void rat_add(RatTerms& m, const ExpVec& e, const Rat& c) {
    if (c == 0) return;
    auto it = m.find(e);
    if (it == m.end()) {
        m.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

RatTerms rat_mul(const RatTerms& a, const RatTerms& b) {
    RatTerms out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            ExpVec e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            rat_add(out, e, ca * cb);
        }
    return out;
}

Poly rat_to_poly(const VarSpace& vs, const RatTerms& m) {
    Poly p(vs);
    for (const auto& [e, c] : m) {
        if (c.get_den() != 1)
            throw Error(ErrorKind::InvalidArgument,
                        "Schur value with non-integer coefficients cannot be a polynomial");
        p.add_term(e, c.get_num());
    }
    return p;
}

// The single term contributed by one tableau under variable/constant
// arguments: a monomial exponent vector and a rational coefficient.
void add_tableau_term(RatTerms& acc, const VarSpace& vs, const Tableau& tab,
                      const EvalArgs& args) {
    ExpVec e(vs.num_vars(), 0);
    Rat coeff(1);
    for (const auto& row : tab.rows)
        for (int v : row) {
            const EvalArg& a = args[v - 1];
            switch (a.kind) {
                case EvalArg::Kind::UVar:
                    e[a.index - 1] += 1;
                    if (a.sign < 0) coeff = -coeff;
                    break;
                case EvalArg::Kind::TVar:
                    e[vs.r + a.index - 1] += 1;
                    if (a.sign < 0) coeff = -coeff;
                    break;
                case EvalArg::Kind::Const:
                    coeff *= a.value;
                    break;
            }
            if (coeff == 0) return;
        }
    rat_add(acc, e, coeff);
}

void check_args(const VarSpace& vs, const EvalArgs& args) {
    for (const auto& a : args) {
        if (a.kind == EvalArg::Kind::UVar && (a.index < 1 || a.index > vs.r))
            throw Error(ErrorKind::InvalidArgument, "u index out of range");
        if (a.kind == EvalArg::Kind::TVar && (a.index < 1 || a.index > vs.n))
            throw Error(ErrorKind::InvalidArgument, "t index out of range");
        if (a.kind != EvalArg::Kind::Const && a.sign != 1 && a.sign != -1)
            throw Error(ErrorKind::InvalidArgument, "argument sign must be +1 or -1");
    }
}

}  // namespace

Poly schur_poly(const VarSpace& vs, const Partition& shape, const EvalArgs& args) {
    check_args(vs, args);
    RatTerms acc;
    for (const Tableau& tab : sst_enumerate(shape, static_cast<int>(args.size())))
        add_tableau_term(acc, vs, tab, args);
    return rat_to_poly(vs, acc);
}

Poly schur_poly_jt(const VarSpace& vs, const Partition& shape, const EvalArgs& args) {
    check_args(vs, args);
    if (shape.empty()) return Poly::one(vs);
    const int ell = shape.num_parts();
    const int maxk = shape.part(1) + ell - 1;

    // h_k of the argument list by the complete-homogeneous recurrence; the
    // in-place ascending update allows repeated arguments, as h requires.
    std::vector<RatTerms> h(maxk + 1);
    rat_add(h[0], ExpVec(vs.num_vars(), 0), Rat(1));
    for (const EvalArg& a : args) {
        RatTerms am;
        {
            ExpVec e(vs.num_vars(), 0);
            Rat c(1);
            if (a.kind == EvalArg::Kind::UVar) {
                e[a.index - 1] = 1;
                if (a.sign < 0) c = -c;
            } else if (a.kind == EvalArg::Kind::TVar) {
                e[vs.r + a.index - 1] = 1;
                if (a.sign < 0) c = -c;
            } else {
                c = a.value;
            }
            rat_add(am, e, c);
        }
        for (int k = 1; k <= maxk; ++k) {
            RatTerms add = rat_mul(am, h[k - 1]);
            for (const auto& [e, c] : add) rat_add(h[k], e, c);
        }
    }

    // Leibniz expansion of det(h_{shape_i - i + sigma(i)}).
    RatTerms det;
    std::vector<int> sigma(ell);
    for (int i = 0; i < ell; ++i) sigma[i] = i;
    do {
        int inv = 0;
        for (int i = 0; i < ell; ++i)
            for (int j = i + 1; j < ell; ++j)
                if (sigma[i] > sigma[j]) ++inv;
        RatTerms prod;
        rat_add(prod, ExpVec(vs.num_vars(), 0), (inv % 2 == 0) ? Rat(1) : Rat(-1));
        bool dead = false;
        for (int i = 0; i < ell && !dead; ++i) {
            int k = shape.part(i + 1) - (i + 1) + (sigma[i] + 1);
            if (k < 0 || k > maxk) {
                dead = true;
            } else if (k > 0) {
                prod = rat_mul(prod, h[k]);
            }
        }
        if (!dead)
            for (const auto& [e, c] : prod) rat_add(det, e, c);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    return rat_to_poly(vs, det);
}

Rat schur_eval(const Partition& shape, const std::vector<Rat>& args) {
    Rat total(0);
    for (const Tableau& tab : sst_enumerate(shape, static_cast<int>(args.size()))) {
        Rat prod(1);
        for (const auto& row : tab.rows)
            for (int v : row) {
                prod *= args[v - 1];
                if (prod == 0) break;
            }
        total += prod;
    }
    return total;
}

Poly schur_in_u(const VarSpace& vs, const Partition& shape) {
    return schur_poly(vs, shape, u_args(vs));
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson coefficients.

namespace {

// All tau with rho subset tau subset bound, tau/rho a horizontal strip of the
// given size, passed to sink.
void horizontal_strips(const Partition& rho, int size, const Partition& bound,
                       const std::function<void(const Partition&)>& sink) {
    const int m = bound.num_parts();
    std::vector<int> tau(m, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == m) {
            if (left == 0) {
                std::vector<int> parts;
                for (int v : tau)
                    if (v > 0) parts.push_back(v);
                sink(Partition(std::move(parts)));
            }
            return;
        }
        int lo = rho.part(i + 1);
        int hi = std::min(bound.part(i + 1), i == 0 ? bound.part(1) : rho.part(i));
        if (i > 0) hi = std::min(hi, tau[i - 1]);
        for (int v = lo; v <= std::min(hi, lo + left); ++v) {
            tau[i] = v;
            rec(i + 1, left - (v - lo));
        }
        tau[i] = 0;
    };
    rec(0, size);
}

bool contains(const Partition& big, const Partition& small) {
    for (int i = 1; i <= small.num_parts(); ++i)
        if (small.part(i) > big.part(i)) return false;
    return true;
}

std::map<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>, Int> lr_cache;
std::mutex lr_mutex;

}  // namespace

Int lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.weight() + mu.weight() != nu.weight()) return 0;
    if (!contains(nu, lam) || !contains(nu, mu)) return 0;
    // Symmetry c^nu_{lam,mu} = c^nu_{mu,lam}: canonicalize the key.
    const Partition& a = (mu < lam) ? mu : lam;
    const Partition& b = (mu < lam) ? lam : mu;

    auto key = std::make_tuple(a.parts, b.parts, nu.parts);
    {
        std::lock_guard<std::mutex> lock(lr_mutex);
        auto it = lr_cache.find(key);
        if (it != lr_cache.end()) return it->second;
    }

    // Expand s_b over complete homogeneous products via Jacobi-Trudi, then
    // apply Pieri steps to s_a, pruning to subdiagrams of nu.
    Int total = 0;
    const int ell = std::max(b.num_parts(), 1);
    std::vector<int> sigma(ell);
    for (int i = 0; i < ell; ++i) sigma[i] = i;
    do {
        int inv = 0;
        for (int i = 0; i < ell; ++i)
            for (int j = i + 1; j < ell; ++j)
                if (sigma[i] > sigma[j]) ++inv;
        std::vector<int> ks;
        bool dead = false;
        for (int i = 0; i < ell && !dead; ++i) {
            int k = b.part(i + 1) - (i + 1) + (sigma[i] + 1);
            if (k < 0) dead = true;
            else if (k > 0) ks.push_back(k);
        }
        if (dead) continue;

        std::map<Partition, Int> dist;
        dist[a] = 1;
        for (int k : ks) {
            std::map<Partition, Int> next;
            for (const auto& [rho, c] : dist)
                horizontal_strips(rho, k, nu, [&](const Partition& tau) {
                    next[tau] += c;
                });
            dist = std::move(next);
            if (dist.empty()) break;
        }
        auto it = dist.find(nu);
        if (it != dist.end()) total += (inv % 2 == 0) ? it->second : -it->second;
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::lock_guard<std::mutex> lock(lr_mutex);
    lr_cache.emplace(std::move(key), total);
    return total;
}

// ---------------------------------------------------------------------------
// Schur-basis expansion.

namespace {

// Compare u-exponent blocks by (degree, lex), larger first.
bool u_block_before(const ExpVec& a, const ExpVec& b, int r) {
    int da = 0, db = 0;
    for (int i = 0; i < r; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db;
    for (int i = 0; i < r; ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

}  // namespace

SchurExpansion schur_expand(const Poly& p) {
    const VarSpace& vs = p.space();
    if (!p.is_symmetric_in_u())
        throw Error(ErrorKind::NotSymmetric, "polynomial is not symmetric in the u variables");

    SchurExpansion out(vs);
    Poly w = p;
    while (!w.is_zero()) {
        // Leading u-block among all terms.
        const ExpVec* lead = nullptr;
        for (const auto& [e, c] : w.terms())
            if (lead == nullptr || u_block_before(e, *lead, vs.r)) lead = &e;

        std::vector<int> parts(lead->begin(), lead->begin() + vs.r);
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t i = 1; i < parts.size(); ++i)
            if (parts[i] > parts[i - 1])
                throw Error(ErrorKind::NotSymmetric,
                            "leading u exponents do not form a partition");
        Partition lam(std::move(parts));

        // Matching terms give the t-polynomial coefficient of s_lam(u).
        Poly q(vs);
        for (const auto& [e, c] : w.terms()) {
            bool match = true;
            for (int i = 0; i < vs.r && match; ++i)
                match = (e[i] == (i < lam.num_parts() ? lam.parts[i] : 0));
            if (match) {
                ExpVec t_only(e);
                for (int i = 0; i < vs.r; ++i) t_only[i] = 0;
                q.add_term(t_only, c);
            }
        }

        w -= q * schur_in_u(vs, lam);
        out.coeffs.emplace(std::move(lam), std::move(q));
    }
    return out;
}

Poly expansion_value(const SchurExpansion& e) {
    Poly total(e.vs);
    for (const auto& [lam, q] : e.coeffs) total += q * schur_in_u(e.vs, lam);
    return total;
}

SchurExpansion omega_transpose(const SchurExpansion& e) {
    SchurExpansion out(e.vs);
    for (const auto& [lam, q] : e.coeffs) {
        if (lam.part(1) > e.vs.r)
            throw Error(ErrorKind::TransposeOverflow,
                        "transposed shape needs more than r parts: " + lam.to_string());
        out.coeffs.emplace(lam.transpose(), q);
    }
    return out;
}

Poly factorial_schur(const VarSpace& vs, const Partition& lam, int t_sign) {
    if (t_sign != 1 && t_sign != -1)
        throw Error(ErrorKind::InvalidArgument, "t_sign must be +1 or -1");
    if (!lam.fits_in(vs.r, vs.n - vs.r))
        throw Error(ErrorKind::ShapeOutOfBox,
                    lam.to_string() + " does not fit the " + std::to_string(vs.r) + "x" +
                        std::to_string(vs.n - vs.r) + " box");
    Poly total(vs);
    for (const Tableau& tab : sst_enumerate(lam, vs.r)) {
        Poly prod = Poly::one(vs);
        for (int row = 1; row <= lam.num_parts(); ++row)
            for (int col = 1; col <= lam.part(row); ++col) {
                int v = tab.rows[row - 1][col - 1];
                Poly factor = Poly::var_u(vs, v);
                Poly t = Poly::var_t(vs, v + col - row);
                prod = prod * (t_sign > 0 ? factor - t : factor + t);
            }
        total += prod;
    }
    return total;
}

Int schur_principal(const Partition& lam, int k) {
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "argument count must be nonnegative");
    if (lam.num_parts() > k) return 0;
    if (lam.empty()) return 1;
    Partition tr = lam.transpose();
    Rat prod(1);
    for (int i = 1; i <= lam.num_parts(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) {
            int hook = (lam.part(i) - j) + (tr.part(j) - i) + 1;
            prod *= Rat(k + j - i, hook);
        }
    prod.canonicalize();
    if (prod.get_den() != 1)
        throw Error(ErrorKind::InternalNonPolynomial, "hook-content product is not integral");
    return prod.get_num();
}

}  // namespace orbitclass
