#include "orbitclass/poly.hpp"

#include <algorithm>
#include <sstream>

namespace orbitclass {

Poly Poly::constant(const VarSpace& vs, const Int& c) {
    Poly p(vs);
    if (c != 0) p.terms_[ExpVec(vs.num_vars(), 0)] = c;
    return p;
}

Poly Poly::var_u(const VarSpace& vs, int k) {
    if (k < 1 || k > vs.r) throw Error(ErrorKind::InvalidArgument, "u index out of range");
    ExpVec e(vs.num_vars(), 0);
    e[k - 1] = 1;
    return monomial(vs, e, 1);
}

Poly Poly::var_t(const VarSpace& vs, int j) {
    if (j < 1 || j > vs.n) throw Error(ErrorKind::InvalidArgument, "t index out of range");
    ExpVec e(vs.num_vars(), 0);
    e[vs.r + j - 1] = 1;
    return monomial(vs, e, 1);
}

Poly Poly::monomial(const VarSpace& vs, const ExpVec& e, const Int& c) {
    if (static_cast<int>(e.size()) != vs.num_vars())
        throw Error(ErrorKind::InvalidArgument, "exponent vector length mismatch");
    Poly p(vs);
    if (c != 0) p.terms_[e] = c;
    return p;
}

void Poly::add_term(const ExpVec& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly res = *this;
    res += o;
    return res;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_space(vs_, o.vs_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly Poly::operator-(const Poly& o) const {
    Poly res = *this;
    res -= o;
    return res;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_space(vs_, o.vs_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly res(vs_);
    for (const auto& [e, c] : terms_) res.terms_[e] = -c;
    return res;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_space(vs_, o.vs_);
    Poly res(vs_);
    ExpVec e(vs_.num_vars());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < vs_.num_vars(); ++i) e[i] = ea[i] + eb[i];
            res.add_term(e, ca * cb);
        }
    }
    return res;
}

Poly Poly::operator*(const Int& c) const {
    Poly res(vs_);
    if (c == 0) return res;
    for (const auto& [e, k] : terms_) res.terms_[e] = k * c;
    return res;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (int e : terms_.begin()->first) d += e;  // leading term has max degree
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return total_degree() == lowest_form().first;
}

Poly Poly::homogeneous_part(int d) const {
    Poly res(vs_);
    for (const auto& [e, c] : terms_) {
        int deg = 0;
        for (int x : e) deg += x;
        if (deg == d) res.terms_[e] = c;
    }
    return res;
}

std::pair<int, Poly> Poly::lowest_form() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "lowest form of zero polynomial");
    int dmin = -1;
    for (const auto& [e, c] : terms_) {
        int deg = 0;
        for (int x : e) deg += x;
        if (dmin < 0 || deg < dmin) dmin = deg;
    }
    return {dmin, homogeneous_part(dmin)};
}

int Poly::u_degree_of_term(const ExpVec& e) const {
    int d = 0;
    for (int k = 0; k < vs_.r; ++k) d += e[k];
    return d;
}

int Poly::max_u_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, u_degree_of_term(e));
    return d;
}

int Poly::max_degree_in_u_var(int k) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[k - 1]);
    return d;
}

Poly Poly::u_degree_part(int d) const {
    Poly res(vs_);
    for (const auto& [e, c] : terms_)
        if (u_degree_of_term(e) == d) res.terms_[e] = c;
    return res;
}

bool Poly::has_u_vars() const {
    for (const auto& [e, c] : terms_)
        if (u_degree_of_term(e) > 0) return true;
    return false;
}

Poly Poly::subst_t_equal(int a, int b) const {
    Poly res(vs_);
    int ia = vs_.r + a - 1, ib = vs_.r + b - 1;
    ExpVec e;
    for (const auto& [e0, c] : terms_) {
        e = e0;
        e[ib] += e[ia];
        e[ia] = 0;
        res.add_term(e, c);
    }
    return res;
}

Poly Poly::subst_t_one_minus() const {
    // Expand each factor t_i^f into (1 - t_i)^f via binomial coefficients.
    Poly res(vs_);
    for (const auto& [e0, c] : terms_) {
        Poly term = Poly::constant(vs_, c);
        ExpVec eu(vs_.num_vars(), 0);
        for (int k = 0; k < vs_.r; ++k) eu[k] = e0[k];
        term = term * Poly::monomial(vs_, eu, 1);
        for (int j = 0; j < vs_.n; ++j) {
            int f = e0[vs_.r + j];
            if (f == 0) continue;
            Poly binom(vs_);
            Int coeff = 1;
            for (int k = 0; k <= f; ++k) {
                ExpVec e(vs_.num_vars(), 0);
                e[vs_.r + j] = k;
                Int sign = (k % 2 == 0) ? 1 : -1;
                binom.add_term(e, sign * coeff);
                coeff = coeff * (f - k) / (k + 1);
            }
            term = term * binom;
        }
        res += term;
    }
    return res;
}

Poly Poly::restrict_u(const std::vector<int>& b, int eps) const {
    if (static_cast<int>(b.size()) != vs_.r)
        throw Error(ErrorKind::InvalidArgument, "restriction basis size must equal r");
    Poly res(vs_);
    ExpVec e(vs_.num_vars());
    for (const auto& [e0, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        int udeg = 0;
        for (int k = 0; k < vs_.r; ++k) {
            e[vs_.r + b[k] - 1] += e0[k];
            udeg += e0[k];
        }
        for (int j = 0; j < vs_.n; ++j) e[vs_.r + j] += e0[vs_.r + j];
        Int coeff = (eps < 0 && udeg % 2 == 1) ? Int(-c) : c;
        res.add_term(e, coeff);
    }
    return res;
}

Poly Poly::drop_t() const {
    Poly res(vs_);
    for (const auto& [e, c] : terms_) {
        bool pure_u = true;
        for (int j = 0; j < vs_.n; ++j)
            if (e[vs_.r + j] != 0) { pure_u = false; break; }
        if (pure_u) res.terms_[e] = c;
    }
    return res;
}

bool Poly::is_symmetric_in_u() const {
    // Invariance under adjacent transpositions generates all of S_r.
    for (int k = 0; k + 1 < vs_.r; ++k) {
        Poly swapped(vs_);
        ExpVec e;
        for (const auto& [e0, c] : terms_) {
            e = e0;
            std::swap(e[k], e[k + 1]);
            swapped.add_term(e, c);
        }
        if (swapped != *this) return false;
    }
    return true;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != vs_.num_vars())
        throw Error(ErrorKind::InvalidArgument, "evaluation point length mismatch");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat term(c);
        for (int i = 0; i < vs_.num_vars(); ++i) {
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        }
        total += term;
    }
    return total;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool all_zero = true;
        for (int x : e) all_zero = all_zero && x == 0;
        bool printed = false;
        if (a != 1 || all_zero) {
            os << a.get_str();
            printed = true;
        }
        for (int i = 0; i < vs_.num_vars(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            if (i < vs_.r) os << "u" << (i + 1);
            else os << "t" << (i - vs_.r + 1);
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

Poly divide_by_linear_form(const Poly& p, int a, int b) {
    if (a == b) throw Error(ErrorKind::InvalidArgument, "linear form requires distinct indices");
    const VarSpace& vs = p.space();
    if (a < 1 || a > vs.n || b < 1 || b > vs.n)
        throw Error(ErrorKind::InvalidArgument, "linear form index out of range");
    if (!p.subst_t_equal(a, b).is_zero())
        throw Error(ErrorKind::NotDivisible, "polynomial not divisible by the linear form");
    if (p.is_zero()) return p;

    // Collect coefficients of powers of t_a (each a Poly with t_a exponent 0),
    // then run synthetic division: h := h + c_e; quotient term at t_a^{e-1} is h;
    // h := h * t_b.
    int ia = vs.r + a - 1, ib = vs.r + b - 1;
    std::map<int, Poly> by_exp;
    for (const auto& [e0, c] : p.terms()) {
        ExpVec e = e0;
        int k = e[ia];
        e[ia] = 0;
        auto it = by_exp.find(k);
        if (it == by_exp.end()) it = by_exp.emplace(k, Poly::zero(vs)).first;
        it->second.add_term(e, c);
    }
    int top = by_exp.rbegin()->first;
    Poly h = Poly::zero(vs);
    Poly quotient = Poly::zero(vs);
    for (int k = top; k >= 1; --k) {
        auto it = by_exp.find(k);
        if (it != by_exp.end()) h += it->second;
        for (const auto& [e0, c] : h.terms()) {
            ExpVec e = e0;
            e[ia] += k - 1;
            quotient.add_term(e, c);
        }
        // h *= t_b
        Poly shifted(vs);
        for (const auto& [e0, c] : h.terms()) {
            ExpVec e = e0;
            e[ib] += 1;
            shifted.add_term(e, c);
        }
        h = shifted;
    }
    return quotient;
}

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
    require_same_space(a.space(), b.space());
    if (b.is_zero()) return std::nullopt;
    Poly rem = a;
    Poly quotient = Poly::zero(a.space());
    const auto& ltb = *b.terms().begin();
    while (!rem.is_zero()) {
        const auto& lta = *rem.terms().begin();
        ExpVec e(a.space().num_vars());
        for (int i = 0; i < a.space().num_vars(); ++i) {
            e[i] = lta.first[i] - ltb.first[i];
            if (e[i] < 0) return std::nullopt;
        }
        if (mpz_divisible_p(lta.second.get_mpz_t(), ltb.second.get_mpz_t()) == 0)
            return std::nullopt;
        Int q;
        mpz_divexact(q.get_mpz_t(), lta.second.get_mpz_t(), ltb.second.get_mpz_t());
        Poly m = Poly::monomial(a.space(), e, q);
        quotient += m;
        rem -= m * b;
    }
    return quotient;
}

}  // namespace orbitclass
