#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitclass/numeric.hpp"
#include "orbitclass/varspace.hpp"

namespace orbitclass {

// Exponent vector: u-block (r entries) followed by t-block (n entries).
using ExpVec = std::vector<int>;

// Graded-lex, leading term first: higher total degree wins, ties broken by
// lexicographically larger exponent vector (u-block before t-block).
struct TermOrder {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da > db;
        return a > b;
    }
};

// Sparse exact multivariate polynomial over Z in u_1..u_r, t_1..t_n.
class Poly {
  public:
    using TermMap = std::map<ExpVec, Int, TermOrder>;

    explicit Poly(const VarSpace& vs) : vs_(vs) {}

    static Poly zero(const VarSpace& vs) { return Poly(vs); }
    static Poly constant(const VarSpace& vs, const Int& c);
    static Poly one(const VarSpace& vs) { return constant(vs, 1); }
    static Poly var_u(const VarSpace& vs, int k);  // 1-indexed
    static Poly var_t(const VarSpace& vs, int j);  // 1-indexed
    static Poly monomial(const VarSpace& vs, const ExpVec& e, const Int& c);

    const VarSpace& space() const { return vs_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    bool operator==(const Poly& o) const { return vs_ == o.vs_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator*(const Int& c) const;

    void add_term(const ExpVec& e, const Int& c);

    int total_degree() const;           // -1 for the zero polynomial
    bool is_homogeneous() const;
    Poly homogeneous_part(int d) const;

    // Lowest total degree and that homogeneous part; errors on zero input.
    std::pair<int, Poly> lowest_form() const;

    int u_degree_of_term(const ExpVec& e) const;
    int max_u_degree() const;                    // max over terms of u-block degree sum
    int max_degree_in_u_var(int k) const;        // max exponent of u_k (1-indexed)
    Poly u_degree_part(int d) const;             // terms whose u-block degree is d
    bool has_u_vars() const;

    // Substitute t_a := t_b (both 1-indexed).
    Poly subst_t_equal(int a, int b) const;
    // Substitute every t_i := 1 - t_i (u variables untouched).
    Poly subst_t_one_minus() const;
    // Substitute u_k := eps * t_{b[k]} for all k; b is sorted ascending, 1-indexed.
    Poly restrict_u(const std::vector<int>& b, int eps) const;
    // Set every t variable to zero.
    Poly drop_t() const;

    bool is_symmetric_in_u() const;

    // Exact evaluation at a rational point (length r+n: u values then t values).
    Rat eval(const std::vector<Rat>& point) const;

    std::string to_string() const;

  private:
    VarSpace vs_;
    TermMap terms_;
};

// Quotient of p by (t_a - t_b); precondition (checked): p vanishes under
// t_a := t_b. Synthetic division in t_a. a != b, both 1-indexed; the pair
// need not be ordered.
Poly divide_by_linear_form(const Poly& p, int a, int b);

// Exact multivariate division: returns a/b when b exactly divides a.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

}  // namespace orbitclass
