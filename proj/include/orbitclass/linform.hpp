#pragma once

#include <map>
#include <utility>
#include <vector>

#include "orbitclass/poly.hpp"

namespace orbitclass {

// An ordered pair (a,b), a<b, denoting the linear form t_a - t_b.
using LinForm = std::pair<int, int>;

// Polynomial numerator over a multiset of linear-form denominators (t_a - t_b).
// Canonical: a < b in every stored form, signs absorbed into the numerator,
// and no denominator form divides the numerator.
class LinFormFraction {
  public:
    explicit LinFormFraction(const VarSpace& vs) : num_(Poly::zero(vs)) {}
    explicit LinFormFraction(Poly num) : num_(std::move(num)) {}

    static LinFormFraction zero(const VarSpace& vs) { return LinFormFraction(vs); }
    static LinFormFraction from_poly(const Poly& p) { return LinFormFraction(p); }

    const Poly& numerator() const { return num_; }
    const std::map<LinForm, int>& denominator() const { return den_; }
    const VarSpace& space() const { return num_.space(); }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const LinFormFraction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    // Divide by the form (t_a - t_b); a != b, unordered input, sign normalized
    // into the numerator.
    void divide_by_form(int a, int b);
    // Multiply by the form (t_a - t_b): cancels a denominator occurrence if
    // present, otherwise multiplies the numerator.
    void multiply_by_form(int a, int b);
    // Multiply the numerator by a polynomial (the denominator is untouched).
    void scale_numerator(const Poly& p) { num_ = num_ * p; }

    LinFormFraction operator+(const LinFormFraction& o) const;
    LinFormFraction operator-() const;

    // Cancel denominator forms dividing the numerator (restores canonical form).
    void reduce();

    // The numerator, provided the denominator multiset is empty.
    Poly to_poly() const;

    // Exact evaluation; point covers u then t values. Errors if a denominator
    // form vanishes at the point.
    Rat eval(const std::vector<Rat>& point) const;

  private:
    Poly num_;
    std::map<LinForm, int> den_;
};

// frac_add with operator syntax is the canonical entry point; named wrapper
// for readability at call sites that mirror the sum-accumulation contracts.
inline LinFormFraction frac_add(const LinFormFraction& a, const LinFormFraction& b) {
    return a + b;
}

inline Poly frac_to_poly(const LinFormFraction& a) { return a.to_poly(); }

// The linear form t_a - t_b as a polynomial.
Poly linear_form_poly(const VarSpace& vs, int a, int b);

}  // namespace orbitclass
