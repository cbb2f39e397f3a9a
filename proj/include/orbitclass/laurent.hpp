#pragma once

#include <vector>

#include "orbitclass/poly.hpp"

namespace orbitclass {

// num/den times a monomial prefactor prod_j t_j^{offsets[j]} with integer
// (possibly negative) exponents. Used by the K-theory localization path.
class LaurentFraction {
  public:
    LaurentFraction(Poly num, Poly den, std::vector<int> offsets)
        : num_(std::move(num)), den_(std::move(den)), offsets_(std::move(offsets)) {
        require_same_space(num_.space(), den_.space());
        if (den_.is_zero()) throw Error(ErrorKind::DenominatorZero, "zero denominator");
        if (static_cast<int>(offsets_.size()) != num_.space().n)
            throw Error(ErrorKind::InvalidArgument, "offset vector length must be n");
    }

    static LaurentFraction from_poly(const Poly& p) {
        return LaurentFraction(p, Poly::one(p.space()), std::vector<int>(p.space().n, 0));
    }
    static LaurentFraction zero(const VarSpace& vs) { return from_poly(Poly::zero(vs)); }
    static LaurentFraction one(const VarSpace& vs) { return from_poly(Poly::one(vs)); }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    const std::vector<int>& offsets() const { return offsets_; }
    const VarSpace& space() const { return num_.space(); }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const LaurentFraction& o) const {
        return num_ == o.num_ && den_ == o.den_ && offsets_ == o.offsets_;
    }

    // Exact evaluation at a point (u values then t values); every t_j with a
    // nonzero offset and the denominator must be nonzero at the point.
    Rat eval(const std::vector<Rat>& point) const;

  private:
    Poly num_;
    Poly den_;
    std::vector<int> offsets_;
};

}  // namespace orbitclass
