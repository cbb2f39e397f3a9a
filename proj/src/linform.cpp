#include "orbitclass/linform.hpp"

namespace orbitclass {

Poly linear_form_poly(const VarSpace& vs, int a, int b) {
    return Poly::var_t(vs, a) - Poly::var_t(vs, b);
}

void LinFormFraction::divide_by_form(int a, int b) {
    if (a == b) throw Error(ErrorKind::InvalidArgument, "linear form requires distinct indices");
    if (a > b) {
        std::swap(a, b);
        num_ = -num_;  // (t_b - t_a) = -(t_a - t_b)
    }
    den_[{a, b}] += 1;
    reduce();
}

void LinFormFraction::multiply_by_form(int a, int b) {
    if (a == b) throw Error(ErrorKind::InvalidArgument, "linear form requires distinct indices");
    if (a > b) {
        std::swap(a, b);
        num_ = -num_;
    }
    auto it = den_.find({a, b});
    if (it != den_.end()) {
        if (--it->second == 0) den_.erase(it);
    } else {
        num_ = num_ * linear_form_poly(space(), a, b);
    }
}

LinFormFraction LinFormFraction::operator+(const LinFormFraction& o) const {
    require_same_space(space(), o.space());
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // Common denominator = multiset lcm (per-form max multiplicity).
    std::map<LinForm, int> lcm = den_;
    for (const auto& [f, m] : o.den_) {
        auto it = lcm.find(f);
        if (it == lcm.end()) lcm[f] = m;
        else it->second = std::max(it->second, m);
    }
    Poly na = num_, nb = o.num_;
    for (const auto& [f, m] : lcm) {
        auto ita = den_.find(f);
        int ma = (ita == den_.end()) ? 0 : ita->second;
        auto itb = o.den_.find(f);
        int mb = (itb == o.den_.end()) ? 0 : itb->second;
        Poly fp = linear_form_poly(space(), f.first, f.second);
        for (int k = ma; k < m; ++k) na = na * fp;
        for (int k = mb; k < m; ++k) nb = nb * fp;
    }
    LinFormFraction res(na + nb);
    res.den_ = lcm;
    res.reduce();
    return res;
}

LinFormFraction LinFormFraction::operator-() const {
    LinFormFraction res(-num_);
    res.den_ = den_;
    return res;
}

void LinFormFraction::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (auto it = den_.begin(); it != den_.end();) {
            auto [a, b] = it->first;
            if (num_.subst_t_equal(a, b).is_zero()) {
                num_ = divide_by_linear_form(num_, a, b);
                progressed = true;
                if (--it->second == 0) it = den_.erase(it);
            } else {
                ++it;
            }
        }
    }
}

Poly LinFormFraction::to_poly() const {
    if (!den_.empty())
        throw Error(ErrorKind::DenominatorRemains, "value is not a polynomial");
    return num_;
}

Rat LinFormFraction::eval(const std::vector<Rat>& point) const {
    Rat denom = 1;
    int r = space().r;
    for (const auto& [f, m] : den_) {
        Rat v = point[r + f.first - 1] - point[r + f.second - 1];
        if (v == 0)
            throw Error(ErrorKind::DenominatorZero, "denominator form vanishes at the point");
        for (int k = 0; k < m; ++k) denom *= v;
    }
    return num_.eval(point) / denom;
}

}  // namespace orbitclass
