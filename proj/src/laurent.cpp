#include "orbitclass/laurent.hpp"

namespace orbitclass {

Rat LaurentFraction::eval(const std::vector<Rat>& point) const {
    Rat d = den_.eval(point);
    if (d == 0) throw Error(ErrorKind::DenominatorZero, "denominator vanishes at the point");
    Rat v = num_.eval(point) / d;
    int r = space().r;
    for (int j = 0; j < space().n; ++j) {
        int e = offsets_[j];
        if (e == 0) continue;
        const Rat& x = point[r + j];
        if (x == 0 && e < 0)
            throw Error(ErrorKind::DenominatorZero, "monomial offset vanishes at the point");
        for (int k = 0; k < e; ++k) v *= x;
        for (int k = 0; k > e; --k) v /= x;
    }
    return v;
}

}  // namespace orbitclass
