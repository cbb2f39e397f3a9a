#pragma once

#include "orbitclass/error.hpp"

namespace orbitclass {

// The ambient variable space: u_1..u_r (symmetric block) and t_1..t_n.
struct VarSpace {
    int r = 0;
    int n = 0;

    VarSpace() = default;
    VarSpace(int r_, int n_) : r(r_), n(n_) {
        if (r < 0 || n < 1 || r > n)
            throw Error(ErrorKind::InvalidArgument,
                        "varspace requires 0 <= r <= n, n >= 1");
    }

    int num_vars() const { return r + n; }

    bool operator==(const VarSpace& o) const { return r == o.r && n == o.n; }
    bool operator!=(const VarSpace& o) const { return !(*this == o); }
};

inline void require_same_space(const VarSpace& a, const VarSpace& b) {
    if (a != b)
        throw Error(ErrorKind::VarSpaceMismatch, "operands live in different variable spaces");
}

}  // namespace orbitclass
