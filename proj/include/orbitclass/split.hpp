#pragma once

#include <cstdint>
#include <map>

#include "orbitclass/localize.hpp"
#include "orbitclass/schur.hpp"

namespace orbitclass {

// Sign conventions connecting ambient classes to fixed-point restrictions:
// eps_u scales the substitution u_k -> eps_u * t_{b_k} (b = B sorted
// ascending), eps_t scales every t reference inside a matrix Schubert class.
// eps_u = -1 is forced by the orbit-class consistency checks; eps_t is
// resolved empirically per (r, n) by resolve_convention.
struct RestrictionConvention {
    int eps_u = -1;
    int eps_t = -1;

    bool operator==(const RestrictionConvention& o) const {
        return eps_u == o.eps_u && eps_t == o.eps_t;
    }
};

// An ambient class written over the matrix Schubert basis: the sum of
// coefficients[lam] * (matrix Schubert class of lam) over shapes inside the
// r x (n-r) box, plus plain Schur terms s_lam(u) with lam_1 > n-r banked in
// overflow. A class satisfying the width bound has empty overflow.
struct SchubertExpansion {
    VarSpace vs;
    RestrictionConvention conv;
    std::map<Partition, Poly> coefficients;
    SchurExpansion overflow;

    SchubertExpansion(const VarSpace& space, const RestrictionConvention& c)
        : vs(space), conv(c), overflow(space) {}
};

// Expand a u-symmetric ambient class over matrix Schubert classes by
// descending u-degree: Schur-expand the top u-degree slice, subtract the
// matching matrix Schubert classes (or bank the shape into overflow when it
// exceeds the box width), repeat. Errors NotSymmetric.
SchubertExpansion factorial_expand(const Poly& c, int t_sign);

// Evaluate an expansion back to the ambient class it represents; requires
// empty overflow (errors OverflowNonEmpty). Inverse of factorial_expand on
// width-bounded classes.
Poly lift(const SchubertExpansion& e);

// Substitute u_k -> eps_u * t_{b_k} for B sorted ascending.
Poly restrict_ambient(const Poly& c, std::uint32_t B, const RestrictionConvention& conv);

// restrict_ambient at every r-subset.
GKMTuple tuple_of_ambient(const Poly& c, const RestrictionConvention& conv);

// The restriction tuple of the matrix Schubert class of lam.
GKMTuple schubert_tuple(const Partition& lam, const VarSpace& vs,
                        const RestrictionConvention& conv);

// Pick the t sign under which every Schubert tuple in the box passes the
// divisibility check and the divisor tuple (shape (1)) vanishes at exactly
// one basis, as the support of a Schubert divisor must. eps_u is fixed at -1.
// Errors NoConsistentConvention when neither sign works.
RestrictionConvention resolve_convention(int r, int n);

// Write a GKM tuple over the Schubert tuples by triangular elimination:
// process shapes by (weight, lex); for each, divide at a pivot basis where
// its own tuple is nonzero and every unprocessed tuple vanishes; verify the
// full reconstruction. Errors NotInSpan when the tuple is not a Z[t]
// combination of Schubert tuples.
SchubertExpansion schubert_expand_tuple(const GKMTuple& f, const RestrictionConvention& conv);

}  // namespace orbitclass
