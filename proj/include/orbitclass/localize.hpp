#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "orbitclass/laurent.hpp"
#include "orbitclass/linform.hpp"
#include "orbitclass/matroid.hpp"

namespace orbitclass {

// Restrictions of an equivariant class to every torus fixed point x_B of the
// Grassmannian: one polynomial in t per r-subset B of {1..n}.
struct GKMTuple {
    int r = 0, n = 0;
    std::map<std::uint32_t, Poly> values;

    VarSpace space() const { return VarSpace(r, n); }
};

// Chow restriction of the torus orbit closure at x_B: the prefactor
// prod_{i in B, j notin B} (t_j - t_i) times the sum, over permutations of
// {1..n} whose lex-first basis is B, of 1 / prod of consecutive differences
// (t_next - t_prev). Zero when B is not a basis. When r = n the Grassmannian
// is a point and the class is 1 (the bare permutation sum telescopes to zero
// there, so this case is split off).
Poly orbit_chow_localization(const Matroid& m, std::uint32_t B);

// The same permutation sum evaluated at a rational t-point with pairwise
// distinct coordinates, for randomized identity certification.
Rat orbit_chow_localization_eval(const Matroid& m, std::uint32_t B,
                                 const std::vector<Rat>& tvals);

// Single-sum form for uniform matroids: prefactor times
// sum_{b in B} prod_{i in B, i != b} 1/(t_b - t_i) prod_{j notin B} 1/(t_j - t_b).
// Errors NotUniform otherwise.
Poly orbit_chow_localization_telescoped(const Matroid& m, std::uint32_t B);

// K-theory restriction at x_B: prefactor prod_{i in B, j notin B} (1 - t_j/t_i)
// times the permutation sum of 1 / prod (1 - t_next/t_prev), cleared to a
// polynomial numerator with a monomial offset prefactor t_B^{-(n-r)}.
LaurentFraction orbit_k_localization(const Matroid& m, std::uint32_t B);

// K-to-Chow recipe: substitute t_i -> 1 - t_i in numerator and denominator
// (monomial offsets contribute lowest-degree form 1 and drop out), take each
// part's lowest-degree form, divide exactly, and check the resulting degree.
Poly kms_chow_from_k(const LaurentFraction& k, int expected_codim);

// orbit_chow_localization at every r-subset.
GKMTuple full_orbit_tuple(const Matroid& m);

// One divisibility failure: (f_B - f_{B - i + j}) not divisible by (t_j - t_i).
struct GKMViolation {
    std::uint32_t B;
    int i, j;  // i in B, j notin B, both 1-based
};

// Exhaustive edge check of the divisibility conditions; empty means valid.
std::vector<GKMViolation> gkm_check(const GKMTuple& f);

}  // namespace orbitclass
