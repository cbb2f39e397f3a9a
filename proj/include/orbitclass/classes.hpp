#pragma once

#include <cstdint>
#include <vector>

#include "orbitclass/schur.hpp"

namespace orbitclass {

// Closed form for the restriction of the uniform torus orbit closure at x_B:
// the sum over lam in the (r-1) x (n-r-1) box of
//   s_lam(-t_i : i in B) * s_{complement(lam) transposed}(t_j : j notin B),
// where the complement is the 180-degree rotation inside the box. The
// transpose on the quotient side is required for the identity with the
// permutation-sum localization to hold (the untransposed variant already
// fails at (r,n) = (2,5)); at boxes with a single row or column the two
// variants coincide.
Poly uniform_orbit_localized(int r, int n, std::uint32_t B);

// The same sum evaluated numerically at a rational t-point.
Rat uniform_orbit_localized_eval(int r, int n, std::uint32_t B,
                                 const std::vector<Rat>& tvals);

// Ambient class of the uniform matrix orbit closure as a triple sum:
// sum over lam in the (r-1) x (n-r-1) box and mu, nu with
// c^{complement(lam)}_{mu,nu} nonzero of that coefficient times
// s_lam(u) * s_{mu'}(t_1..t_n) * s_nu(u).
Poly uniform_matrix_class_lr(int r, int n);
Rat uniform_matrix_class_lr_eval(int r, int n, const std::vector<Rat>& point);

// The same class via the split-alphabet recipe: expand the rectangle
// (r-1)^(n-r-1) over the alphabet (u, u, t) with Littlewood-Richardson
// coefficients, transposing only the u-side shapes before re-expanding the
// doubled u-alphabet.
Poly uniform_matrix_class_omega(int r, int n);
Rat uniform_matrix_class_omega_eval(int r, int n, const std::vector<Rat>& point);

// Product formula prod_{t in T, v in V} (t - v) against its rectangle
// expansion sum_{nu,mu} c^{(|V|)^{|T|}}_{nu,mu} s_nu(T) s_{mu'}(-V); true iff
// the two polynomials agree exactly.
bool cauchy_check(int size_T, int size_V);

// sum_{i=start_index}^{r} (-1)^i binom(n,i) s_lam(1^{r-i}) for a partition of
// n-1 inside the r x (n-r) box; start_index 1 follows the stated formula,
// start_index 0 is the variant that matches the splitting-derived divisor
// coefficient (both are surfaced by the verify report).
Int klyachko_coefficient(const Partition& lam, int r, int n, int start_index);

// Projective degree of the uniform matrix orbit closure:
// sum over lam in the box of s_lam(1^r) * s_{complement(lam)}(1^r).
Int uniform_degree(int r, int n);

// Itemized term of the two formulas above, for reporting.
struct DegreeTerm {
    Partition lam;
    Int left, right;  // s_lam(1^r), s_complement(1^r)
};
std::vector<DegreeTerm> uniform_degree_terms(int r, int n);

struct KlyachkoTerm {
    int i;        // summation index
    Int binom;    // binom(n, i)
    Int schur;    // s_lam(1^{r-i})
    Int value;    // (-1)^i * binom * schur
};
std::vector<KlyachkoTerm> klyachko_terms(const Partition& lam, int r, int n, int start_index);

}  // namespace orbitclass
