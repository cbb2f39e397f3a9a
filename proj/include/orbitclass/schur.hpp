#pragma once

#include <map>
#include <vector>

#include "orbitclass/partition.hpp"
#include "orbitclass/poly.hpp"

namespace orbitclass {

// One argument of a Schur evaluation: a signed u- or t-variable, or a
// rational constant (used for principal specializations).
struct EvalArg {
    enum class Kind { UVar, TVar, Const };

    Kind kind = Kind::Const;
    int index = 0;  // 1-based variable index for UVar / TVar
    int sign = 1;   // +1 or -1, applied to UVar / TVar
    Rat value;      // for Const

    static EvalArg u(int k, int s = 1) { return {Kind::UVar, k, s, Rat()}; }
    static EvalArg t(int j, int s = 1) { return {Kind::TVar, j, s, Rat()}; }
    static EvalArg constant(const Rat& v) { return {Kind::Const, 0, 1, v}; }
};

using EvalArgs = std::vector<EvalArg>;

// The arguments (u_1, ..., u_r), each scaled by sign.
EvalArgs u_args(const VarSpace& vs, int sign = 1);
// The arguments (sign * t_j : j in idx), idx 1-based in the given order.
EvalArgs t_args(const VarSpace& vs, const std::vector<int>& idx, int sign = 1);

// Schur polynomial of the given arguments, by the semistandard tableau sum.
// Zero when the shape has more parts than there are arguments.
Poly schur_poly(const VarSpace& vs, const Partition& shape, const EvalArgs& args);

// Same value via the Jacobi-Trudi determinant in complete homogeneous pieces;
// kept as an independent route for cross-checking the tableau sum.
Poly schur_poly_jt(const VarSpace& vs, const Partition& shape, const EvalArgs& args);

// Numeric tableau sum: the Schur polynomial evaluated at rational arguments.
Rat schur_eval(const Partition& shape, const std::vector<Rat>& args);

// s_shape(u_1..u_r); zero when shape has more than r parts.
Poly schur_in_u(const VarSpace& vs, const Partition& shape);

// Littlewood-Richardson coefficient: multiplicity of s_nu in s_lam * s_mu,
// computed by the Jacobi-Trudi h-expansion of s_mu and iterated Pieri steps.
Int lr_coeff(const Partition& lam, const Partition& mu, const Partition& nu);

// A polynomial symmetric in u written in the Schur basis: sum of
// coeffs[lam] * s_lam(u) with coefficients in Z[t_1..t_n].
struct SchurExpansion {
    VarSpace vs;
    std::map<Partition, Poly> coeffs;

    explicit SchurExpansion(const VarSpace& space) : vs(space) {}
};

// Unique Schur-basis expansion of a u-symmetric polynomial; errors
// NotSymmetric otherwise.
SchurExpansion schur_expand(const Poly& p);

// Evaluate an expansion back to a polynomial.
Poly expansion_value(const SchurExpansion& e);

// Transpose every partition in the expansion (t-coefficients unchanged);
// errors TransposeOverflow when a part exceeds r, since the transposed shape
// would then need more than r variables.
SchurExpansion omega_transpose(const SchurExpansion& e);

// Matrix Schubert class: the tableau sum over SST(lam, r) of products of
// (u_{tau(c)} - t_sign * t_{tau(c) + col - row}) over the cells of lam.
// Requires lam_1 <= n-r and at most r parts, which keeps every t index
// inside [1, n-1].
Poly factorial_schur(const VarSpace& vs, const Partition& lam, int t_sign);

// s_lam(1^k) = number of semistandard tableaux of shape lam with entries
// <= k, by the hook-content product.
Int schur_principal(const Partition& lam, int k);

}  // namespace orbitclass
