#pragma once

#include "grasscs/algebra4.hpp"
#include "grasscs/halfint.hpp"
#include "grasscs/polyring.hpp"

namespace grasscs {

/// True when (j, qa, qb) labels an entry of the spin-j representation:
/// |q| <= j with j - q integral.
bool wigner_valid(HalfInt j, HalfInt qa, HalfInt qb);

/// Matrix-argument Wigner polynomial D^j_{qa,qb}(X) for an arbitrary complex
/// 2x2 matrix X, evaluated as the double-binomial sum over the entries.
Cplx wigner_D(HalfInt j, HalfInt qa, HalfInt qb, const CMat2& X);

/// Same object as a homogeneous polynomial of degree 2j in the entry
/// variables (z11, z12, z21, z22).
PolyEntry wigner_D_poly(HalfInt j, HalfInt qa, HalfInt qb);

/// max_{q,q''} | sum_q' D^j_{qq'}(X) D^j_{q'q''}(Y) - D^j_{qq''}(XY) |.
double wigner_mult_residual(HalfInt j, const CMat2& X, const CMat2& Y);

/// max_{q,q'} | D^j_{qq'}(Y) - D^j_{q'q}(Y^T) |.
double wigner_transpose_residual(HalfInt j, const CMat2& Y);

}  // namespace grasscs
