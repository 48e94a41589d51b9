#pragma once

#include "grasscs/fock8.hpp"

namespace grasscs {

/// Coherent state |Z> expanded over the orthonormal basis: coefficient at a
/// label is det(1+Z^+Z)^{-lambda/2} phi_label(Z).  Unit norm for any finite Z.
CoeffVector cs_components(const IrrepContext& ctx, const CMat2& Z);

/// det(1+Z'^+Z)^lambda / [det(1+Z'^+Z')^{lambda/2} det(1+Z^+Z)^{lambda/2}].
Cplx cs_overlap(int lambda, const CMat2& Zp, const CMat2& Z);

/// |Z> as a boson condensate: the lambda-th power of
/// det(bcheck^+ + Z^t acheck^+) applied to the vacuum, normalized.
FockVector cs_fock_condensate(const IrrepContext& ctx, const CMat2& Z);

/// |Z> as exp(tr(Z^t Tplus)/2) on the lowest-weight state; the series
/// terminates once the bottom layer is exhausted.
FockVector cs_fock_exponential(const IrrepContext& ctx, const CMat2& Z);

/// The raising bilinear tr(Z^t Tplus)/2 as a one-body a^+b operator.
OneBodyOp tplus_exponent_op(const CMat2& Z);

/// Spin-s coherent state components over q = -s..s.
Eigen::VectorXcd su2_cs(HalfInt s, Cplx z);

/// (1 + conj(z')z)^{2s} / [(1+|z'|^2)^s (1+|z|^2)^s].
Cplx su2_overlap(HalfInt s, Cplx zp, Cplx z);

/// || (2s+1)/pi Int |z><z| d2z/(1+|z|^2)^2 - 1 ||_max via exact quadrature
/// (Gauss-Legendre in cos(theta), trapezoid in the phase).
double su2_resolution_residual(HalfInt s);

/// Symmetric N-quantum coherent state on the four-mode tower, labeled by
/// three complex numbers; amplitudes keyed by (na, nb, nc, nd).
std::map<std::array<int, 4>, Cplx> cp3_cs(int N, Cplx za, Cplx zb, Cplx zc);

}  // namespace grasscs
