#pragma once

#include <utility>
#include <vector>

#include "grasscs/exactmath.hpp"
#include "grasscs/gbasis.hpp"
#include "grasscs/gops.hpp"

namespace grasscs {

/// Coordinates of the Z = V1 Xi V2^+ parametrization: singular radii and
/// phases of Xi plus the stereographic (r, alpha) pairs of the two unitary
/// factors.
struct G2Point {
    double rho1 = 0, rho2 = 0;
    double theta1 = 0, theta2 = 0;
    double r1 = 0, r2 = 0;
    double alpha1 = 0, alpha2 = 0;
};

CMat2 point_to_Z(const G2Point& p);

/// Density of the invariant measure with respect to
/// d rho1 d theta1 d rho2 d theta2 d r1 d alpha1 d r2 d alpha2.
double density(int lambda, const G2Point& p);

/// Closed-form radial integral R^q_{j+m}; jm = j+m and q may be
/// half-integral with jm+q integral.
double radial_R(int lambda, HalfInt jm, HalfInt q);

/// pi^2 R as an exact rational, straight from the closed form.
Rational radial_R_exact(int lambda, HalfInt jm, HalfInt q);

/// pi^2 R recomputed through the Euler-integral moments of the weight; an
/// independent exact route used to cross-check the closed form.
Rational radial_R_beta(int lambda, HalfInt jm, HalfInt q);

/// Adaptive 2-D quadrature of the radial integral on the compactified
/// square; float-only independent check.
double radial_R_quadrature(int lambda, HalfInt jm, HalfInt q, double tol = 1e-12);

/// | sum_q pi^2 R - (2j+1)(lambda+1)/[C(lambda+1,2j+m+1) C(lambda+1,m)] |.
double combinatorial_identity_residual(int lambda, HalfInt j, int m);
/// Exact-rational version: true iff the identity holds exactly.
bool combinatorial_identity_exact(int lambda, HalfInt j, int m);

struct Estimate {
    Cplx mean{0.0, 0.0};
    double stderr_ = 0.0;
    long long samples = 0;

    bool within(Cplx target, double nsigma) const {
        return std::abs(mean - target) <= nsigma * stderr_ + 1e-12;
    }
};

/// Monte Carlo mass of the normalized measure (target 1).
Estimate mc_measure_mass(int lambda, long long samples, std::uint64_t seed, int threads = 1);

/// Monte Carlo scalar products Int dmu phi_{l2} conj(phi_{l1}) for the given
/// label pairs.  Uniform sampling on the unit hypercube after the
/// u = 1/(1+rho^2), w = 1/(1+r^2) substitutions, with per-block derived
/// seeds so results do not depend on the thread count.
std::vector<Estimate> mc_orthonormality(const IrrepContext& ctx,
                                        const std::vector<std::pair<BasisLabel, BasisLabel>>& pairs,
                                        long long samples, std::uint64_t seed, int threads = 1);

struct ResolutionEstimate {
    OpMatrix mean;
    Eigen::MatrixXd stderr_;
    long long samples = 0;
};

/// Monte Carlo estimate of the coherent-state closure integral as a
/// d x d matrix; the target is the identity.
ResolutionEstimate mc_resolution(const IrrepContext& ctx, long long samples, std::uint64_t seed,
                                 int threads = 1);

}  // namespace grasscs
