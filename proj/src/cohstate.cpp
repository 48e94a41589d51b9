#include "grasscs/cohstate.hpp"

#include <numbers>
#include <stdexcept>

#include "grasscs/exactmath.hpp"
#include "grasscs/numutil.hpp"

namespace grasscs {

namespace {
double det_one_plus_zdagz(const CMat2& Z) {
    const CMat2 M = CMat2::Identity() + Z.adjoint() * Z;
    const Cplx d = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
    // Real and >= 1 by positivity of 1 + Z^+Z.
    if (std::abs(d.imag()) > 1e-9 * std::abs(d) || d.real() < 1.0 - 1e-9)
        throw std::domain_error("det(1+Z^+Z) must be real and >= 1");
    return d.real();
}

// Creation-mode index and sign of the checked (adjugate) layer blocks.
struct ModeSign {
    int mode;
    double sign;
};
// acheck^+ and bcheck^+ entrywise; annihilation bcheck uses the same table.
constexpr ModeSign kACheckDag[2][2] = {{{3, 1.0}, {2, -1.0}}, {{1, -1.0}, {0, 1.0}}};
constexpr ModeSign kBCheckDag[2][2] = {{{7, 1.0}, {6, -1.0}}, {{5, -1.0}, {4, 1.0}}};
constexpr ModeSign kBCheck[2][2] = {{{7, 1.0}, {5, -1.0}}, {{6, -1.0}, {4, 1.0}}};
}  // namespace

CoeffVector cs_components(const IrrepContext& ctx, const CMat2& Z) {
    const double scale = std::pow(det_one_plus_zdagz(Z), -0.5 * ctx.lambda());
    CoeffVector v(ctx.dim());
    for (int i = 0; i < ctx.dim(); ++i) v(i) = scale * phi(ctx, ctx.label(i), Z);
    return v;
}

Cplx cs_overlap(int lambda, const CMat2& Zp, const CMat2& Z) {
    const Cplx num = bergman_kernel(lambda, Zp, Z);
    const double den = std::pow(det_one_plus_zdagz(Zp) * det_one_plus_zdagz(Z), 0.5 * lambda);
    return num / den;
}

FockVector cs_fock_condensate(const IrrepContext& ctx, const CMat2& Z) {
    const int lambda = ctx.lambda();
    // Entries of bcheck^+ + Z^t acheck^+ as creation polynomials.
    Poly8 M[2][2];
    for (int r = 0; r < 2; ++r)
        for (int t = 0; t < 2; ++t) {
            M[r][t] = Poly8::variable(kBCheckDag[r][t].mode, kBCheckDag[r][t].sign);
            for (int s = 0; s < 2; ++s) {
                const ModeSign a = kACheckDag[s][t];
                M[r][t] = M[r][t] + Poly8::variable(a.mode, Z(s, r) * a.sign);  // (Z^t)_{rs} = Z(s,r)
            }
        }
    Poly8 det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    Poly8 power = Poly8::constant(1.0);
    for (int k = 0; k < lambda; ++k) power = power * det;
    const double scale = 1.0 / (to_double(factorial_big(lambda)) * std::sqrt(lambda + 1.0) *
                                std::pow(det_one_plus_zdagz(Z), 0.5 * lambda));
    return apply_creation_poly(power).scaled(scale);
}

OneBodyOp tplus_exponent_op(const CMat2& Z) {
    // tr(Z^t Tplus)/2 = sum_{s,r} Z_{s r} (acheck^+ bcheck)_{s r}.
    OneBodyOp op;
    for (int s = 0; s < 2; ++s)
        for (int r = 0; r < 2; ++r) {
            if (Z(s, r) == 0.0) continue;
            for (int t = 0; t < 2; ++t) {
                const ModeSign a = kACheckDag[s][t];
                const ModeSign b = kBCheck[t][r];
                op.add(a.mode, b.mode, Z(s, r) * a.sign * b.sign);
            }
        }
    return op;
}

FockVector cs_fock_exponential(const IrrepContext& ctx, const CMat2& Z) {
    const int lambda = ctx.lambda();
    const OneBodyOp raise = tplus_exponent_op(Z);
    FockVector term = lowest_weight(lambda);
    FockVector sum = term;
    for (int k = 1; k <= 2 * lambda; ++k) {
        term = raise.apply(term).scaled(1.0 / k);
        if (term.empty()) break;
        sum = sum + term;
    }
    return sum.scaled(std::pow(det_one_plus_zdagz(Z), -0.5 * lambda));
}

Eigen::VectorXcd su2_cs(HalfInt s, Cplx z) {
    if (s.twice < 0) throw std::invalid_argument("su2_cs: s must be >= 0");
    const int dim = s.twice + 1;
    Eigen::VectorXcd v(dim);
    const double scale = std::pow(1.0 + std::norm(z), -0.5 * s.twice);
    Cplx zp = 1.0;
    for (int i = 0; i < dim; ++i) {  // i = s+q
        v(i) = scale * std::sqrt(binom(s.twice, i)) * zp;
        zp *= z;
    }
    return v;
}

Cplx su2_overlap(HalfInt s, Cplx zp, Cplx z) {
    Cplx num = 1.0;
    const Cplx base = 1.0 + std::conj(zp) * z;
    for (int k = 0; k < s.twice; ++k) num *= base;
    return num / std::pow((1.0 + std::norm(zp)) * (1.0 + std::norm(z)), 0.5 * s.twice);
}

double su2_resolution_residual(HalfInt s) {
    const int dim = s.twice + 1;
    const int nx = s.twice + 4;
    const int nphi = 2 * s.twice + 8;
    const GaussLegendre gl(nx);
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
    for (int ix = 0; ix < nx; ++ix) {
        const double x = gl.nodes[ix];
        const double r = std::sqrt((1.0 - x) / (1.0 + x));  // |z| = tan(theta/2)
        for (int ip = 0; ip < nphi; ++ip) {
            const double phi = 2.0 * std::numbers::pi * ip / nphi;
            const Cplx z = r * Cplx(std::cos(phi), std::sin(phi));
            const Eigen::VectorXcd v = su2_cs(s, z);
            // d2z/(1+|z|^2)^2 = (1/4) sin(theta) dtheta dphi.
            acc += (gl.weights[ix] * 0.25 * (2.0 * std::numbers::pi / nphi)) * (v * v.adjoint());
        }
    }
    acc *= (s.twice + 1.0) / std::numbers::pi;
    return (acc - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

std::map<std::array<int, 4>, Cplx> cp3_cs(int N, Cplx za, Cplx zb, Cplx zc) {
    if (N < 0) throw std::invalid_argument("cp3_cs: N must be >= 0");
    std::map<std::array<int, 4>, Cplx> out;
    const double norm2 = 1.0 + std::norm(za) + std::norm(zb) + std::norm(zc);
    const double scale = std::pow(norm2, -0.5 * N);
    const BigInt nfact = factorial_big(N);
    for (int na = 0; na <= N; ++na)
        for (int nb = 0; nb + na <= N; ++nb)
            for (int nc = 0; nc + nb + na <= N; ++nc) {
                const int nd = N - na - nb - nc;
                const Rational mult(nfact, factorial_big(na) * factorial_big(nb) * factorial_big(nc) *
                                               factorial_big(nd));
                Cplx amp = scale * sqrt_rational(mult);
                for (int k = 0; k < na; ++k) amp *= za;
                for (int k = 0; k < nb; ++k) amp *= zb;
                for (int k = 0; k < nc; ++k) amp *= zc;
                if (amp != 0.0) out[{na, nb, nc, nd}] = amp;
            }
    return out;
}

}  // namespace grasscs
