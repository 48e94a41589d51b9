#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "grasscs/gmeasure.hpp"
#include "grasscs/rng.hpp"

using namespace grasscs;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("parametrization and density") {
    G2Point p;
    CHECK(max_abs(point_to_Z(p)) == 0.0);  // all radii zero

    p.rho1 = 0.7;
    p.rho2 = 0.7;
    p.r1 = 0.3;
    p.r2 = 0.9;
    CHECK(density(2, p) == 0.0);  // coincident singular values kill the Jacobian

    Rng rng(71);
    for (int t = 0; t < 200; ++t) {
        G2Point q;
        q.rho1 = rng.uniform(0, 3);
        q.rho2 = rng.uniform(0, 3);
        q.theta1 = rng.uniform(0, 2 * kPi);
        q.theta2 = rng.uniform(0, 2 * kPi);
        q.r1 = rng.uniform(0, 3);
        q.r2 = rng.uniform(0, 3);
        q.alpha1 = rng.uniform(0, 2 * kPi);
        q.alpha2 = rng.uniform(0, 2 * kPi);
        CHECK(density(1, q) >= 0.0);
        // Reconstructed Z has singular values (rho1, rho2): positivity holds.
        const CMat2 Z = point_to_Z(q);
        Eigen::JacobiSVD<CMat2> svd(Z);
        const double hi = std::max(q.rho1, q.rho2), lo = std::min(q.rho1, q.rho2);
        CHECK(svd.singularValues()(0) == doctest::Approx(hi).epsilon(1e-10));
        CHECK(svd.singularValues()(1) == doctest::Approx(lo).epsilon(1e-10));
    }

    // Normalization constant: c_lambda pi^4 = (l+1)(l+2)^2(l+3) = 12 d_l.
    G2Point q;
    q.rho1 = 1.0;
    q.rho2 = 2.0;
    q.r1 = q.r2 = 1.0;
    const double c1 = density(1, q) /
                      (0.5 * std::pow(q.rho1 * q.rho1 - q.rho2 * q.rho2, 2) *
                       std::pow((1 + q.rho1 * q.rho1) * (1 + q.rho2 * q.rho2), -5.0) * q.rho1 * q.rho2 *
                       q.r1 / std::pow(1 + q.r1 * q.r1, 2) * q.r2 / std::pow(1 + q.r2 * q.r2, 2));
    CHECK(c1 * kPi * kPi * kPi * kPi == doctest::Approx(72.0).epsilon(1e-12));
}

TEST_CASE("radial integral closed form") {
    // lambda=1, j+m=0, q=0 -> 1/pi^2.
    CHECK(radial_R(1, HalfInt(0), HalfInt(0)) == doctest::Approx(1.0 / (kPi * kPi)).epsilon(1e-14));

    // Even in q, and equal to the independent moment expansion, exactly.
    for (int l = 1; l <= 12; ++l)
        for (int jm2 = 0; jm2 <= l; ++jm2)
            for (int q2 = -jm2; q2 <= jm2; q2 += 2) {
                CHECK(radial_R_exact(l, HalfInt(jm2), HalfInt(q2)) ==
                      radial_R_exact(l, HalfInt(jm2), HalfInt(-q2)));
                CHECK(radial_R_exact(l, HalfInt(jm2), HalfInt(q2)) ==
                      radial_R_beta(l, HalfInt(jm2), HalfInt(q2)));
            }

    CHECK_THROWS(radial_R(1, HalfInt(4), HalfInt(0)));  // binomial index out of range
}

TEST_CASE("radial integral against adaptive quadrature") {
    double worst = 0.0;
    for (int l = 1; l <= 4; ++l)
        for (int jm2 = 0; jm2 <= l; ++jm2)
            for (int q2 = -jm2; q2 <= jm2; q2 += 2)
                worst = std::max(worst, std::abs(radial_R(l, HalfInt(jm2), HalfInt(q2)) -
                                                 radial_R_quadrature(l, HalfInt(jm2), HalfInt(q2))));
    CHECK(worst <= 1e-8);
}

TEST_CASE("combinatorial identity") {
    // Exact in rational arithmetic across the full sweep.
    for (int l = 1; l <= 20; ++l)
        for (int jt = 0; jt <= l; ++jt)
            for (int m = 0; jt + m <= l; ++m) CHECK(combinatorial_identity_exact(l, HalfInt(jt), m));

    // j = 0 reduces to the single q = 0 radial term.
    for (int l = 1; l <= 6; ++l)
        for (int m = 0; m <= l; ++m) {
            const Rational single = radial_R_exact(l, HalfInt(2 * m), HalfInt(0));
            const Rational target(BigInt(l + 1), binom_big(l + 1, m + 1) * binom_big(l + 1, m));
            CHECK(single == target);
            CHECK(combinatorial_identity_residual(l, HalfInt(0), m) <= 1e-12);
        }

    double worst = 0.0;
    for (int l = 1; l <= 20; ++l)
        for (int jt = 0; jt <= l; ++jt)
            for (int m = 0; jt + m <= l; ++m)
                worst = std::max(worst, combinatorial_identity_residual(l, HalfInt(jt), m));
    CHECK(worst <= 1e-9);
}

TEST_CASE("monte carlo: measure mass and block determinism") {
    const long long n = 100000;
    const Estimate e1 = mc_measure_mass(1, n, 777, 1);
    const Estimate e4 = mc_measure_mass(1, n, 777, 4);
    CHECK(e1.mean == e4.mean);  // per-block seeding makes threading invisible
    CHECK(e1.stderr_ == e4.stderr_);
    CHECK(e1.within(1.0, 3.0));
    const Estimate e2 = mc_measure_mass(2, n, 778, 4);
    CHECK(e2.within(1.0, 3.0));
}

TEST_CASE("monte carlo orthonormality") {
    const IrrepContext ctx(1);
    std::vector<std::pair<BasisLabel, BasisLabel>> pairs;
    for (int i = 0; i < ctx.dim(); ++i) pairs.emplace_back(ctx.label(i), ctx.label(i));
    pairs.emplace_back(ctx.label(0), ctx.label(5));
    pairs.emplace_back(ctx.label(1), ctx.label(2));
    const auto est = mc_orthonormality(ctx, pairs, 200000, 779, 4);
    REQUIRE(est.size() == pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
        const Cplx target = (pairs[i].first == pairs[i].second) ? 1.0 : 0.0;
        INFO("pair ", i, " mean ", est[i].mean.real(), " se ", est[i].stderr_);
        CHECK(est[i].within(target, 3.0));
        CHECK(est[i].stderr_ < 0.02);
    }
}

TEST_CASE("monte carlo resolution of identity") {
    const IrrepContext ctx(1);
    const ResolutionEstimate est = mc_resolution(ctx, 200000, 780, 4);
    CHECK(max_abs(est.mean - est.mean.adjoint()) <= 1e-12);
    double worst = 0.0;
    for (int i = 0; i < ctx.dim(); ++i)
        for (int k = 0; k < ctx.dim(); ++k) {
            const Cplx target = (i == k) ? 1.0 : 0.0;
            worst = std::max(worst,
                             std::abs(est.mean(i, k) - target) / std::max(est.stderr_(i, k), 1e-300));
        }
    CHECK(worst <= 3.0);
    Cplx tr = 0.0;
    for (int i = 0; i < ctx.dim(); ++i) tr += est.mean(i, i);
    CHECK(std::abs(tr.real() - ctx.dim()) < 0.05 * ctx.dim());
}
