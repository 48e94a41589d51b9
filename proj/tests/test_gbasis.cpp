#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grasscs/gbasis.hpp"
#include "grasscs/gops.hpp"
#include "grasscs/rng.hpp"

using namespace grasscs;

namespace {
CMat2 rand_mat(Rng& rng, double rad = 1.0) {
    CMat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = rng.complex_disc(rad);
    return m;
}
}  // namespace

TEST_CASE("dimension formulas") {
    CHECK(dim_lambda(0) == 1);
    CHECK(dim_lambda(1) == 6);
    CHECK(dim_lambda(2) == 20);
    CHECK(dim_lambda(3) == 50);
    for (int l = 0; l <= 20; ++l) {
        CHECK(dim_lambda(l) == cf_counting(l));
        std::int64_t graded = 0;
        for (int n = 0; n <= 2 * l; ++n) graded += degree_count(l, n);
        CHECK(dim_lambda(l) == graded);
    }
}

TEST_CASE("label enumeration at lambda=1") {
    const IrrepContext ctx(1);
    REQUIRE(ctx.dim() == 6);
    const std::vector<BasisLabel> expect = {
        {HalfInt(0), 0, HalfInt(0), HalfInt(0)},   {HalfInt(1), 0, HalfInt(-1), HalfInt(-1)},
        {HalfInt(1), 0, HalfInt(-1), HalfInt(1)},  {HalfInt(1), 0, HalfInt(1), HalfInt(-1)},
        {HalfInt(1), 0, HalfInt(1), HalfInt(1)},   {HalfInt(0), 1, HalfInt(0), HalfInt(0)},
    };
    for (int i = 0; i < 6; ++i) CHECK(ctx.label(i) == expect[i]);
    CHECK(ctx.index(expect[3]) == 3);
    CHECK_THROWS_AS(ctx.index({HalfInt(2), 0, HalfInt(0), HalfInt(0)}), std::out_of_range);
}

TEST_CASE("per-degree label counts") {
    for (int l = 1; l <= 6; ++l) {
        const IrrepContext ctx(l);
        std::map<int, std::int64_t> counts;
        for (const auto& lab : ctx.labels()) counts[lab.j.twice + 2 * lab.m] += 1;
        for (int n = 0; n <= 2 * l; ++n) CHECK(counts[n] == degree_count(l, n));
    }
}

TEST_CASE("normalization constants") {
    CHECK(normalization(1, HalfInt(0), 0) == doctest::Approx(1.0).epsilon(1e-15));
    for (int l = 1; l <= 10; ++l) CHECK(normalization(l, HalfInt(0), 0) == doctest::Approx(1.0).epsilon(1e-15));
    // lambda=1, j=0, m=1: sqrt[(1/2) C(2,2) C(2,1)] = 1.
    CHECK(normalization(1, HalfInt(0), 1) == doctest::Approx(1.0).epsilon(1e-15));
    // Symmetry under m <-> lambda - 2j - m.
    for (int l = 1; l <= 8; ++l) {
        const IrrepContext ctx(l);
        for (const auto& lab : ctx.labels())
            CHECK(normalization(l, lab.j, lab.m) ==
                  doctest::Approx(normalization(l, lab.j, l - lab.j.twice - lab.m)).epsilon(1e-15));
    }
    CHECK_THROWS(normalization(1, HalfInt(1), 1));  // 2j + m > lambda
}

TEST_CASE("basis functions") {
    Rng rng(31);
    const IrrepContext ctx(3);
    const BasisLabel ground{HalfInt(0), 0, HalfInt(0), HalfInt(0)};
    for (int t = 0; t < 5; ++t) CHECK(phi(ctx, ground, rand_mat(rng)) == Cplx(1.0));

    // Pure determinant labels.
    for (int m = 1; m <= 3; ++m) {
        const BasisLabel lab{HalfInt(0), m, HalfInt(0), HalfInt(0)};
        const CMat2 Z = rand_mat(rng);
        const Cplx det = Z(0, 0) * Z(1, 1) - Z(0, 1) * Z(1, 0);
        Cplx dm = 1.0;
        for (int k = 0; k < m; ++k) dm *= det;
        CHECK(std::abs(phi(ctx, lab, Z) - normalization(3, HalfInt(0), m) * dm) < 1e-13);
    }

    // Homogeneity degree 2j+2m of the polynomial form, and evaluation match.
    for (const auto& lab : ctx.labels()) {
        const Poly p = phi_poly(ctx, lab);
        CHECK(*p.homogeneous_degree() == lab.j.twice + 2 * lab.m);
        const CMat2 Z = rand_mat(rng);
        CHECK(std::abs(evaluate_z(p, Z) - phi(ctx, lab, Z)) < 1e-12);
    }

    CHECK_THROWS(phi(ctx, {HalfInt(4), 0, HalfInt(0), HalfInt(0)}, CMat2::Identity()));
}

TEST_CASE("determinant expansion identity") {
    // Fixed seed: with entries anywhere in the unit disc, det(1+X) can come
    // arbitrarily close to zero and no floating summation meets a relative
    // target there.
    Rng rng(132);
    // X = 0: both sides are 1, so the relative residual vanishes.
    CHECK(lemma1_residual(3, CMat2::Zero()) < 1e-15);

    // lambda = 1 is the base case 1 + tr + det.
    for (int t = 0; t < 20; ++t) {
        const CMat2 X = rand_mat(rng);
        CHECK(lemma1_residual(1, X) < 1e-14);
    }

    double worst = 0.0;
    for (int l = 1; l <= 6; ++l)
        for (int t = 0; t < 100; ++t) worst = std::max(worst, lemma1_residual(l, rand_mat(rng)));
    CHECK(worst <= 1e-10);
}

TEST_CASE("reproducing kernel closure") {
    Rng rng(33);
    for (int l = 1; l <= 5; ++l) {
        const IrrepContext ctx(l);
        CHECK(closure_residual(ctx, CMat2::Zero(), CMat2::Zero()) < 1e-15);
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) worst = std::max(worst, closure_residual(ctx, rand_mat(rng), rand_mat(rng)));
        CHECK(worst <= 1e-9);

        // Diagonal kernel values are real and >= 1.
        const CMat2 Z = rand_mat(rng);
        const Cplx k = bergman_kernel(l, Z, Z);
        CHECK(k.real() >= 1.0 - 1e-12);
        CHECK(std::abs(k.imag()) < 1e-12 * k.real());
    }
    CHECK(bergman_kernel(4, CMat2::Zero(), CMat2::Zero()) == Cplx(1.0));
}

TEST_CASE("monomial-coefficient matrix has full column rank") {
    for (int l = 1; l <= 4; ++l) {
        const IrrepContext ctx(l);
        const BasisExpander exp(ctx);
        std::map<int, int> counts;
        for (const auto& lab : ctx.labels()) counts[lab.j.twice + 2 * lab.m] += 1;
        int total = 0;
        for (const auto& [deg, cnt] : counts) {
            CHECK(exp.block_rank(deg) == cnt);
            total += exp.block_rank(deg);
        }
        CHECK(total == ctx.dim());
    }
}
