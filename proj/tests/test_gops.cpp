#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grasscs/gops.hpp"
#include "grasscs/rng.hpp"

using namespace grasscs;

TEST_CASE("ladder coefficient") {
    // Vanishing numerator wins over the vanishing j = 0 denominator.
    CHECK(coeff_C(3, HalfInt(0), 2, HalfInt(0), HalfInt(0)) == 0.0);
    CHECK(coeff_C(3, HalfInt(2), 0, HalfInt(2), HalfInt(0)) == 0.0);  // m = 0 factor
    // lambda=1, j=1/2, m=1, qa=qb=1/2: sqrt[1*1*1*2]/sqrt[1*2] = 1.
    CHECK(coeff_C(1, HalfInt(1), 1, HalfInt(1), HalfInt(1)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(coeff_C(0, HalfInt(1), 3, HalfInt(1), HalfInt(1)), std::domain_error);
}

TEST_CASE("pseudospin third component") {
    const IrrepContext ctx(1);
    const OpMatrix t = op_T30(ctx);
    Eigen::VectorXd diag(6);
    for (int i = 0; i < 6; ++i) diag(i) = t(i, i).real();
    Eigen::VectorXd expect(6);
    expect << -2, 0, 0, 0, 0, 2;
    CHECK((diag - expect).cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::abs(t.trace()) == 0.0);

    for (int l = 2; l <= 5; ++l) {
        const IrrepContext c(l);
        const OpMatrix m = op_T30(c);
        CHECK(std::abs(m.trace()) == 0.0);
        for (int i = 0; i < c.dim(); ++i) {
            const long ev = std::lround(m(i, i).real());
            CHECK(ev % 2 == 0);
            CHECK(ev >= -2 * l);
            CHECK(ev <= 2 * l);
        }
    }
}

TEST_CASE("lowering annihilates the ground label") {
    for (int l = 1; l <= 3; ++l) {
        const IrrepContext ctx(l);
        const int ground = ctx.index({HalfInt(0), 0, HalfInt(0), HalfInt(0)});
        for (int mu = 0; mu < 4; ++mu) CHECK(op_Tminus(ctx, mu).col(ground).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("oracle equivalence of every generator") {
    for (int l = 1; l <= 3; ++l) {
        const IrrepContext ctx(l);
        const BasisExpander exp(ctx);
        for (const Gen& g : all_generators()) {
            const double dev = max_abs(op_matrix(ctx, g) - oracle_matrix(ctx, exp, g));
            INFO("generator ", g.name(), " lambda ", l);
            CHECK(dev <= 1e-10);
        }
    }
}

TEST_CASE("the uncorrected tabulations fail the oracle") {
    const IrrepContext ctx(2);
    const BasisExpander exp(ctx);
    for (int mu = 1; mu <= 2; ++mu) {
        const OpMatrix oracle = oracle_matrix(ctx, exp, Gen::tminus(mu));
        CHECK(max_abs(op_Tminus(ctx, mu) - oracle) <= 1e-12);
        CHECK(max_abs(op_Tminus_uncorrected(ctx, mu) - oracle) > 0.5);
    }
    for (int mu = 0; mu < 4; ++mu) {
        const OpMatrix oracle = oracle_matrix(ctx, exp, Gen::tplus(mu));
        CHECK(max_abs(op_Tplus(ctx, mu) - oracle) <= 1e-12);
        CHECK(max_abs(op_Tplus_uncorrected(ctx, mu) - oracle) > 0.1);
    }
    // At lambda = 1 the raising variant coincides with the corrected table.
    const IrrepContext c1(1);
    for (int mu = 0; mu < 4; ++mu)
        CHECK(max_abs(op_Tplus_uncorrected(c1, mu) - op_Tplus(c1, mu)) <= 1e-12);
}

TEST_CASE("spin matrices") {
    const IrrepContext ctx(1);
    const int i = ctx.index({HalfInt(1), 0, HalfInt(1), HalfInt(-1)});
    CHECK(op_spin(ctx, Layer::a, SpinComponent::third)(i, i) == Cplx(0.5));
    CHECK(op_spin(ctx, Layer::b, SpinComponent::third)(i, i) == Cplx(-0.5));

    // Top of the ladder gives a zero column.
    const int top = ctx.index({HalfInt(1), 0, HalfInt(1), HalfInt(1)});
    CHECK(op_spin(ctx, Layer::a, SpinComponent::plus).col(top).cwiseAbs().maxCoeff() == 0.0);

    for (int l = 1; l <= 2; ++l) {
        const IrrepContext c(l);
        for (Layer layer : {Layer::a, Layer::b}) {
            const OpMatrix s3 = op_spin(c, layer, SpinComponent::third);
            const OpMatrix sp = op_spin(c, layer, SpinComponent::plus);
            const OpMatrix sm = op_spin(c, layer, SpinComponent::minus);
            CHECK(max_abs(s3 * sp - sp * s3 - sp) <= 1e-12);
            CHECK(max_abs(s3 * sm - sm * s3 + sm) <= 1e-12);
            CHECK(max_abs(sp * sm - sm * sp - 2.0 * s3) <= 1e-12);
            CHECK(max_abs(sp.adjoint() - sm) == 0.0);
        }
    }
}

TEST_CASE("quadratic invariants") {
    const IrrepContext ctx(2);
    // M^2 on any j = 1/2 label is -8 j(j+1) = -6.
    const int i = ctx.index({HalfInt(1), 0, HalfInt(1), HalfInt(1)});
    CHECK(op_quadratic(ctx, Quad::M2)(i, i) == Cplx(-6.0));

    // T-T- annihilates m = 0 labels.
    const OpMatrix tmtm = op_quadratic(ctx, Quad::TmTm);
    for (int c = 0; c < ctx.dim(); ++c)
        if (ctx.label(c).m == 0) CHECK(tmtm.col(c).cwiseAbs().maxCoeff() == 0.0);

    // Each closed form equals its composition from the ladder matrices.
    std::vector<OpMatrix> tp(4), tm(4);
    for (int mu = 0; mu < 4; ++mu) {
        tp[mu] = op_Tplus(ctx, mu);
        tm[mu] = op_Tminus(ctx, mu);
    }
    const int d = ctx.dim();
    OpMatrix m2 = OpMatrix::Zero(d, d), c_tmtm = m2, c_tptp = m2, c_tptm = m2, c_tmtp = m2;
    for (int mu = 0; mu < 4; ++mu) {
        c_tmtm += eta(mu) * tm[mu] * tm[mu];
        c_tptp += eta(mu) * tp[mu] * tp[mu];
        c_tptm += tp[mu] * tm[mu];
        c_tmtp += tm[mu] * tp[mu];
    }
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const OpMatrix mm = op_M(ctx, mu, nu);
            m2 += eta(mu) * eta(nu) * mm * mm;
        }
    CHECK(max_abs(m2 - op_quadratic(ctx, Quad::M2)) <= 1e-9);
    CHECK(max_abs(c_tmtm - op_quadratic(ctx, Quad::TmTm)) <= 1e-9);
    CHECK(max_abs(c_tptp - op_quadratic(ctx, Quad::TpTp)) <= 1e-9);
    CHECK(max_abs(c_tptm - op_quadratic(ctx, Quad::TpTm)) <= 1e-9);
    CHECK(max_abs(c_tmtp - op_quadratic(ctx, Quad::TmTp)) <= 1e-9);
}

TEST_CASE("casimir eigenvalue") {
    for (int l = 1; l <= 5; ++l) {
        const IrrepContext ctx(l);
        const OpMatrix c = casimir2(ctx);
        const double expect = double(l) * (l + 4.0);
        CHECK(max_abs(c - expect * OpMatrix::Identity(ctx.dim(), ctx.dim())) <= 1e-9);
    }
    CHECK(casimir2(IrrepContext(1))(0, 0).real() == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(casimir2(IrrepContext(2))(0, 0).real() == doctest::Approx(12.0).epsilon(1e-14));
}

TEST_CASE("raising is the adjoint of lowering") {
    for (int l = 1; l <= 3; ++l) {
        const IrrepContext ctx(l);
        for (int mu = 0; mu < 4; ++mu)
            CHECK(max_abs(op_Tplus(ctx, mu).adjoint() - op_Tminus(ctx, mu)) <= 1e-10);
    }
}

TEST_CASE("finite group action") {
    Rng rng(41);
    for (int l = 1; l <= 2; ++l) {
        const IrrepContext ctx(l);
        const ActionSampler sampler(ctx, 404);
        CHECK(sampler.condition() < 1e6);

        // Identity acts trivially.
        CoeffVector c(ctx.dim());
        for (int i = 0; i < ctx.dim(); ++i) c(i) = rng.complex_disc();
        const CoeffVector out = group_action(sampler, GroupElement::identity(), c);
        CHECK((out - c).cwiseAbs().maxCoeff() <= 1e-10);

        // Norm preservation and homomorphism property.
        double worst_norm = 0.0, worst_comp = 0.0;
        for (int t = 0; t < 30; ++t) {
            const CMat4 g1 = random_unitary4(rng), g2 = random_unitary4(rng);
            CoeffVector v(ctx.dim());
            for (int i = 0; i < ctx.dim(); ++i) v(i) = rng.complex_disc();
            v /= v.norm();
            const CoeffVector w = group_action(sampler, GroupElement::from_matrix(g1), v);
            worst_norm = std::max(worst_norm, std::abs(w.norm() - 1.0));
            const CoeffVector once = group_action(sampler, GroupElement::from_matrix(CMat4(g1 * g2)), v);
            const CoeffVector twice =
                group_action(sampler, GroupElement::from_matrix(g1),
                             group_action(sampler, GroupElement::from_matrix(g2), v));
            worst_comp = std::max(worst_comp, (once - twice).cwiseAbs().maxCoeff());
        }
        CHECK(worst_norm <= 1e-8);
        CHECK(worst_comp <= 1e-7);
    }
}

TEST_CASE("one-parameter pseudospin flow matches the diagonal phases") {
    const IrrepContext ctx(2);
    const ActionSampler sampler(ctx, 404);
    Rng rng(42);
    CoeffVector c(ctx.dim());
    for (int i = 0; i < ctx.dim(); ++i) c(i) = rng.complex_disc();
    const double t = 0.37;
    CMat4 g = CMat4::Zero();
    g.block<2, 2>(0, 0) = std::exp(Cplx(0, -t)) * CMat2::Identity();
    g.block<2, 2>(2, 2) = std::exp(Cplx(0, t)) * CMat2::Identity();
    const CoeffVector out = group_action(sampler, GroupElement::from_matrix(g), c);
    for (int i = 0; i < ctx.dim(); ++i) {
        const auto& lab = ctx.label(i);
        const double ev = 2.0 * (lab.j.twice + 2 * lab.m - ctx.lambda());
        CHECK(std::abs(out(i) - std::exp(Cplx(0, ev * t)) * c(i)) <= 1e-9);
    }
}

TEST_CASE("coset factorization") {
    // Identity element factors trivially.
    const IwasawaFactors f0 = iwasawa(GroupElement::identity());
    CHECK(max_abs(f0.Z) == 0.0);
    CHECK(max_abs(f0.U1 - CMat2::Identity()) == 0.0);
    CHECK(max_abs(f0.U2 - CMat2::Identity()) == 0.0);

    Rng rng(43);
    for (int t = 0; t < 25; ++t) {
        CMat2 Z;
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k) Z(i, k) = rng.complex_disc();
        const CMat2 U1 = random_unitary2(rng), U2 = random_unitary2(rng);
        const GroupElement g = group_from_coset(Z, U1, U2);
        const IwasawaFactors f = iwasawa(g);
        CHECK(max_abs(f.Z - Z) <= 1e-10);
        CHECK(max_abs(f.U1 - U1) <= 1e-10);
        CHECK(max_abs(f.U2 - U2) <= 1e-10);
        CHECK(max_abs(group_from_coset(f.Z, f.U1, f.U2).matrix() - g.matrix()) <= 1e-10);
    }

    // Both block identifications of the coset coordinate agree.
    for (int t = 0; t < 25; ++t) {
        const GroupElement h = GroupElement::from_matrix(random_unitary4(rng));
        const CMat2 z1 = h.B * h.D.inverse();
        const CMat2 z2 = -(h.A.adjoint()).inverse() * h.C.adjoint();
        CHECK(max_abs(z1 - z2) <= 1e-10);
    }

    // Outside the invertible patch the factorization refuses.
    GroupElement swap = GroupElement::identity();
    swap.A = CMat2::Zero();
    swap.D = CMat2::Zero();
    swap.B = CMat2::Identity();
    swap.C = -CMat2::Identity();
    CHECK_THROWS_AS(iwasawa(swap), std::domain_error);
}

TEST_CASE("matrix structure constants across representations") {
    for (int l = 1; l <= 3; ++l) {
        const IrrepContext ctx(l);
        auto Tm = [&](int mu) { return OpMatrix(eta(mu) * op_Tminus(ctx, mu)); };
        auto Tp = [&](int mu) { return OpMatrix(eta(mu) * op_Tplus(ctx, mu)); };
        const OpMatrix t30 = op_T30(ctx);
        double worst = 0.0;
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                OpMatrix rhs = 2.0 * op_M(ctx, mu, nu);
                if (mu == nu) rhs += eta(mu) * t30;
                const OpMatrix tp = Tp(mu);
                const OpMatrix tmc = eta(nu) * Tm(nu);
                worst = std::max(worst, max_abs(tp * tmc - tmc * tp - rhs));
            }
        CHECK(worst <= 1e-9);
    }
}
