#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grasscs/fock8.hpp"
#include "grasscs/rng.hpp"

using namespace grasscs;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("amplitude coefficient") {
    // Empty products: j = m = q = q' = 0, k = 0.
    CHECK(g_coeff(HalfInt(0), 0, HalfInt(0), HalfInt(0), 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(g_coeff(HalfInt(0), 0, HalfInt(0), HalfInt(0), 1), std::out_of_range);

    // The bottom-layer block of the lowest-weight state: alternating signs.
    for (int lambda = 1; lambda <= 4; ++lambda) {
        for (long k = 0; k <= lambda; ++k) {
            const double g = g_coeff(HalfInt(0), lambda, HalfInt(0), HalfInt(0), k);
            const double expect = ((lambda - k) % 2 == 0 ? 1.0 : -1.0) / std::sqrt(lambda + 1.0);
            CHECK(g == doctest::Approx(expect).epsilon(1e-14));
        }
    }

    // Unit normalization over k for a spread of labels.
    for (int jt = 0; jt <= 4; ++jt)
        for (int m = 0; m <= 3; ++m)
            for (int q1 = -jt; q1 <= jt; q1 += 2)
                for (int q2 = -jt; q2 <= jt; q2 += 2)
                    CHECK(v_state(HalfInt(jt), m, HalfInt(q1), HalfInt(q2)).norm() ==
                          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("one-layer states: support pattern and orthonormality") {
    // Total quanta of every supported pattern is 2(j+m).
    for (int jt = 0; jt <= 3; ++jt)
        for (int m = 0; m <= 3; ++m)
            for (int q1 = -jt; q1 <= jt; q1 += 2)
                for (int q2 = -jt; q2 <= jt; q2 += 2) {
                    const FockVector4 v = v_state(HalfInt(jt), m, HalfInt(q1), HalfInt(q2));
                    for (const auto& [s, a] : v.amps()) {
                        CHECK(s[0] + s[1] + s[2] + s[3] == jt + 2 * m);
                        CHECK(s[0] + s[1] - s[2] - s[3] == q2);  // 2q'
                        CHECK(s[0] + s[2] - s[1] - s[3] == q1);  // 2q
                    }
                }

    // Orthonormality across all labels with the same quanta budget.
    for (int budget = 0; budget <= 4; ++budget) {
        std::vector<FockVector4> states;
        for (int jt = budget % 2; jt <= budget; jt += 2) {
            const int m = (budget - jt) / 2;
            for (int q1 = -jt; q1 <= jt; q1 += 2)
                for (int q2 = -jt; q2 <= jt; q2 += 2)
                    states.push_back(v_state(HalfInt(jt), m, HalfInt(q1), HalfInt(q2)));
        }
        for (size_t i = 0; i < states.size(); ++i)
            for (size_t k = 0; k < states.size(); ++k)
                CHECK(std::abs(inner(states[i], states[k]) - Cplx(i == k ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("two-quanta basis states match the closed list") {
    const IrrepContext ctx(1);
    auto expect2 = [](const FockState8& s1, double a1, const FockState8& s2, double a2) {
        FockVector v;
        v.add(s1, a1);
        v.add(s2, a2);
        return v;
    };
    struct Row {
        BasisLabel label;
        FockVector expect;
    };
    const std::vector<Row> table = {
        {{HalfInt(0), 0, HalfInt(0), HalfInt(0)},
         expect2({0, 0, 0, 0, 1, 0, 0, 1}, kInvSqrt2, {0, 0, 0, 0, 0, 1, 1, 0}, -kInvSqrt2)},
        {{HalfInt(1), 0, HalfInt(1), HalfInt(1)},
         expect2({0, 0, 0, 1, 1, 0, 0, 0}, kInvSqrt2, {0, 0, 1, 0, 0, 1, 0, 0}, -kInvSqrt2)},
        {{HalfInt(1), 0, HalfInt(-1), HalfInt(-1)},
         expect2({1, 0, 0, 0, 0, 0, 0, 1}, kInvSqrt2, {0, 1, 0, 0, 0, 0, 1, 0}, -kInvSqrt2)},
        {{HalfInt(1), 0, HalfInt(-1), HalfInt(1)},
         expect2({1, 0, 0, 0, 0, 1, 0, 0}, kInvSqrt2, {0, 1, 0, 0, 1, 0, 0, 0}, -kInvSqrt2)},
        {{HalfInt(1), 0, HalfInt(1), HalfInt(-1)},
         expect2({0, 0, 0, 1, 0, 0, 1, 0}, kInvSqrt2, {0, 0, 1, 0, 0, 0, 0, 1}, -kInvSqrt2)},
        {{HalfInt(0), 1, HalfInt(0), HalfInt(0)},
         expect2({1, 0, 0, 1, 0, 0, 0, 0}, kInvSqrt2, {0, 1, 1, 0, 0, 0, 0, 0}, -kInvSqrt2)},
    };
    for (const auto& row : table) CHECK((basis_fock(ctx, row.label) - row.expect).norm() < 1e-14);
}

TEST_CASE("lowest-weight state") {
    for (int lambda = 1; lambda <= 4; ++lambda) {
        const FockVector lw = lowest_weight(lambda);
        CHECK(lw.norm() == doctest::Approx(1.0).epsilon(1e-14));

        const IrrepContext ctx(lambda);
        CHECK((lw - basis_fock(ctx, {HalfInt(0), 0, HalfInt(0), HalfInt(0)})).norm() < 1e-13);

        // Annihilated by every lowering bilinear; imbalance eigenvalue -2 lambda.
        for (int mu = 0; mu < 4; ++mu)
            CHECK(OneBodyOp::from_block_matrix(tau_ladder(Sign::minus, mu)).apply(lw).norm() < 1e-13);
        const FockVector im = OneBodyOp::from_block_matrix(tau(3, 0)).apply(lw);
        CHECK((im + lw.scaled(2.0 * lambda)).norm() < 1e-13);
        // Total quanta bilinear gives 2 lambda.
        const FockVector num = OneBodyOp::from_block_matrix(tau(0, 0)).apply(lw);
        CHECK((num - lw.scaled(2.0 * lambda)).norm() < 1e-13);
    }
}

TEST_CASE("basis states are orthonormal") {
    for (int lambda = 1; lambda <= 3; ++lambda) {
        const IrrepContext ctx(lambda);
        const FockBasis basis(ctx);
        for (int i = 0; i < ctx.dim(); ++i)
            for (int k = i; k < ctx.dim(); ++k)
                CHECK(std::abs(inner(basis.state(i), basis.state(k)) - Cplx(i == k ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("occupancy constraints") {
    for (int lambda = 1; lambda <= 3; ++lambda) {
        const ConstraintReport rep = constraint_check(IrrepContext(lambda));
        CHECK(rep.norm_dev < 1e-12);
        CHECK(rep.zdagz_dev < 1e-12);
        CHECK(rep.layer_quanta_dev == 0.0);
        CHECK(rep.even_odd_dev == 0.0);
        CHECK(rep.qa_qb_dev == 0.0);
        CHECK(rep.expectation_dev < 1e-12);
    }
}

TEST_CASE("bilinears represent the algebra") {
    Rng rng(51);
    for (int t = 0; t < 10; ++t) {
        FockVector v;
        for (int k = 0; k < 5; ++k) {
            FockState8 s{};
            for (int m = 0; m < 8; ++m) s[m] = static_cast<int>(rng.u01() * 3);
            v.add(s, rng.complex_disc());
        }
        CMat4 X = CMat4::Zero(), Y = CMat4::Zero();
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) {
                X(i, k) = rng.complex_disc();
                Y(i, k) = rng.complex_disc();
            }
        const OneBodyOp ox = OneBodyOp::from_block_matrix(X);
        const OneBodyOp oy = OneBodyOp::from_block_matrix(Y);
        const OneBodyOp oc = OneBodyOp::from_block_matrix(CMat4(X * Y - Y * X));
        const FockVector lhs = ox.apply(oy.apply(v)) - oy.apply(ox.apply(v));
        CHECK((lhs - oc.apply(v)).norm() < 1e-10 * std::max(1.0, v.norm()));
    }
}

TEST_CASE("bilinear matrices equal the ladder-table matrices") {
    for (int lambda = 1; lambda <= 3; ++lambda) {
        const IrrepContext ctx(lambda);
        const FockBasis basis(ctx);
        for (const Gen& g : all_generators()) {
            const double dev = max_abs(basis.generator_matrix(fundamental_matrix(g)) - op_matrix(ctx, g));
            INFO("generator ", g.name(), " lambda ", lambda);
            CHECK(dev <= 1e-9);
        }
        // T00 acts as the quanta count 2 lambda.
        const OpMatrix n = basis.generator_matrix(tau(0, 0));
        CHECK(max_abs(n - 2.0 * lambda * OpMatrix::Identity(ctx.dim(), ctx.dim())) < 1e-12);
    }
}

TEST_CASE("casimir from bilinear matrices") {
    for (int lambda = 1; lambda <= 2; ++lambda) {
        const IrrepContext ctx(lambda);
        const FockBasis basis(ctx);
        const int d = ctx.dim();
        OpMatrix c = OpMatrix::Zero(d, d);
        OpMatrix t00 = basis.generator_matrix(tau(0, 0));
        for (int mu = 0; mu < 4; ++mu)
            for (int al = 0; al < 4; ++al) {
                const OpMatrix t = basis.generator_matrix(tau(mu, al));
                c += 0.25 * t * t;
            }
        c -= 0.25 * t00 * t00;
        CHECK(max_abs(c - double(lambda) * (lambda + 4.0) * OpMatrix::Identity(d, d)) <= 1e-9);
    }
}

TEST_CASE("creation-polynomial construction reproduces the states") {
    for (int lambda = 1; lambda <= 2; ++lambda) {
        const IrrepContext ctx(lambda);
        for (const auto& lab : ctx.labels())
            CHECK((basis_fock_polynomial_route(ctx, lab) - basis_fock(ctx, lab)).norm() < 1e-12);
    }
}

TEST_CASE("two-mode realization") {
    // Ladder commutators on a random component vector.
    Rng rng(52);
    for (int st = 1; st <= 6; ++st) {
        const HalfInt s(st);
        Eigen::VectorXcd v(st + 1);
        for (int i = 0; i <= st; ++i) v(i) = rng.complex_disc();
        const auto sp = [&](const Eigen::VectorXcd& x) { return su2_apply(SpinComponent::plus, s, x); };
        const auto sm = [&](const Eigen::VectorXcd& x) { return su2_apply(SpinComponent::minus, s, x); };
        const auto sz = [&](const Eigen::VectorXcd& x) { return su2_apply(SpinComponent::third, s, x); };
        CHECK((sp(sm(v)) - sm(sp(v)) - 2.0 * sz(v)).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((sz(sp(v)) - sp(sz(v)) - sp(v)).cwiseAbs().maxCoeff() < 1e-12);
    }

    // Condensate and exponential constructions agree (checked against the
    // closed form in the coherent-state tests).
    for (int st = 1; st <= 8; ++st) {
        const Cplx z = rng.complex_disc(2.0);
        CHECK((su2_condensate(HalfInt(st), z) - su2_exponential(HalfInt(st), z)).cwiseAbs().maxCoeff() < 1e-13);
    }
}
