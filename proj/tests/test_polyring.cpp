#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grasscs/polyring.hpp"
#include "grasscs/rng.hpp"

using namespace grasscs;

namespace {
const Cplx I{0.0, 1.0};

Poly random_int_poly(Rng& rng, int max_deg, int terms) {
    Poly p;
    for (int k = 0; k < terms; ++k) {
        Poly::Exp e{};
        int left = max_deg;
        for (int v = 0; v < 4; ++v) {
            e[v] = static_cast<int>(rng.u01() * (left + 1));
            left -= e[v];
        }
        p.add_term(e, Cplx(std::floor(rng.uniform(-4, 5)), std::floor(rng.uniform(-4, 5))));
    }
    return p;
}
}  // namespace

TEST_CASE("ring basics") {
    const Poly z0 = Poly::variable(0), z1 = Poly::variable(1);
    CHECK((z0 * z1).diff(0) == z1);
    CHECK(((z0 + Poly::variable(3)) * (z0 - Poly::variable(3))).terms().size() == 2);

    // d/dz0 of z0*z1 -> z1; derivative of a constant vanishes.
    CHECK(Poly::constant(3.0).diff(2).is_zero());

    Rng rng(11);
    for (int t = 0; t < 30; ++t) {
        const Poly a = random_int_poly(rng, 3, 5), b = random_int_poly(rng, 3, 5), c = random_int_poly(rng, 3, 5);
        CHECK(((a * b) * c - a * (b * c)).is_zero());
        CHECK((a * (b + c) - (a * b + a * c)).is_zero());
        CHECK((a * b - b * a).is_zero());
    }
}

TEST_CASE("entry coordinate change") {
    // z11 -> z0 + z3 under the inverse substitution.
    PolyEntry z11 = PolyEntry::variable(0);
    CHECK(from_entry_coords(z11) == Poly::variable(0) + Poly::variable(3));

    // Entry determinant maps to the quadratic invariant z^2.
    PolyEntry det;
    det.add_term({1, 0, 0, 1}, 1.0);
    det.add_term({0, 1, 1, 0}, -1.0);
    CHECK((from_entry_coords(det) - poly_z_squared()).is_zero());

    // Round trip is exact on integer-coefficient cubics.
    Rng rng(12);
    for (int t = 0; t < 30; ++t) {
        const Poly p = random_int_poly(rng, 3, 8);
        CHECK((from_entry_coords(to_entry_coords(p)) - p).is_zero());
    }

    // det(Z) evaluated at the identity is 1.
    CMat2 id = CMat2::Identity();
    CHECK(evaluate_entry(det, id) == Cplx(1.0));
    CHECK(std::abs(evaluate_z(poly_z_squared(), id) - Cplx(1.0)) < 1e-15);
}

TEST_CASE("evaluation matches both coordinate systems") {
    Rng rng(13);
    for (int t = 0; t < 20; ++t) {
        const Poly p = random_int_poly(rng, 3, 6);
        CMat2 Z;
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k) Z(i, k) = rng.complex_disc();
        const Cplx a = evaluate_z(p, Z);
        const Cplx b = evaluate_entry(to_entry_coords(p), Z);
        CHECK(std::abs(a - b) < 1e-12);
    }
}

TEST_CASE("differential generators: basic actions") {
    const Poly one = Poly::constant(1.0);

    for (int lambda : {1, 2, 3}) {
        const Poly t30 = diff_generator(lambda, Gen::t30(), one);
        CHECK((t30 - Poly::constant(-2.0 * lambda)).is_zero());
        for (int mu = 0; mu < 4; ++mu) {
            CHECK(diff_generator(lambda, Gen::tminus(mu), one).is_zero());
            CHECK(diff_generator(lambda, Gen::tminus(mu, false), one).is_zero());
        }
    }

    // T30 preserves homogeneity degree; raised T+ adds one; T- removes one.
    // (At lambda = 3 a degree-2 monomial is not annihilated by T30.)
    const Poly q = Poly::variable(0) * Poly::variable(1);
    CHECK(*diff_generator(3, Gen::t30(), q).homogeneous_degree() == 2);
    CHECK(*diff_generator(3, Gen::tplus(1), q).homogeneous_degree() == 3);
    CHECK(*diff_generator(3, Gen::tminus(1), q).homogeneous_degree() == 1);
    // Degree lambda in z is the T30 kernel: 2(deg - lambda) = 0.
    CHECK(diff_generator(2, Gen::t30(), q).is_zero());

    // Degree overflow beyond 2*lambda is rejected.
    Poly deg3 = Poly::variable(0) * Poly::variable(1) * Poly::variable(2);
    CHECK_THROWS_AS(diff_generator(1, Gen::t30(), deg3), std::invalid_argument);
}

TEST_CASE("ladder commutator on random quadratics") {
    // [T+mu, Tminus-check-nu] = eta_{mu nu} T30 + 2 M_{mu nu} at lambda = 2.
    Rng rng(15);
    const int lambda = 2;
    for (int t = 0; t < 5; ++t) {
        const Poly p = random_int_poly(rng, 2, 6);
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                const Gen tp = Gen::tplus(mu, false);
                const Gen tmc = Gen::tminus(nu, true);
                const Poly lhs = diff_generator(lambda, tp, diff_generator(lambda, tmc, p)) -
                                 diff_generator(lambda, tmc, diff_generator(lambda, tp, p));
                Poly rhs = diff_generator(lambda, Gen::m(mu, nu), p).scaled(2.0);
                if (mu == nu) rhs = rhs + diff_generator(lambda, Gen::t30(), p).scaled(eta(mu));
                CHECK((lhs - rhs).max_coeff_abs() < 1e-12);
            }
    }
}

TEST_CASE("full relation set on random polynomials") {
    // Every commutator class, applied to random polynomials of degree
    // <= 2*lambda, for lambda up to 4.  Integer coefficients keep the
    // generator arithmetic exact.
    Rng rng(16);
    for (int lambda : {2, 4}) {
        auto ap = [&](const Gen& g, const Poly& p) { return diff_generator(lambda, g, p); };
        auto comm = [&](const Gen& x, const Gen& y, const Poly& p) {
            return ap(x, ap(y, p)) - ap(y, ap(x, p));
        };
        double worst = 0.0;
        for (int t = 0; t < 3; ++t) {
            const Poly p = random_int_poly(rng, std::min(2 * lambda - 1, 4), 6);
            for (int mu = 0; mu < 4; ++mu) {
                // [T30, T+-mu] = +-2 T+-mu and [T30, M] = 0.
                worst = std::max(worst, (comm(Gen::t30(), Gen::tplus(mu, false), p) -
                                         ap(Gen::tplus(mu, false), p).scaled(2.0))
                                            .max_coeff_abs());
                worst = std::max(worst, (comm(Gen::t30(), Gen::tminus(mu, false), p) +
                                         ap(Gen::tminus(mu, false), p).scaled(2.0))
                                            .max_coeff_abs());
                for (int nu = 0; nu < 4; ++nu) {
                    worst = std::max(worst, comm(Gen::t30(), Gen::m(mu, nu), p).max_coeff_abs());
                    // [T+mu, T+nu] = [T-mu, T-nu] = 0.
                    worst = std::max(worst,
                                     comm(Gen::tplus(mu, false), Gen::tplus(nu, false), p).max_coeff_abs());
                    worst = std::max(worst,
                                     comm(Gen::tminus(mu, false), Gen::tminus(nu, false), p).max_coeff_abs());
                }
            }
            // [m, m] closes on the metric combination.
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = 0; nu < 4; ++nu)
                    for (int al = 0; al < 4; ++al)
                        for (int be = 0; be < 4; ++be) {
                            Poly rhs;
                            if (nu == al) rhs = rhs + ap(Gen::m(mu, be), p).scaled(eta(nu));
                            if (mu == be) rhs = rhs + ap(Gen::m(nu, al), p).scaled(eta(mu));
                            if (mu == al) rhs = rhs - ap(Gen::m(nu, be), p).scaled(eta(mu));
                            if (nu == be) rhs = rhs - ap(Gen::m(mu, al), p).scaled(eta(nu));
                            worst = std::max(
                                worst, (comm(Gen::m(mu, nu), Gen::m(al, be), p) - rhs).max_coeff_abs());
                        }
            // [T-check, m] and [T+check, m].
            for (int mu = 0; mu < 4; ++mu)
                for (int al = 0; al < 4; ++al)
                    for (int be = 0; be < 4; ++be) {
                        Poly rhs;
                        if (mu == al) rhs = rhs + ap(Gen::tminus(be, true), p).scaled(eta(mu));
                        if (mu == be) rhs = rhs - ap(Gen::tminus(al, true), p).scaled(eta(mu));
                        worst = std::max(
                            worst, (comm(Gen::tminus(mu, true), Gen::m(al, be), p) - rhs).max_coeff_abs());
                        Poly rhs2;
                        if (mu == al) rhs2 = rhs2 + ap(Gen::tplus(be, false), p);
                        if (mu == be) rhs2 = rhs2 - ap(Gen::tplus(al, false), p);
                        worst = std::max(
                            worst, (comm(Gen::tplus(mu, true), Gen::m(al, be), p) - rhs2).max_coeff_abs());
                    }
        }
        CHECK(worst <= 1e-11);
    }
}

TEST_CASE("spin ladder conventions") {
    // S_{l3} eigenvalues on first-degree monomials: z11 carries (1/2, 1/2),
    // z12 carries (1/2, -1/2).
    const Poly z11 = Poly::variable(0) + Poly::variable(3);
    const Poly z12 = Poly::variable(1) + Poly::variable(2, -I);
    const int lambda = 1;

    auto eigencheck = [&](const Poly& p, Layer l, double expect) {
        const Poly im = diff_generator(lambda, Gen::spin3(l), p);
        CHECK((im - p.scaled(expect)).max_coeff_abs() < 1e-14);
    };
    eigencheck(z11, Layer::a, 0.5);
    eigencheck(z11, Layer::b, 0.5);
    eigencheck(z12, Layer::a, 0.5);
    eigencheck(z12, Layer::b, -0.5);

    // S_{b+} moves z12 (qb = -1/2) to z11 (qb = +1/2) with unit coefficient.
    const Poly raised = diff_generator(lambda, Gen::spin_plus(Layer::b), z12);
    CHECK((raised - z11).max_coeff_abs() < 1e-14);
    // Top of the ladder is annihilated.
    CHECK(diff_generator(lambda, Gen::spin_plus(Layer::b), z11).max_coeff_abs() < 1e-14);
}

TEST_CASE("dump format is deterministic") {
    Poly p;
    p.add_term({1, 0, 0, 0}, Cplx(1.5, -2.0));
    p.add_term({0, 2, 0, 0}, Cplx(0.0, 1.0));
    const std::array<std::string, 4> names = {"z0", "z1", "z2", "z3"};
    const std::string d = p.dump(names);
    CHECK(d == "(0+1i)*z1^2 + (1.5-2i)*z0");
    CHECK(Poly().dump(names) == "0");
}
