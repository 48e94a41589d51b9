#include "grasscs/polyring.hpp"

namespace grasscs {

namespace {
const Cplx I{0.0, 1.0};

Poly apply_M(const Poly& p, int mu, int nu) {
    // M_{mu nu} = z_mu d_nu - z_nu d_mu with lowered coordinate factors.
    Poly zmu = Poly::variable(mu, eta(mu));
    Poly znu = Poly::variable(nu, eta(nu));
    return zmu * p.diff(nu) - znu * p.diff(mu);
}

Poly apply_T30(const Poly& p, int lambda) {
    Poly r = Poly::constant(-static_cast<double>(lambda)) * p;
    for (int mu = 0; mu < 4; ++mu) r = r + Poly::variable(mu) * p.diff(mu);
    return r.scaled(2.0);
}

// T_{-mu} = eta^{mu nu} d_nu; the raised component is the plain derivative.
Poly apply_Tminus(const Poly& p, int mu, bool raised) {
    Poly d = p.diff(mu);
    return raised ? d : d.scaled(eta(mu));
}

// T_{+mu} = z^2 d_mu - z_mu T_30.
Poly apply_Tplus(const Poly& p, int mu, bool raised, int lambda) {
    Poly lowered = poly_z_squared() * p.diff(mu) - Poly::variable(mu, eta(mu)) * apply_T30(p, lambda);
    return raised ? lowered.scaled(eta(mu)) : lowered;
}

// S_{aj} = (M_{0j} - i e_{jkl} M_{kl})/2 and S_{bj} with the opposite sign,
// the epsilon sum running over ordered pairs k < l.
Poly apply_spin_cartesian(const Poly& p, Layer l, int j) {
    static const int pair_k[4] = {0, 2, 3, 1};
    static const int pair_l[4] = {0, 3, 1, 2};  // (k,l) with e_{jkl} = +1
    const double sgn = (l == Layer::a) ? -1.0 : 1.0;
    return (apply_M(p, 0, j) + apply_M(p, pair_k[j], pair_l[j]).scaled(sgn * I)).scaled(0.5);
}
}  // namespace

Poly poly_z_squared() {
    Poly r;
    for (int mu = 0; mu < 4; ++mu) {
        Poly::Exp e{};
        e[mu] = 2;
        r.add_term(e, eta(mu));
    }
    return r;
}

PolyEntry to_entry_coords(const Poly& p) {
    // z0 = (z11+z22)/2, z1 = (z12+z21)/2, z2 = i(z12-z21)/2, z3 = (z11-z22)/2.
    std::array<PolyEntry, 4> img;
    img[0] = PolyEntry::variable(0, 0.5) + PolyEntry::variable(3, 0.5);
    img[1] = PolyEntry::variable(1, 0.5) + PolyEntry::variable(2, 0.5);
    img[2] = PolyEntry::variable(1, 0.5 * I) + PolyEntry::variable(2, -0.5 * I);
    img[3] = PolyEntry::variable(0, 0.5) + PolyEntry::variable(3, -0.5);
    return p.substitute(img);
}

Poly from_entry_coords(const PolyEntry& p) {
    // z11 = z0+z3, z12 = z1-iz2, z21 = z1+iz2, z22 = z0-z3.
    std::array<Poly, 4> img;
    img[0] = Poly::variable(0) + Poly::variable(3);
    img[1] = Poly::variable(1) + Poly::variable(2, -I);
    img[2] = Poly::variable(1) + Poly::variable(2, I);
    img[3] = Poly::variable(0) + Poly::variable(3, -1.0);
    return p.substitute(img);
}

std::array<Cplx, 4> z_coords(const CMat2& Z) {
    return {0.5 * (Z(0, 0) + Z(1, 1)), 0.5 * (Z(0, 1) + Z(1, 0)), 0.5 * I * (Z(0, 1) - Z(1, 0)),
            0.5 * (Z(0, 0) - Z(1, 1))};
}

std::array<Cplx, 4> entry_coords(const CMat2& Z) { return {Z(0, 0), Z(0, 1), Z(1, 0), Z(1, 1)}; }

std::string Gen::name() const {
    switch (kind) {
        case Kind::T30: return "T30";
        case Kind::Tminus: return (raised ? "T-^" : "T-_") + std::to_string(mu);
        case Kind::Tplus: return (raised ? "T+^" : "T+_") + std::to_string(mu);
        case Kind::M: return "M" + std::to_string(mu) + std::to_string(nu);
        case Kind::Spin3: return layer == Layer::a ? "Sa3" : "Sb3";
        case Kind::SpinPlus: return layer == Layer::a ? "Sa+" : "Sb+";
        case Kind::SpinMinus: return layer == Layer::a ? "Sa-" : "Sb-";
    }
    return "?";
}

Poly diff_generator(int lambda, const Gen& gen, const Poly& p) {
    if (p.degree() > 2 * lambda)
        throw std::invalid_argument("diff_generator: polynomial degree exceeds 2*lambda");
    switch (gen.kind) {
        case Gen::Kind::T30: return apply_T30(p, lambda);
        case Gen::Kind::Tminus: return apply_Tminus(p, gen.mu, gen.raised);
        case Gen::Kind::Tplus: return apply_Tplus(p, gen.mu, gen.raised, lambda);
        case Gen::Kind::M: return apply_M(p, gen.mu, gen.nu);
        case Gen::Kind::Spin3:
            return apply_spin_cartesian(p, gen.layer, 3);
        case Gen::Kind::SpinPlus: {
            // S_{a+-} = S_{a1} -+ i S_{a2}, S_{b+-} = S_{b1} +- i S_{b2}.
            const double s = (gen.layer == Layer::a) ? -1.0 : 1.0;
            return apply_spin_cartesian(p, gen.layer, 1) + apply_spin_cartesian(p, gen.layer, 2).scaled(s * I);
        }
        case Gen::Kind::SpinMinus: {
            const double s = (gen.layer == Layer::a) ? 1.0 : -1.0;
            return apply_spin_cartesian(p, gen.layer, 1) + apply_spin_cartesian(p, gen.layer, 2).scaled(s * I);
        }
    }
    throw std::logic_error("diff_generator: unhandled generator");
}

CMat4 fundamental_matrix(const Gen& gen) {
    switch (gen.kind) {
        case Gen::Kind::T30: return tau(3, 0);
        case Gen::Kind::Tminus: {
            CMat4 t = tau_ladder(Sign::minus, gen.mu);
            return gen.raised ? CMat4(eta(gen.mu) * t) : t;
        }
        case Gen::Kind::Tplus: {
            CMat4 t = tau_ladder(Sign::plus, gen.mu);
            return gen.raised ? CMat4(eta(gen.mu) * t) : t;
        }
        case Gen::Kind::M: return m_lorentz(gen.mu, gen.nu);
        case Gen::Kind::Spin3: return spin(gen.layer, 3);
        case Gen::Kind::SpinPlus: {
            const Cplx s = (gen.layer == Layer::a) ? Cplx(0, -1) : Cplx(0, 1);
            return spin(gen.layer, 1) + s * spin(gen.layer, 2);
        }
        case Gen::Kind::SpinMinus: {
            const Cplx s = (gen.layer == Layer::a) ? Cplx(0, 1) : Cplx(0, -1);
            return spin(gen.layer, 1) + s * spin(gen.layer, 2);
        }
    }
    throw std::logic_error("fundamental_matrix: unhandled generator");
}

}  // namespace grasscs
