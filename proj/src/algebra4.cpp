#include "grasscs/algebra4.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

namespace grasscs {

namespace {
const Cplx I{0.0, 1.0};
}  // namespace

CMat2 pauli(int mu) {
    CMat2 s;
    switch (mu) {
        case 0: s << 1, 0, 0, 1; break;
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, -I, I, 0; break;
        case 3: s << 1, 0, 0, -1; break;
        default: throw std::out_of_range("pauli: index must be 0..3");
    }
    return s;
}

CMat2 pauli_check(int mu) { return eta(mu) * pauli(mu); }

CMat4 kron22(const CMat2& a, const CMat2& b) {
    CMat4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return r;
}

CMat4 tau(int mu, int nu) { return kron22(pauli(mu), pauli(nu)); }

CMat4 tau_ladder(Sign s, int mu) {
    const double pm = (s == Sign::plus) ? 1.0 : -1.0;
    return 0.5 * (tau(1, mu) + pm * I * tau(2, mu));
}

CMat4 m_lorentz(int mu, int nu) {
    if (mu < 0 || mu > 3 || nu < 0 || nu > 3) throw std::out_of_range("m_lorentz: index must be 0..3");
    CMat4 m = CMat4::Zero();
    m.block<2, 2>(0, 0) = pauli(mu) * pauli_check(nu) - pauli(nu) * pauli_check(mu);
    m.block<2, 2>(2, 2) = pauli_check(mu) * pauli(nu) - pauli_check(nu) * pauli(mu);
    return 0.25 * m;
}

CMat4 spin(Layer layer, int j) {
    if (j < 1 || j > 3) throw std::out_of_range("spin: index must be 1..3");
    // s_{aj} = (tau-check_{0j} + tau-check_{3j})/4, s_{bj} = (tau_{0j} - tau_{3j})/4.
    if (layer == Layer::a) return 0.25 * (-tau(0, j) - tau(3, j));
    return 0.25 * (tau(0, j) - tau(3, j));
}

CMat4 casimir1_fundamental() { return tau(0, 0); }

CMat4 casimir2_fundamental(int form) {
    const CMat4 t00 = tau(0, 0);
    switch (form) {
        case 1: {
            CMat4 c = CMat4::Zero();
            for (int mu = 0; mu < 4; ++mu)
                for (int al = 0; al < 4; ++al) c += tau(mu, al) * tau(mu, al);
            return 0.25 * c - 0.25 * t00 * t00;
        }
        case 2: {
            CMat4 c = CMat4::Zero();
            for (int mu = 0; mu < 4; ++mu) {
                c += 0.25 * (tau(0, mu) * tau(0, mu) + tau(3, mu) * tau(3, mu));
                c += 0.5 * (tau_ladder(Sign::minus, mu) * tau_ladder(Sign::plus, mu) +
                            tau_ladder(Sign::plus, mu) * tau_ladder(Sign::minus, mu));
            }
            return c - 0.25 * t00 * t00;
        }
        case 3: {
            CMat4 c = 0.25 * tau(3, 0) * tau(3, 0);
            for (int j = 1; j <= 3; ++j)
                c += 2.0 * (spin(Layer::a, j) * spin(Layer::a, j) + spin(Layer::b, j) * spin(Layer::b, j));
            for (int mu = 0; mu < 4; ++mu)
                c += 0.5 * (tau_ladder(Sign::minus, mu) * tau_ladder(Sign::plus, mu) +
                            tau_ladder(Sign::plus, mu) * tau_ladder(Sign::minus, mu));
            return c;
        }
        default: throw std::out_of_range("casimir2_fundamental: form must be 1..3");
    }
}

CMat4 GroupElement::matrix() const {
    CMat4 g;
    g.block<2, 2>(0, 0) = A;
    g.block<2, 2>(0, 2) = B;
    g.block<2, 2>(2, 0) = C;
    g.block<2, 2>(2, 2) = D;
    return g;
}

GroupElement GroupElement::from_matrix(const CMat4& g) {
    return {g.block<2, 2>(0, 0), g.block<2, 2>(0, 2), g.block<2, 2>(2, 0), g.block<2, 2>(2, 2)};
}

GroupElement GroupElement::identity() {
    return {CMat2::Identity(), CMat2::Zero(), CMat2::Zero(), CMat2::Identity()};
}

bool validate_group_element(const GroupElement& g, double tol) {
    const CMat2 id = CMat2::Identity();
    if (max_abs(g.D.adjoint() * g.D + g.B.adjoint() * g.B - id) > tol) return false;
    if (max_abs(g.A.adjoint() * g.A + g.C.adjoint() * g.C - id) > tol) return false;
    if (max_abs(g.A.adjoint() * g.B + g.C.adjoint() * g.D) > tol) return false;
    const CMat4 m = g.matrix();
    return max_abs(m * m.adjoint() - CMat4::Identity()) <= tol;
}

CMat2 msqrt_psd(const CMat2& h) {
    Eigen::SelfAdjointEigenSolver<CMat2> es(h);
    Eigen::Vector2d ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

GroupElement group_from_coset(const CMat2& Z, const CMat2& U1, const CMat2& U2) {
    const CMat2 id = CMat2::Identity();
    Eigen::SelfAdjointEigenSolver<CMat2> e1(id + Z * Z.adjoint());
    Eigen::SelfAdjointEigenSolver<CMat2> e2(id + Z.adjoint() * Z);
    const CMat2 d1 =
        e1.eigenvectors() * e1.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() * e1.eigenvectors().adjoint();
    const CMat2 d2 =
        e2.eigenvectors() * e2.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() * e2.eigenvectors().adjoint();
    GroupElement g;
    g.A = d1 * U1;
    g.B = Z * d2 * U2;
    g.C = -Z.adjoint() * d1 * U1;
    g.D = d2 * U2;
    return g;
}

CMat2 random_unitary2(Rng& rng) {
    CMat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = rng.gaussian();
    Eigen::HouseholderQR<CMat2> qr(m);
    CMat2 q = qr.householderQ();
    CMat2 r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < 2; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
    return q;
}

CMat4 random_unitary4(Rng& rng) {
    CMat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = rng.gaussian();
    Eigen::HouseholderQR<CMat4> qr(m);
    CMat4 q = qr.householderQ();
    CMat4 r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < 4; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
    return q;
}

double StructureReport::worst() const {
    double w = 0.0;
    for (const auto& e : entries) w = std::max(w, e.max_residual);
    return w;
}

StructureReport check_structure() {
    StructureReport rep;
    auto comm = [](const CMat4& x, const CMat4& y) -> CMat4 { return x * y - y * x; };
    auto tminus_check = [](int mu) { return eta(mu) * tau_ladder(Sign::minus, mu); };
    auto tplus_check = [](int mu) { return eta(mu) * tau_ladder(Sign::plus, mu); };
    const CMat4 t30 = tau(3, 0);

    // [m_{mu nu}, m_{al be}] closes on the metric combinations of m.
    double r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int al = 0; al < 4; ++al)
                for (int be = 0; be < 4; ++be) {
                    CMat4 lhs = comm(m_lorentz(mu, nu), m_lorentz(al, be));
                    CMat4 rhs = CMat4::Zero();
                    if (nu == al) rhs += eta(nu) * m_lorentz(mu, be);
                    if (mu == be) rhs += eta(mu) * m_lorentz(nu, al);
                    if (mu == al) rhs -= eta(mu) * m_lorentz(nu, be);
                    if (nu == be) rhs -= eta(nu) * m_lorentz(mu, al);
                    r = std::max(r, max_abs(lhs - rhs));
                }
    rep.entries.push_back({"[m,m]", r});

    r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int al = 0; al < 4; ++al)
            for (int be = 0; be < 4; ++be) {
                CMat4 lhs = comm(tminus_check(mu), m_lorentz(al, be));
                CMat4 rhs = CMat4::Zero();
                if (mu == al) rhs += eta(mu) * tminus_check(be);
                if (mu == be) rhs -= eta(mu) * tminus_check(al);
                r = std::max(r, max_abs(lhs - rhs));
            }
    rep.entries.push_back({"[t-check,m]", r});

    r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int al = 0; al < 4; ++al)
            for (int be = 0; be < 4; ++be) {
                CMat4 lhs = comm(tplus_check(mu), m_lorentz(al, be));
                CMat4 rhs = CMat4::Zero();
                if (mu == al) rhs += tau_ladder(Sign::plus, be);
                if (mu == be) rhs -= tau_ladder(Sign::plus, al);
                r = std::max(r, max_abs(lhs - rhs));
            }
    rep.entries.push_back({"[t+check,m]", r});

    r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            CMat4 lhs = comm(tau_ladder(Sign::plus, mu), tminus_check(nu));
            CMat4 rhs = 2.0 * m_lorentz(mu, nu);
            if (mu == nu) rhs += eta(mu) * t30;
            r = std::max(r, max_abs(lhs - rhs));
        }
    rep.entries.push_back({"[t+,t-check]", r});

    r = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
        r = std::max(r, max_abs(comm(t30, tau_ladder(Sign::plus, mu)) - 2.0 * tau_ladder(Sign::plus, mu)));
        r = std::max(r, max_abs(comm(t30, tau_ladder(Sign::minus, mu)) + 2.0 * tau_ladder(Sign::minus, mu)));
    }
    rep.entries.push_back({"[t30,t+-]", r});

    r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) r = std::max(r, max_abs(comm(t30, m_lorentz(mu, nu))));
    rep.entries.push_back({"[t30,m]", r});

    r = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            r = std::max(r, max_abs(comm(tau_ladder(Sign::plus, mu), tau_ladder(Sign::plus, nu))));
            r = std::max(r, max_abs(comm(tau_ladder(Sign::minus, mu), tau_ladder(Sign::minus, nu))));
        }
    rep.entries.push_back({"[t+,t+], [t-,t-]", r});

    return rep;
}

}  // namespace grasscs
