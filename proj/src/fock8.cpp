#include "grasscs/fock8.hpp"

#include <stdexcept>

#include "grasscs/exactmath.hpp"

namespace grasscs {

FockVector tensor_ab(const FockVector4& a, const FockVector4& b) {
    FockVector r;
    for (const auto& [sa, ca] : a.amps())
        for (const auto& [sb, cb] : b.amps())
            r.add({sa[0], sa[1], sa[2], sa[3], sb[0], sb[1], sb[2], sb[3]}, ca * cb);
    return r;
}

FockVector OneBodyOp::apply(const FockVector& v) const {
    FockVector r;
    for (const auto& [s, a] : v.amps())
        for (const auto& t : terms_) {
            const int nj = s[t.annihilate];
            if (nj == 0) continue;
            if (t.create == t.annihilate) {
                r.add(s, a * t.coeff * static_cast<double>(nj));
            } else {
                FockState8 s2 = s;
                s2[t.annihilate] -= 1;
                s2[t.create] += 1;
                r.add(s2, a * t.coeff * std::sqrt(static_cast<double>(nj) * (s[t.create] + 1)));
            }
        }
    return r;
}

OneBodyOp OneBodyOp::from_block_matrix(const CMat4& X) {
    OneBodyOp op;
    for (int r = 0; r < 4; ++r)
        for (int rp = 0; rp < 4; ++rp) {
            if (X(r, rp) == 0.0) continue;
            for (int s = 0; s < 2; ++s) op.add(2 * r + s, 2 * rp + s, X(r, rp));
        }
    return op;
}

OneBodyOp OneBodyOp::zdagz(int s, int t) {
    if (s < 0 || s > 1 || t < 0 || t > 1) throw std::out_of_range("zdagz: indices must be 0..1");
    OneBodyOp op;
    for (int r = 0; r < 4; ++r) op.add(2 * r + s, 2 * r + t, 1.0);
    return op;
}

OneBodyOp OneBodyOp::layer_number(Layer l) {
    OneBodyOp op;
    const int off = (l == Layer::a) ? 0 : 4;
    for (int m = 0; m < 4; ++m) op.add(off + m, off + m, 1.0);
    return op;
}

OneBodyOp OneBodyOp::layer_updown_imbalance(Layer l) {
    OneBodyOp op;
    const int off = (l == Layer::a) ? 0 : 4;
    op.add(off + 0, off + 0, 1.0);
    op.add(off + 1, off + 1, 1.0);
    op.add(off + 2, off + 2, -1.0);
    op.add(off + 3, off + 3, -1.0);
    return op;
}

double g_coeff(HalfInt j, int m, HalfInt q, HalfInt qp, long k) {
    if (abs(q) > j || abs(qp) > j || !(j - q).is_integer() || !(j - qp).is_integer() || m < 0)
        throw std::invalid_argument("g_coeff: invalid labels");
    const long jpq = (j + q).as_int(), jmq = (j - q).as_int();
    const long jpqp = (j + qp).as_int(), jmqp = (j - qp).as_int();
    const long qqp = (q + qp).as_int();
    const long k_lo = std::max(0L, qqp);
    const long k_hi = jpq + m - (jpq - std::min(jpq, jpqp));  // j + m + min(q, q')
    if (k < k_lo || k > k_hi) throw std::out_of_range("g_coeff: k outside support");

    const long na1 = jpqp + m - k;  // j+m+q'-k
    const long na2 = jpq + m - k;   // j+m+q-k
    const long na3 = k - qqp;
    const Rational pre(BigInt(j.twice + 1) * factorial_big(jpq) * factorial_big(jmq) * factorial_big(na2) *
                           factorial_big(na1) * factorial_big(na3) * factorial_big(k),
                       factorial_big(j.twice + m + 1) * factorial_big(m) * factorial_big(jpqp) *
                           factorial_big(jmqp));
    BigInt sum = 0;
    for (long p = 0; p <= m; ++p) {
        const BigInt term = binom_big(jpqp, k - m + p) * binom_big(jmqp, k - m + p - qqp) * binom_big(m, p);
        sum += (p % 2 == 0) ? term : -term;
    }
    return sqrt_rational(pre) * to_double(sum);
}

FockVector4 v_state(HalfInt j, int m, HalfInt q, HalfInt qp) {
    FockVector4 r;
    const long jpq = (j + q).as_int(), jpqp = (j + qp).as_int();
    const long qqp = (q + qp).as_int();
    const long k_lo = std::max(0L, qqp);
    const long k_hi = m + std::min(jpq, jpqp);  // j + m + min(q,q')
    for (long k = k_lo; k <= k_hi; ++k) {
        const FockState4 s = {static_cast<int>(k), static_cast<int>(jpqp + m - k), static_cast<int>(jpq + m - k),
                              static_cast<int>(k - qqp)};
        r.add(s, g_coeff(j, m, q, qp, k));
    }
    return r;
}

FockVector basis_fock(const IrrepContext& ctx, const BasisLabel& l) {
    if (!l.valid(ctx.lambda())) throw std::invalid_argument("basis_fock: invalid label " + l.str());
    const int mb = ctx.lambda() - l.j.twice - l.m;  // lambda - 2j - m
    FockVector r;
    for (int qt = -l.j.twice; qt <= l.j.twice; qt += 2) {
        const HalfInt q(qt);
        const double sgn = parity_sign(l.qa - q);
        r = r + tensor_ab(v_state(l.j, l.m, -q, -l.qa), v_state(l.j, mb, q, l.qb)).scaled(sgn);
    }
    return r.scaled(1.0 / std::sqrt(l.j.twice + 1.0));
}

FockVector lowest_weight(int lambda) {
    if (lambda < 1) throw std::invalid_argument("lowest_weight: lambda must be >= 1");
    FockVector r;
    const double n = 1.0 / std::sqrt(lambda + 1.0);
    for (int k = 0; k <= lambda; ++k) {
        const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        r.add({0, 0, 0, 0, lambda - k, k, k, lambda - k}, sgn * n);
    }
    return r;
}

FockVector apply_creation_poly(const Poly8& p) {
    FockVector r;
    for (const auto& [e, c] : p.terms()) {
        double f = 1.0;
        for (int i = 0; i < 8; ++i) f *= to_double(factorial_big(e[i]));
        r.add({e[0], e[1], e[2], e[3], e[4], e[5], e[6], e[7]}, c * std::sqrt(f));
    }
    return r;
}

Poly8 creation_entry_poly(const PolyEntry& p, Layer layer) {
    const int off = (layer == Layer::a) ? 0 : 4;
    // Transposed block: entry (1,1) -> mode 0, (1,2) -> mode 2,
    // (2,1) -> mode 1, (2,2) -> mode 3.
    static const int mode_of_entry[4] = {0, 2, 1, 3};
    Poly8 r;
    for (const auto& [e, c] : p.terms()) {
        Poly8::Exp e8{};
        for (int v = 0; v < 4; ++v) e8[off + mode_of_entry[v]] = e[v];
        r.add_term(e8, c);
    }
    return r;
}

namespace {
PolyEntry phi_entry_poly(int lambda, HalfInt j, int m, HalfInt qa, HalfInt qb) {
    PolyEntry det;
    det.add_term({1, 0, 0, 1}, 1.0);
    det.add_term({0, 1, 1, 0}, -1.0);
    PolyEntry p = PolyEntry::constant(normalization(lambda, j, m));
    for (int i = 0; i < m; ++i) p = p * det;
    return p * wigner_D_poly(j, qa, qb);
}
}  // namespace

FockVector basis_fock_polynomial_route(const IrrepContext& ctx, const BasisLabel& l) {
    const int lambda = ctx.lambda();
    const int mb = lambda - l.j.twice - l.m;
    const double na = sqrt_rational(Rational(factorial_big(lambda) * factorial_big(lambda + 1),
                                             factorial_big(mb) * factorial_big(lambda + 1 - l.m)));
    const double nb = sqrt_rational(Rational(factorial_big(lambda) * factorial_big(lambda + 1),
                                             factorial_big(l.m) * factorial_big(l.j.twice + l.m + 1)));
    Poly8 total;
    for (int qt = -l.j.twice; qt <= l.j.twice; qt += 2) {
        const HalfInt q(qt);
        const double sgn = parity_sign(l.qa - q);
        const Poly8 pa = creation_entry_poly(phi_entry_poly(lambda, l.j, l.m, -q, -l.qa), Layer::a);
        const Poly8 pb = creation_entry_poly(phi_entry_poly(lambda, l.j, mb, q, l.qb), Layer::b);
        total = total + (pa * pb).scaled(sgn);
    }
    return apply_creation_poly(total).scaled(1.0 / (std::sqrt(l.j.twice + 1.0) * na * nb));
}

FockBasis::FockBasis(const IrrepContext& ctx) : ctx_(&ctx) {
    states_.reserve(ctx.dim());
    for (int i = 0; i < ctx.dim(); ++i) states_.push_back(basis_fock(ctx, ctx.label(i)));
}

OpMatrix FockBasis::matrix(const OneBodyOp& op) const {
    const int d = ctx_->dim();
    OpMatrix out(d, d);
    for (int col = 0; col < d; ++col) {
        const FockVector image = op.apply(states_[col]);
        for (int row = 0; row < d; ++row) out(row, col) = inner(states_[row], image);
    }
    return out;
}

double ConstraintReport::worst() const {
    double w = norm_dev;
    for (double v : {zdagz_dev, layer_quanta_dev, even_odd_dev, qa_qb_dev, expectation_dev}) w = std::max(w, v);
    return w;
}

ConstraintReport constraint_check(const IrrepContext& ctx) {
    const int lambda = ctx.lambda();
    ConstraintReport rep;
    std::array<OneBodyOp, 4> zz;
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) zz[2 * s + t] = OneBodyOp::zdagz(s, t);
    const OneBodyOp num_a = OneBodyOp::layer_number(Layer::a);
    const OneBodyOp imb_a = OneBodyOp::layer_updown_imbalance(Layer::a);
    const OneBodyOp imb_b = OneBodyOp::layer_updown_imbalance(Layer::b);

    for (const auto& l : ctx.labels()) {
        const FockVector v = basis_fock(ctx, l);
        rep.norm_dev = std::max(rep.norm_dev, std::abs(v.norm() - 1.0));

        for (int s = 0; s < 2; ++s)
            for (int t = 0; t < 2; ++t) {
                FockVector im = zz[2 * s + t].apply(v);
                if (s == t) im = im - v.scaled(static_cast<double>(lambda));
                rep.zdagz_dev = std::max(rep.zdagz_dev, im.norm());
            }

        for (const auto& [s, amp] : v.amps()) {
            int na = s[0] + s[1] + s[2] + s[3];
            int total = na + s[4] + s[5] + s[6] + s[7];
            int even = s[0] + s[2] + s[4] + s[6];
            int odd = s[1] + s[3] + s[5] + s[7];
            int da = s[0] + s[1] - s[2] - s[3];
            int db = s[4] + s[5] - s[6] - s[7];
            rep.layer_quanta_dev = std::max(rep.layer_quanta_dev, std::abs(double(na - (l.j.twice + 2 * l.m))));
            rep.layer_quanta_dev = std::max(rep.layer_quanta_dev, std::abs(double(total - 2 * lambda)));
            rep.even_odd_dev = std::max(rep.even_odd_dev, std::abs(double(even - lambda)));
            rep.even_odd_dev = std::max(rep.even_odd_dev, std::abs(double(odd - lambda)));
            rep.qa_qb_dev = std::max(rep.qa_qb_dev, std::abs(double(da + l.qa.twice)));  // da = -2qa
            rep.qa_qb_dev = std::max(rep.qa_qb_dev, std::abs(double(db - l.qb.twice)));
        }

        const double ena = std::real(inner(v, num_a.apply(v)));
        const double eia = std::real(inner(v, imb_a.apply(v)));
        const double eib = std::real(inner(v, imb_b.apply(v)));
        rep.expectation_dev = std::max(rep.expectation_dev, std::abs(ena - (l.j.twice + 2 * l.m)));
        rep.expectation_dev = std::max(rep.expectation_dev, std::abs(eia + l.qa.twice));
        rep.expectation_dev = std::max(rep.expectation_dev, std::abs(eib - l.qb.twice));
    }
    return rep;
}

Eigen::VectorXcd su2_apply(SpinComponent which, HalfInt s, const Eigen::VectorXcd& v) {
    const int dim = s.twice + 1;
    if (v.size() != dim) throw std::invalid_argument("su2_apply: dimension mismatch");
    Eigen::VectorXcd r = Eigen::VectorXcd::Zero(dim);
    for (int i = 0; i < dim; ++i) {
        const double q = -0.5 * s.twice + i;
        const double sv = 0.5 * s.twice;
        switch (which) {
            case SpinComponent::third: r(i) += q * v(i); break;
            case SpinComponent::plus:
                if (i + 1 < dim) r(i + 1) += std::sqrt((sv - q) * (sv + q + 1.0)) * v(i);
                break;
            case SpinComponent::minus:
                if (i - 1 >= 0) r(i - 1) += std::sqrt((sv + q) * (sv - q + 1.0)) * v(i);
                break;
        }
    }
    return r;
}

Eigen::VectorXcd su2_condensate(HalfInt s, Cplx z) {
    if (!s.is_integer() && s.twice < 0) throw std::invalid_argument("su2_condensate: bad s");
    const int n = s.twice;  // 2s quanta
    using Poly2 = SparsePoly<2>;
    Poly2 gen = Poly2::variable(0, z) + Poly2::variable(1, 1.0);  // z a^+ + b^+
    Poly2 power = Poly2::constant(1.0);
    for (int i = 0; i < n; ++i) power = power * gen;
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n + 1);
    for (const auto& [e, c] : power.terms()) {
        const int na = e[0];
        out(na) = c * std::sqrt(to_double(factorial_big(na) * factorial_big(n - na)));
    }
    const double scale = 1.0 / (std::sqrt(to_double(factorial_big(n))) * std::pow(1.0 + std::norm(z), 0.5 * n));
    return scale * out;
}

Eigen::VectorXcd su2_exponential(HalfInt s, Cplx z) {
    const int dim = s.twice + 1;
    Eigen::VectorXcd lowest = Eigen::VectorXcd::Zero(dim);
    lowest(0) = 1.0;
    Eigen::VectorXcd sum = lowest, term = lowest;
    for (int k = 1; k <= s.twice + 1; ++k) {
        term = (z / static_cast<double>(k)) * su2_apply(SpinComponent::plus, s, term);
        sum += term;
    }
    return sum / std::pow(1.0 + std::norm(z), 0.5 * s.twice);
}

}  // namespace grasscs
