#include "grasscs/gops.hpp"

#include <cmath>
#include <stdexcept>

namespace grasscs {

namespace {
const Cplx I{0.0, 1.0};
}

double coeff_C(int lambda, HalfInt j, int m, HalfInt qa, HalfInt qb) {
    const HalfInt jpa = j + qa, jpb = j + qb;
    if (!jpa.is_integer() || !jpb.is_integer()) throw std::invalid_argument("coeff_C: parity mismatch");
    const long long f1 = jpa.as_int(), f2 = jpb.as_int();
    const long long f3 = m, f4 = lambda - m + 2;
    if (f1 == 0 || f2 == 0 || f3 == 0 || f4 == 0) return 0.0;
    const long long num = f1 * f2 * f3 * f4;
    if (num < 0) throw std::domain_error("coeff_C: negative radicand");
    const long long den = static_cast<long long>(j.twice) * (j.twice + 1);
    return std::sqrt(static_cast<double>(num) / static_cast<double>(den));
}

OpMatrix op_T30(const IrrepContext& ctx) {
    OpMatrix m = OpMatrix::Zero(ctx.dim(), ctx.dim());
    for (int i = 0; i < ctx.dim(); ++i) {
        const auto& l = ctx.label(i);
        m(i, i) = 2.0 * (l.j.twice + 2 * l.m - ctx.lambda());
    }
    return m;
}

namespace {
// One entry of a four-term ladder table.  `sup` selects the (J, M)
// superscript pair of the coefficient: 0 -> (j, m+2j+1), 1 -> (j+1/2, m),
// 2 -> (j, m+1), 3 -> (j+1/2, m+2j+2).  The half-unit subscript offsets go
// with sup 1 and 3.  Sup 4 is the m+2j+1 variant of sup 3: it fails the
// adjointness relation with the lowering table for lambda > 1 and is kept
// only for the documented cross-check.
struct LadderTerm {
    int dj2, dm, dqa2, dqb2;
    Cplx phase;
    int sup;
    int sa, sb;
};

OpMatrix build_ladder(const IrrepContext& ctx, const std::vector<LadderTerm>& terms) {
    const int lambda = ctx.lambda();
    OpMatrix out = OpMatrix::Zero(ctx.dim(), ctx.dim());
    for (int col = 0; col < ctx.dim(); ++col) {
        const auto& l = ctx.label(col);
        for (const auto& t : terms) {
            const bool half = (t.sup == 1 || t.sup >= 3);
            const HalfInt J = half ? HalfInt(l.j.twice + 1) : l.j;
            const int M = (t.sup == 0)   ? l.m + l.j.twice + 1
                          : (t.sup == 1) ? l.m
                          : (t.sup == 2) ? l.m + 1
                          : (t.sup == 3) ? l.m + l.j.twice + 2
                                         : l.m + l.j.twice + 1;
            const HalfInt Qa(t.sa * l.qa.twice + (half ? 1 : 0));
            const HalfInt Qb(t.sb * l.qb.twice + (half ? 1 : 0));
            const double c = coeff_C(lambda, J, M, Qa, Qb);
            if (c == 0.0) continue;
            const BasisLabel tgt{HalfInt(l.j.twice + t.dj2), l.m + t.dm, HalfInt(l.qa.twice + t.dqa2),
                                 HalfInt(l.qb.twice + t.dqb2)};
            if (!tgt.valid(lambda)) continue;
            out(ctx.index(tgt), col) += t.phase * c;
        }
    }
    return out;
}

std::vector<LadderTerm> tminus_terms(int mu, bool corrected) {
    switch (mu) {
        case 0:
            return {{-1, 0, -1, -1, 1.0, 0, +1, +1},
                    {+1, -1, -1, -1, 1.0, 1, -1, -1},
                    {-1, 0, +1, +1, 1.0, 0, -1, -1},
                    {+1, -1, +1, +1, 1.0, 1, +1, +1}};
        case 1: {
            const int d = corrected ? -1 : +1;
            const int e = corrected ? +1 : -1;
            return {{-1, 0, +1, -1, 1.0, 0, -1, +1},
                    {+1, -1, +1, -1, -1.0, 1, +1, -1},
                    {-1, 0, d, e, 1.0, 0, +1, -1},
                    {+1, -1, -1, +1, -1.0, 1, -1, +1}};
        }
        case 2: {
            const int d = corrected ? -1 : +1;
            const int e = corrected ? +1 : -1;
            return {{-1, 0, +1, -1, I, 0, -1, +1},
                    {+1, -1, +1, -1, -I, 1, +1, -1},
                    {-1, 0, d, e, -I, 0, +1, -1},
                    {+1, -1, -1, +1, I, 1, -1, +1}};
        }
        case 3:
            return {{-1, 0, -1, -1, 1.0, 0, +1, +1},
                    {+1, -1, -1, -1, 1.0, 1, -1, -1},
                    {-1, 0, +1, +1, -1.0, 0, -1, -1},
                    {+1, -1, +1, +1, -1.0, 1, +1, +1}};
        default: throw std::out_of_range("tminus_terms: index must be 0..3");
    }
}

std::vector<LadderTerm> tplus_terms(int mu, bool corrected = true) {
    const int s3 = corrected ? 3 : 4;
    switch (mu) {
        case 0:
            return {{-1, +1, -1, -1, 1.0, 2, +1, +1},
                    {-1, +1, +1, +1, 1.0, 2, -1, -1},
                    {+1, 0, -1, -1, 1.0, s3, -1, -1},
                    {+1, 0, +1, +1, 1.0, s3, +1, +1}};
        case 1:
            return {{+1, 0, -1, +1, 1.0, s3, -1, +1},
                    {+1, 0, +1, -1, 1.0, s3, +1, -1},
                    {-1, +1, -1, +1, -1.0, 2, +1, -1},
                    {-1, +1, +1, -1, -1.0, 2, -1, +1}};
        case 2:
            return {{+1, 0, -1, +1, -I, s3, -1, +1},
                    {+1, 0, +1, -1, I, s3, +1, -1},
                    {-1, +1, -1, +1, I, 2, +1, -1},
                    {-1, +1, +1, -1, -I, 2, -1, +1}};
        case 3:
            return {{+1, 0, +1, +1, 1.0, s3, +1, +1},
                    {+1, 0, -1, -1, -1.0, s3, -1, -1},
                    {-1, +1, +1, +1, 1.0, 2, -1, -1},
                    {-1, +1, -1, -1, -1.0, 2, +1, +1}};
        default: throw std::out_of_range("tplus_terms: index must be 0..3");
    }
}
}  // namespace

OpMatrix op_Tminus(const IrrepContext& ctx, int mu) { return build_ladder(ctx, tminus_terms(mu, true)); }

OpMatrix op_Tminus_uncorrected(const IrrepContext& ctx, int mu) {
    return build_ladder(ctx, tminus_terms(mu, false));
}

OpMatrix op_Tplus(const IrrepContext& ctx, int mu) { return build_ladder(ctx, tplus_terms(mu)); }

OpMatrix op_Tplus_uncorrected(const IrrepContext& ctx, int mu) {
    return build_ladder(ctx, tplus_terms(mu, false));
}

OpMatrix op_spin(const IrrepContext& ctx, Layer layer, SpinComponent which) {
    const int lambda = ctx.lambda();
    OpMatrix out = OpMatrix::Zero(ctx.dim(), ctx.dim());
    for (int col = 0; col < ctx.dim(); ++col) {
        const auto& l = ctx.label(col);
        const HalfInt q = (layer == Layer::a) ? l.qa : l.qb;
        if (which == SpinComponent::third) {
            out(col, col) = q.value();
            continue;
        }
        const int step = (which == SpinComponent::plus) ? 2 : -2;
        BasisLabel tgt = l;
        if (layer == Layer::a) tgt.qa = HalfInt(l.qa.twice + step);
        else tgt.qb = HalfInt(l.qb.twice + step);
        if (!tgt.valid(lambda)) continue;
        const double jmq = 0.5 * (which == SpinComponent::plus ? (l.j - q).twice : (l.j + q).twice);
        const double jpq1 = 0.5 * (which == SpinComponent::plus ? (l.j + q).twice + 2 : (l.j - q).twice + 2);
        out(ctx.index(tgt), col) = std::sqrt(jmq * jpq1);
    }
    return out;
}

OpMatrix op_M(const IrrepContext& ctx, int mu, int nu) {
    if (mu < 0 || mu > 3 || nu < 0 || nu > 3) throw std::out_of_range("op_M: index must be 0..3");
    const int d = ctx.dim();
    if (mu == nu) return OpMatrix::Zero(d, d);
    if (mu > nu) return OpMatrix(-op_M(ctx, nu, mu));

    auto S = [&](Layer l, SpinComponent c) { return op_spin(ctx, l, c); };
    auto S_cart = [&](Layer l, int j) -> OpMatrix {
        const OpMatrix sp = S(l, SpinComponent::plus), sm = S(l, SpinComponent::minus);
        // S_{a+-} = S_{a1} -+ i S_{a2}; S_{b+-} = S_{b1} +- i S_{b2}.
        if (j == 1) return 0.5 * (sp + sm);
        if (j == 2) return (l == Layer::a) ? OpMatrix(0.5 * I * (sp - sm)) : OpMatrix(-0.5 * I * (sp - sm));
        return S(l, SpinComponent::third);
    };

    if (mu == 0) return S_cart(Layer::a, nu) + S_cart(Layer::b, nu);
    // Spatial block: M_{kl} = -i e_{klj} (S_{bj} - S_{aj}).
    static const int third[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 0, 1, -1}, {0, -1, 0, 1}, {0, 1, -1, 0}};
    const int j = third[mu][nu];
    const double s = sign[mu][nu];
    return -I * s * (S_cart(Layer::b, j) - S_cart(Layer::a, j));
}

OpMatrix op_quadratic(const IrrepContext& ctx, Quad kind) {
    const int lambda = ctx.lambda();
    OpMatrix out = OpMatrix::Zero(ctx.dim(), ctx.dim());
    for (int col = 0; col < ctx.dim(); ++col) {
        const auto& l = ctx.label(col);
        const double jv = 0.5 * l.j.twice;
        const double m = l.m;
        switch (kind) {
            case Quad::M2: out(col, col) = -8.0 * jv * (jv + 1.0); break;
            case Quad::TmTm: {
                if (l.m == 0) break;
                BasisLabel tgt = l;
                tgt.m -= 1;
                out(ctx.index(tgt), col) =
                    4.0 * std::sqrt(m * (2 * jv + m + 1) * (lambda - m + 2) * (lambda - 2 * jv - m + 1));
                break;
            }
            case Quad::TpTp: {
                BasisLabel tgt = l;
                tgt.m += 1;
                if (!tgt.valid(lambda)) break;
                out(ctx.index(tgt), col) =
                    4.0 * std::sqrt((m + 1) * (2 * jv + m + 2) * (lambda - m + 1) * (lambda - 2 * jv - m));
                break;
            }
            case Quad::TpTm:
                out(col, col) = -4.0 * (2 * jv * jv + m * (m - lambda - 2) + jv * (2 * m - lambda - 1));
                break;
            case Quad::TmTp:
                out(col, col) = -4.0 * (2 * jv * jv + (m + 2) * (m - lambda) + jv * (2 * m - lambda + 3));
                break;
        }
    }
    return out;
}

OpMatrix casimir2(const IrrepContext& ctx) {
    const int d = ctx.dim();
    const OpMatrix t30 = op_T30(ctx);
    OpMatrix c = 0.25 * t30 * t30;
    for (Layer l : {Layer::a, Layer::b}) {
        const OpMatrix s3 = op_spin(ctx, l, SpinComponent::third);
        const OpMatrix sp = op_spin(ctx, l, SpinComponent::plus);
        const OpMatrix sm = op_spin(ctx, l, SpinComponent::minus);
        c += 2.0 * (s3 * s3 + 0.5 * (sp * sm + sm * sp));
    }
    OpMatrix ladder = OpMatrix::Zero(d, d);
    for (int mu = 0; mu < 4; ++mu) {
        const OpMatrix tp = op_Tplus(ctx, mu), tm = op_Tminus(ctx, mu);
        ladder += tm * tp + tp * tm;
    }
    return c + 0.5 * ladder;
}

OpMatrix op_matrix(const IrrepContext& ctx, const Gen& gen) {
    switch (gen.kind) {
        case Gen::Kind::T30: return op_T30(ctx);
        case Gen::Kind::Tminus: {
            OpMatrix m = op_Tminus(ctx, gen.mu);
            return gen.raised ? m : OpMatrix(eta(gen.mu) * m);
        }
        case Gen::Kind::Tplus: {
            OpMatrix m = op_Tplus(ctx, gen.mu);
            return gen.raised ? m : OpMatrix(eta(gen.mu) * m);
        }
        case Gen::Kind::M: return op_M(ctx, gen.mu, gen.nu);
        case Gen::Kind::Spin3: return op_spin(ctx, gen.layer, SpinComponent::third);
        case Gen::Kind::SpinPlus: return op_spin(ctx, gen.layer, SpinComponent::plus);
        case Gen::Kind::SpinMinus: return op_spin(ctx, gen.layer, SpinComponent::minus);
    }
    throw std::logic_error("op_matrix: unhandled generator");
}

std::vector<Gen> all_generators() {
    std::vector<Gen> gens{Gen::t30()};
    for (int mu = 0; mu < 4; ++mu) {
        gens.push_back(Gen::tminus(mu));
        gens.push_back(Gen::tplus(mu));
    }
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) gens.push_back(Gen::m(mu, nu));
    for (Layer l : {Layer::a, Layer::b}) {
        gens.push_back(Gen::spin3(l));
        gens.push_back(Gen::spin_plus(l));
        gens.push_back(Gen::spin_minus(l));
    }
    return gens;
}

BasisExpander::BasisExpander(const IrrepContext& ctx) : ctx_(&ctx) {
    const int lambda = ctx.lambda();
    basis_.reserve(ctx.dim());
    for (int i = 0; i < ctx.dim(); ++i) basis_.push_back(phi_poly(ctx, ctx.label(i)));

    blocks_.resize(2 * lambda + 1);
    for (int i = 0; i < ctx.dim(); ++i) {
        const auto& l = ctx.label(i);
        blocks_[l.j.twice + 2 * l.m].label_ids.push_back(i);
    }
    for (int n = 0; n <= 2 * lambda; ++n) {
        Block& b = blocks_[n];
        int idx = 0;
        for (int e0 = 0; e0 <= n; ++e0)
            for (int e1 = 0; e1 + e0 <= n; ++e1)
                for (int e2 = 0; e2 + e1 + e0 <= n; ++e2)
                    b.monomials[{e0, e1, e2, n - e0 - e1 - e2}] = idx++;
        if (b.label_ids.empty()) continue;
        b.A = Eigen::MatrixXcd::Zero(idx, static_cast<int>(b.label_ids.size()));
        for (int c = 0; c < static_cast<int>(b.label_ids.size()); ++c)
            for (const auto& [e, v] : basis_[b.label_ids[c]].terms()) b.A(b.monomials.at(e), c) = v;
        b.qr.compute(b.A);
    }
}

int BasisExpander::block_rank(int degree) const {
    const Block& b = blocks_.at(degree);
    if (b.label_ids.empty()) return 0;
    return static_cast<int>(b.qr.rank());
}

CoeffVector BasisExpander::expand(const Poly& p, double* residual) const {
    CoeffVector out = CoeffVector::Zero(ctx_->dim());
    double res = 0.0;
    // Split by homogeneity degree; anything outside a populated block must
    // be numerically zero and is charged to the residual.
    std::vector<Poly> by_degree(2 * ctx_->lambda() + 2);
    for (const auto& [e, c] : p.terms()) {
        const int n = e[0] + e[1] + e[2] + e[3];
        if (n >= static_cast<int>(by_degree.size())) {
            res = std::max(res, std::abs(c));
            continue;
        }
        by_degree[n].add_term(e, c);
    }
    for (int n = 0; n < static_cast<int>(by_degree.size()); ++n) {
        if (by_degree[n].is_zero()) continue;
        if (n >= static_cast<int>(blocks_.size()) || blocks_[n].label_ids.empty()) {
            res = std::max(res, by_degree[n].max_coeff_abs());
            continue;
        }
        const Block& b = blocks_[n];
        Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(b.A.rows());
        for (const auto& [e, c] : by_degree[n].terms()) rhs(b.monomials.at(e)) = c;
        const Eigen::VectorXcd sol = b.qr.solve(rhs);
        res = std::max(res, (b.A * sol - rhs).cwiseAbs().maxCoeff());
        for (int c = 0; c < sol.size(); ++c) out(b.label_ids[c]) = sol(c);
    }
    if (residual) *residual = res;
    return out;
}

OpMatrix oracle_matrix(const IrrepContext& ctx, const BasisExpander& exp, const Gen& gen) {
    OpMatrix out = OpMatrix::Zero(ctx.dim(), ctx.dim());
    for (int col = 0; col < ctx.dim(); ++col) {
        double res = 0.0;
        const Poly image = diff_generator(ctx.lambda(), gen, exp.basis_poly(col));
        out.col(col) = exp.expand(image, &res);
        if (res > 1e-8 * std::max(1.0, image.max_coeff_abs()))
            throw std::runtime_error("oracle_matrix: generator image left the basis span");
    }
    return out;
}

ActionSampler::ActionSampler(const IrrepContext& ctx, std::uint64_t seed, double max_condition) : ctx_(&ctx) {
    const int d = ctx.dim();
    Rng rng(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
        points_.clear();
        for (int s = 0; s < d; ++s) {
            CMat2 Z;
            for (int i = 0; i < 2; ++i)
                for (int k = 0; k < 2; ++k) Z(i, k) = rng.complex_disc(0.8);
            points_.push_back(Z);
        }
        Eigen::MatrixXcd E(d, d);
        for (int s = 0; s < d; ++s)
            for (int l = 0; l < d; ++l) E(s, l) = phi(ctx, ctx.label(l), points_[s]);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(E);
        const double smin = svd.singularValues()(d - 1);
        condition_ = (smin > 0.0) ? svd.singularValues()(0) / smin : std::numeric_limits<double>::infinity();
        if (condition_ < max_condition) {
            lu_.compute(E);
            return;
        }
    }
    throw std::runtime_error("ActionSampler: could not draw a well-conditioned evaluation grid");
}

CoeffVector ActionSampler::solve(const CoeffVector& values) const { return lu_.solve(values); }

CoeffVector group_action(const ActionSampler& sampler, const GroupElement& g, const CoeffVector& coeffs) {
    const IrrepContext& ctx = sampler.ctx();
    const int lambda = ctx.lambda();
    const int d = ctx.dim();
    if (coeffs.size() != d) throw std::invalid_argument("group_action: coefficient size mismatch");
    const CMat2 Ad = g.A.adjoint(), Bd = g.B.adjoint(), Cd = g.C.adjoint(), Dd = g.D.adjoint();
    CoeffVector values(d);
    for (int s = 0; s < d; ++s) {
        const CMat2& Z = sampler.points()[s];
        const CMat2 W = Dd + Bd * Z;
        const Cplx detW = W(0, 0) * W(1, 1) - W(0, 1) * W(1, 0);
        if (std::abs(detW) < 1e-9) throw std::runtime_error("group_action: singular Moebius denominator");
        const CMat2 Zp = (Ad * Z + Cd) * W.inverse();
        Cplx val = 0.0;
        for (int l = 0; l < d; ++l)
            if (coeffs(l) != 0.0) val += coeffs(l) * phi(ctx, ctx.label(l), Zp);
        Cplx pref = 1.0;
        for (int k = 0; k < lambda; ++k) pref *= detW;
        values(s) = pref * val;
    }
    return sampler.solve(values);
}

IwasawaFactors iwasawa(const GroupElement& g) {
    const Cplx detA = g.A(0, 0) * g.A(1, 1) - g.A(0, 1) * g.A(1, 0);
    const Cplx detD = g.D(0, 0) * g.D(1, 1) - g.D(0, 1) * g.D(1, 0);
    if (std::abs(detA) < 1e-12 || std::abs(detD) < 1e-12)
        throw std::domain_error("iwasawa: element outside the A,D-invertible patch");
    IwasawaFactors f;
    f.Z = g.B * g.D.inverse();
    const CMat2 d1 = msqrt_psd(g.A * g.A.adjoint());
    const CMat2 d2 = msqrt_psd(g.D * g.D.adjoint());
    f.U1 = d1.inverse() * g.A;
    f.U2 = d2.inverse() * g.D;
    return f;
}

}  // namespace grasscs
