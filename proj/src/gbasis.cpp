#include "grasscs/gbasis.hpp"

#include <stdexcept>

#include "grasscs/exactmath.hpp"

namespace grasscs {

bool BasisLabel::valid(int lambda) const {
    if (j.twice < 0 || m < 0) return false;
    if (j.twice + m > lambda) return false;
    if (abs(qa) > j || abs(qb) > j) return false;
    return (j - qa).is_integer() && (j - qb).is_integer();
}

std::string BasisLabel::str() const {
    return "(" + j.str() + "," + std::to_string(m) + "," + qa.str() + "," + qb.str() + ")";
}

IrrepContext::IrrepContext(int lambda) : lambda_(lambda) {
    if (lambda < 1) throw std::invalid_argument("IrrepContext: lambda must be >= 1");
    for (int deg = 0; deg <= 2 * lambda; ++deg)
        for (int jt = 0; jt <= lambda; ++jt) {
            const int twom = deg - jt;  // 2m
            if (twom < 0 || twom % 2 != 0) continue;
            const int m = twom / 2;
            if (jt + m > lambda) continue;
            for (int qat = -jt; qat <= jt; qat += 2)
                for (int qbt = -jt; qbt <= jt; qbt += 2)
                    labels_.push_back({HalfInt(jt), m, HalfInt(qat), HalfInt(qbt)});
        }
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) index_[labels_[i]] = i;
    if (static_cast<std::int64_t>(labels_.size()) != dim_lambda(lambda))
        throw std::logic_error("IrrepContext: label count != dim");
}

int IrrepContext::index(const BasisLabel& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) throw std::out_of_range("IrrepContext::index: label " + l.str());
    return it->second;
}

std::int64_t dim_lambda(int lambda) {
    if (lambda < 0) throw std::invalid_argument("dim_lambda: negative lambda");
    const std::int64_t l = lambda;
    return (l + 1) * (l + 2) * (l + 2) * (l + 3) / 12;
}

std::int64_t cf_counting(int lambda) {
    const BigInt r = binom_big(lambda + 3, 3) * binom_big(lambda + 2, 2) / binom_big(lambda + 1, 1);
    return r.convert_to<std::int64_t>();
}

std::int64_t degree_count(int lambda, int n) {
    if (n < 0 || n > 2 * lambda) return 0;
    const long k = (n <= lambda) ? n : 2 * lambda - n;
    return binom_big(k + 3, 3).convert_to<std::int64_t>();
}

double normalization(int lambda, HalfInt j, int m) {
    if (!j.is_integer() && j.twice < 0) throw std::invalid_argument("normalization: bad j");
    if (j.twice < 0 || m < 0 || j.twice + m > lambda)
        throw std::invalid_argument("normalization: label outside carrier space");
    const Rational r(BigInt(j.twice + 1) * binom_big(lambda + 1, j.twice + m + 1) * binom_big(lambda + 1, m),
                     BigInt(lambda + 1));
    return sqrt_rational(r);
}

namespace {
Cplx pow_int(Cplx x, int n) {
    Cplx r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}
}  // namespace

Cplx phi(const IrrepContext& ctx, const BasisLabel& l, const CMat2& Z) {
    if (!l.valid(ctx.lambda())) throw std::invalid_argument("phi: invalid label " + l.str());
    const Cplx det = Z(0, 0) * Z(1, 1) - Z(0, 1) * Z(1, 0);
    return normalization(ctx.lambda(), l.j, l.m) * pow_int(det, l.m) * wigner_D(l.j, l.qa, l.qb, Z);
}

Poly phi_poly(const IrrepContext& ctx, const BasisLabel& l) {
    if (!l.valid(ctx.lambda())) throw std::invalid_argument("phi_poly: invalid label " + l.str());
    PolyEntry det;
    det.add_term({1, 0, 0, 1}, 1.0);
    det.add_term({0, 1, 1, 0}, -1.0);
    PolyEntry p = PolyEntry::constant(normalization(ctx.lambda(), l.j, l.m));
    for (int i = 0; i < l.m; ++i) p = p * det;
    p = p * wigner_D_poly(l.j, l.qa, l.qb);
    return from_entry_coords(p);
}

double lemma1_residual(int lambda, const CMat2& X) {
    // The two sides can cancel to a tiny value when det(1+X) comes close to
    // zero, so the sum is carried out in extended precision to keep the
    // relative comparison meaningful there.
    using LD = std::complex<long double>;
    const LD x11 = X(0, 0), x12 = X(0, 1), x21 = X(1, 0), x22 = X(1, 1);
    const LD det = x11 * x22 - x12 * x21;

    LD lhs = 1.0L;
    for (int k = 0; k < lambda; ++k) lhs *= (1.0L + x11) * (1.0L + x22) - x12 * x21;

    auto powl_int = [](LD x, long n) {
        LD r = 1.0L;
        for (long i = 0; i < n; ++i) r *= x;
        return r;
    };

    LD rhs = 0.0L;
    for (int m = 0; m <= lambda; ++m)
        for (int jt = 0; jt + m <= lambda; ++jt) {
            // Diagonal spin-block trace sum_q D^j_qq(X).
            LD trace_block = 0.0L;
            for (int qt = -jt; qt <= jt; qt += 2) {
                const long jpq = (jt + qt) / 2, jmq = (jt - qt) / 2;
                LD d = 0.0L;
                for (long k = std::max(0L, static_cast<long>(qt)); k <= jpq; ++k) {
                    const long double b =
                        static_cast<long double>(to_double(binom_big(jpq, k) * binom_big(jmq, k - qt)));
                    d += b * powl_int(x11, k) * powl_int(x12, jpq - k) * powl_int(x21, jpq - k) *
                         powl_int(x22, k - qt);
                }
                trace_block += d;
            }
            const long double w = static_cast<long double>(
                to_double(Rational(BigInt(jt + 1) * binom_big(lambda + 1, jt + m + 1) * binom_big(lambda + 1, m),
                                   BigInt(lambda + 1))));
            rhs += w * powl_int(det, m) * trace_block;
        }
    const long double num = std::abs(lhs - rhs);
    const long double den = std::max(std::abs(lhs), 1e-300L);
    return static_cast<double>(num / den);
}

Cplx bergman_kernel(int lambda, const CMat2& Zp, const CMat2& Z) {
    const CMat2 M = CMat2::Identity() + Zp.adjoint() * Z;
    return pow_int(M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0), lambda);
}

double closure_residual(const IrrepContext& ctx, const CMat2& Zp, const CMat2& Z) {
    Cplx sum = 0.0;
    for (const auto& l : ctx.labels()) sum += std::conj(phi(ctx, l, Zp)) * phi(ctx, l, Z);
    const Cplx k = bergman_kernel(ctx.lambda(), Zp, Z);
    return std::abs(sum - k) / std::max(std::abs(k), 1e-300);
}

}  // namespace grasscs
