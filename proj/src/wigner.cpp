#include "grasscs/wigner.hpp"

#include "grasscs/exactmath.hpp"

namespace grasscs {

bool wigner_valid(HalfInt j, HalfInt qa, HalfInt qb) {
    if (j.twice < 0) return false;
    if (abs(qa) > j || abs(qb) > j) return false;
    return (j - qa).is_integer() && (j - qb).is_integer();
}

namespace {
struct TermRange {
    long k_lo, k_hi;      // summation index range
    long jpa, jma, jpb, jmb;  // j+qa, j-qa, j+qb, j-qb as plain integers
};

TermRange labels_to_range(HalfInt j, HalfInt qa, HalfInt qb) {
    if (!wigner_valid(j, qa, qb)) throw std::invalid_argument("wigner: invalid (j, qa, qb)");
    TermRange t;
    t.jpa = (j + qa).as_int();
    t.jma = (j - qa).as_int();
    t.jpb = (j + qb).as_int();
    t.jmb = (j - qb).as_int();
    const long qab = (qa + qb).as_int();
    t.k_lo = std::max(0L, qab);
    t.k_hi = std::min(t.jpa, t.jpb);
    return t;
}

double prefactor(const TermRange& t) {
    return sqrt_rational(Rational(factorial_big(t.jpa) * factorial_big(t.jma),
                                  factorial_big(t.jpb) * factorial_big(t.jmb)));
}

Cplx pow_int(Cplx x, long n) {
    Cplx r = 1.0;  // 0^0 = 1 by convention
    for (long i = 0; i < n; ++i) r *= x;
    return r;
}
}  // namespace

Cplx wigner_D(HalfInt j, HalfInt qa, HalfInt qb, const CMat2& X) {
    const TermRange t = labels_to_range(j, qa, qb);
    const long qab = t.jpa + t.jpb - j.twice;  // qa + qb
    Cplx sum = 0.0;
    for (long k = t.k_lo; k <= t.k_hi; ++k) {
        const double b = to_double(binom_big(t.jpb, k) * binom_big(t.jmb, k - qab));
        sum += b * pow_int(X(0, 0), k) * pow_int(X(0, 1), t.jpa - k) * pow_int(X(1, 0), t.jpb - k) *
               pow_int(X(1, 1), k - qab);
    }
    return prefactor(t) * sum;
}

PolyEntry wigner_D_poly(HalfInt j, HalfInt qa, HalfInt qb) {
    const TermRange t = labels_to_range(j, qa, qb);
    const long qab = t.jpa + t.jpb - j.twice;
    const double pf = prefactor(t);
    PolyEntry p;
    for (long k = t.k_lo; k <= t.k_hi; ++k) {
        const double b = to_double(binom_big(t.jpb, k) * binom_big(t.jmb, k - qab));
        PolyEntry::Exp e = {static_cast<int>(k), static_cast<int>(t.jpa - k), static_cast<int>(t.jpb - k),
                            static_cast<int>(k - qab)};
        p.add_term(e, pf * b);
    }
    return p;
}

double wigner_mult_residual(HalfInt j, const CMat2& X, const CMat2& Y) {
    const CMat2 XY = X * Y;
    double worst = 0.0;
    for (int q2 = -j.twice; q2 <= j.twice; q2 += 2)
        for (int q2pp = -j.twice; q2pp <= j.twice; q2pp += 2) {
            const HalfInt q(q2), qpp(q2pp);
            Cplx s = 0.0;
            for (int q2p = -j.twice; q2p <= j.twice; q2p += 2)
                s += wigner_D(j, q, HalfInt(q2p), X) * wigner_D(j, HalfInt(q2p), qpp, Y);
            worst = std::max(worst, std::abs(s - wigner_D(j, q, qpp, XY)));
        }
    return worst;
}

double wigner_transpose_residual(HalfInt j, const CMat2& Y) {
    const CMat2 YT = Y.transpose();
    double worst = 0.0;
    for (int q2 = -j.twice; q2 <= j.twice; q2 += 2)
        for (int q2p = -j.twice; q2p <= j.twice; q2p += 2) {
            const HalfInt q(q2), qp(q2p);
            worst = std::max(worst, std::abs(wigner_D(j, q, qp, Y) - wigner_D(j, qp, q, YT)));
        }
    return worst;
}

}  // namespace grasscs
