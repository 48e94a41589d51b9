#include "grasscs/gmeasure.hpp"

#include <numbers>

#include "grasscs/numutil.hpp"
#include "grasscs/rng.hpp"

namespace grasscs {

namespace {
constexpr double kPi = std::numbers::pi;

CMat2 v_factor(double r, double alpha) {
    const double s = 1.0 / std::sqrt(1.0 + r * r);
    const Cplx e{std::cos(alpha), std::sin(alpha)};
    CMat2 v;
    v << s, s * r * e, -s * r * std::conj(e), s;
    return v;
}

long long dlam(int lambda) {
    return static_cast<long long>(lambda + 1) * (lambda + 2) * (lambda + 2) * (lambda + 3);
}
}  // namespace

CMat2 point_to_Z(const G2Point& p) {
    CMat2 xi = CMat2::Zero();
    xi(0, 0) = p.rho1 * Cplx{std::cos(p.theta1), std::sin(p.theta1)};
    xi(1, 1) = p.rho2 * Cplx{std::cos(p.theta2), std::sin(p.theta2)};
    return v_factor(p.r1, p.alpha1) * xi * v_factor(p.r2, p.alpha2).adjoint();
}

double density(int lambda, const G2Point& p) {
    const double c = static_cast<double>(dlam(lambda)) / (kPi * kPi * kPi * kPi);
    const double jac = 0.5 * std::pow(p.rho1 * p.rho1 - p.rho2 * p.rho2, 2);
    const double omega = std::pow((1.0 + p.rho1 * p.rho1) * (1.0 + p.rho2 * p.rho2), -(lambda + 4.0));
    double d = c * jac * omega * p.rho1 * p.rho2;
    d *= p.r1 / std::pow(1.0 + p.r1 * p.r1, 2);
    d *= p.r2 / std::pow(1.0 + p.r2 * p.r2, 2);
    return d;
}

double radial_R(int lambda, HalfInt jm, HalfInt q) {
    return to_double(radial_R_exact(lambda, jm, q)) / (kPi * kPi);
}

Rational radial_R_exact(int lambda, HalfInt jm, HalfInt q) {
    const HalfInt n1h = jm + q, n2h = jm - q;
    if (!n1h.is_integer()) throw std::invalid_argument("radial_R: jm+q must be integral");
    const long n1 = n1h.as_int(), n2 = n2h.as_int();
    if (n1 < 0 || n2 < 0 || n1 > lambda || n2 > lambda)
        throw std::out_of_range("radial_R: binomial index outside range");
    const int jmt = jm.twice, qt = q.twice;
    const Rational num(BigInt(4 + 5 * qt * qt - jmt * jmt + lambda * (2 * jmt + 2 * qt * qt + 4)), BigInt(4));
    const Rational den(BigInt(lambda + 1) * binom_big(lambda, n1) * binom_big(lambda, n2), BigInt(1));
    return num / den;
}

Rational radial_R_beta(int lambda, HalfInt jm, HalfInt q) {
    const long n1 = (jm + q).as_int(), n2 = (jm - q).as_int();
    auto moment = [&](long n) {
        return Rational(factorial_big(n) * factorial_big(lambda + 2 - n), factorial_big(lambda + 3));
    };
    const Rational combo = moment(n1 + 2) * moment(n2) - Rational(2) * moment(n1 + 1) * moment(n2 + 1) +
                           moment(n1) * moment(n2 + 2);
    return Rational(BigInt(dlam(lambda)), BigInt(2)) * combo;
}

double radial_R_quadrature(int lambda, HalfInt jm, HalfInt q, double tol) {
    const long n1 = (jm + q).as_int(), n2 = (jm - q).as_int();
    // After t = rho^2 and u = 1/(1+t) both axes compactify to (0,1] and the
    // integrand becomes polynomial.
    auto axis = [&](double u, long n) {
        return std::pow(1.0 - u, static_cast<double>(n)) * std::pow(u, static_cast<double>(lambda - n));
    };
    auto inner = [&](double u2) {
        return adaptive_simpson(
            [&](double u1) {
                const double d = u2 - u1;
                return 0.5 * d * d * axis(u1, n1) * axis(u2, n2);
            },
            0.0, 1.0, tol);
    };
    const double integral = adaptive_simpson(inner, 0.0, 1.0, tol);
    return static_cast<double>(dlam(lambda)) / (kPi * kPi) * integral;
}

double combinatorial_identity_residual(int lambda, HalfInt j, int m) {
    double sum = 0.0;
    for (int qt = -j.twice; qt <= j.twice; qt += 2)
        sum += to_double(radial_R_exact(lambda, j + m, HalfInt(qt)));
    const double target = (j.twice + 1.0) * (lambda + 1.0) /
                          (binom(lambda + 1, j.twice + m + 1) * binom(lambda + 1, m));
    return std::abs(sum - target);
}

bool combinatorial_identity_exact(int lambda, HalfInt j, int m) {
    Rational sum(0);
    for (int qt = -j.twice; qt <= j.twice; qt += 2) sum += radial_R_exact(lambda, j + m, HalfInt(qt));
    const Rational target(BigInt(j.twice + 1) * BigInt(lambda + 1),
                          binom_big(lambda + 1, j.twice + m + 1) * binom_big(lambda + 1, m));
    return sum == target;
}

namespace {
struct CubeSample {
    CMat2 Z;
    double weight;
};

/// One importance-weighted draw: uniform cube coordinates mapped through the
/// compactifying substitutions; the weight makes the sample mean estimate
/// Int dmu_lambda f.
CubeSample draw(int lambda, Rng& rng) {
    const double u1 = 1.0 - rng.u01(), u2 = 1.0 - rng.u01();
    const double w1 = 1.0 - rng.u01(), w2 = 1.0 - rng.u01();
    G2Point p;
    p.rho1 = std::sqrt((1.0 - u1) / u1);
    p.rho2 = std::sqrt((1.0 - u2) / u2);
    p.theta1 = rng.uniform(0.0, 2.0 * kPi);
    p.theta2 = rng.uniform(0.0, 2.0 * kPi);
    p.r1 = std::sqrt((1.0 - w1) / w1);
    p.r2 = std::sqrt((1.0 - w2) / w2);
    p.alpha1 = rng.uniform(0.0, 2.0 * kPi);
    p.alpha2 = rng.uniform(0.0, 2.0 * kPi);
    const double du = u2 - u1;
    const double weight = 0.5 * dlam(lambda) * du * du * std::pow(u1 * u2, lambda);
    return {point_to_Z(p), weight};
}

constexpr long long kBlock = 1 << 16;

struct Moments {
    Eigen::VectorXcd sum;
    Eigen::VectorXd re2, im2;
    explicit Moments(int n)
        : sum(Eigen::VectorXcd::Zero(n)), re2(Eigen::VectorXd::Zero(n)), im2(Eigen::VectorXd::Zero(n)) {}
    void accumulate(int i, Cplx v) {
        sum(i) += v;
        re2(i) += v.real() * v.real();
        im2(i) += v.imag() * v.imag();
    }
    Moments& operator+=(const Moments& o) {
        sum += o.sum;
        re2 += o.re2;
        im2 += o.im2;
        return *this;
    }
};

Estimate finalize(const Moments& m, int i, long long n) {
    Estimate e;
    e.samples = n;
    e.mean = m.sum(i) / static_cast<double>(n);
    const double var_re = std::max(0.0, m.re2(i) / n - e.mean.real() * e.mean.real());
    const double var_im = std::max(0.0, m.im2(i) / n - e.mean.imag() * e.mean.imag());
    e.stderr_ = std::sqrt((var_re + var_im) / n);
    return e;
}

/// Runs `samples` weighted draws split into fixed blocks with derived
/// per-block seeds; `eval` fills a value vector per sample.
Moments run_mc(int lambda, long long samples, std::uint64_t seed, int threads, int nvalues,
               const std::function<void(const CubeSample&, Eigen::VectorXcd&)>& eval) {
    const int nblocks = static_cast<int>((samples + kBlock - 1) / kBlock);
    std::vector<Moments> partial(nblocks, Moments(nvalues));
    const Rng base(seed);
    parallel_blocks(nblocks, threads, [&](int b) {
        Rng rng = base.derive(static_cast<std::uint64_t>(b));
        const long long lo = static_cast<long long>(b) * kBlock;
        const long long hi = std::min(samples, lo + kBlock);
        Eigen::VectorXcd vals(nvalues);
        for (long long s = lo; s < hi; ++s) {
            const CubeSample cs = draw(lambda, rng);
            eval(cs, vals);
            for (int i = 0; i < nvalues; ++i) partial[b].accumulate(i, vals(i));
        }
    });
    Moments total(nvalues);
    for (const auto& p : partial) total += p;
    return total;
}
}  // namespace

Estimate mc_measure_mass(int lambda, long long samples, std::uint64_t seed, int threads) {
    const Moments m = run_mc(lambda, samples, seed, threads, 1,
                             [](const CubeSample& cs, Eigen::VectorXcd& v) { v(0) = cs.weight; });
    return finalize(m, 0, samples);
}

std::vector<Estimate> mc_orthonormality(const IrrepContext& ctx,
                                        const std::vector<std::pair<BasisLabel, BasisLabel>>& pairs,
                                        long long samples, std::uint64_t seed, int threads) {
    const int np = static_cast<int>(pairs.size());
    const Moments m = run_mc(ctx.lambda(), samples, seed, threads, np,
                             [&](const CubeSample& cs, Eigen::VectorXcd& v) {
                                 for (int i = 0; i < np; ++i) {
                                     const Cplx a = phi(ctx, pairs[i].second, cs.Z);
                                     const Cplx b = phi(ctx, pairs[i].first, cs.Z);
                                     v(i) = cs.weight * a * std::conj(b);
                                 }
                             });
    std::vector<Estimate> out(np);
    for (int i = 0; i < np; ++i) out[i] = finalize(m, i, samples);
    return out;
}

ResolutionEstimate mc_resolution(const IrrepContext& ctx, long long samples, std::uint64_t seed, int threads) {
    const int d = ctx.dim();
    const Moments m =
        run_mc(ctx.lambda(), samples, seed, threads, d * d, [&](const CubeSample& cs, Eigen::VectorXcd& v) {
            Eigen::VectorXcd u(d);
            for (int l = 0; l < d; ++l) u(l) = phi(ctx, ctx.label(l), cs.Z);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) v(r * d + c) = cs.weight * u(r) * std::conj(u(c));
        });
    ResolutionEstimate out;
    out.samples = samples;
    out.mean.resize(d, d);
    out.stderr_.resize(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            const Estimate e = finalize(m, r * d + c, samples);
            out.mean(r, c) = e.mean;
            out.stderr_(r, c) = e.stderr_;
        }
    return out;
}

}  // namespace grasscs
