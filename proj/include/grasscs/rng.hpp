#pragma once

#include <complex>
#include <cstdint>
#include <cmath>
#include <numbers>

namespace grasscs {

/// Deterministic 64-bit generator (xoshiro-style splitmix core).  The
/// uniform doubles are derived from the raw bits directly so that streams
/// are identical across standard libraries and platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * u01(); }

    /// Uniform on the complex disc of the given radius.
    std::complex<double> complex_disc(double radius = 1.0) {
        const double r = radius * std::sqrt(u01());
        const double t = 2.0 * std::numbers::pi * u01();
        return {r * std::cos(t), r * std::sin(t)};
    }

    /// Standard complex Gaussian (Box-Muller).
    std::complex<double> gaussian() {
        double u = u01(), v = u01();
        if (u <= 0.0) u = 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u));
        const double t = 2.0 * std::numbers::pi * v;
        return {r * std::cos(t) / std::sqrt(2.0), r * std::sin(t) / std::sqrt(2.0)};
    }

    /// Derives an independent stream, used for per-block Monte Carlo seeding.
    Rng derive(std::uint64_t block) const {
        Rng r(state_ ^ (0x632be59bd9b4e019ULL + block * 0x9e3779b97f4a7c15ULL));
        r.next_u64();
        return r;
    }

  private:
    std::uint64_t state_;
};

}  // namespace grasscs
