#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "grasscs/algebra4.hpp"

namespace grasscs {

/// Sparse polynomial over N commuting complex variables.  Zero coefficients
/// are never stored.  Immutable-style API: every operation returns a new
/// value.
template <int N>
class SparsePoly {
  public:
    using Exp = std::array<int, N>;
    using Terms = std::map<Exp, Cplx>;

    SparsePoly() = default;

    static SparsePoly constant(Cplx c) {
        SparsePoly p;
        p.add_term(Exp{}, c);
        return p;
    }
    static SparsePoly variable(int i, Cplx c = 1.0) {
        if (i < 0 || i >= N) throw std::out_of_range("SparsePoly: variable index");
        SparsePoly p;
        Exp e{};
        e[i] = 1;
        p.add_term(e, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exp& e, Cplx c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0.0) terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0.0) terms_.erase(it);
        }
    }

    SparsePoly operator+(const SparsePoly& o) const {
        SparsePoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    SparsePoly operator-(const SparsePoly& o) const {
        SparsePoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    SparsePoly operator*(const SparsePoly& o) const {
        SparsePoly r;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                Exp e;
                for (int i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    SparsePoly scaled(Cplx c) const {
        SparsePoly r;
        if (c == 0.0) return r;
        for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
        return r;
    }

    SparsePoly diff(int var) const {
        if (var < 0 || var >= N) throw std::out_of_range("SparsePoly::diff: variable index");
        SparsePoly r;
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exp d = e;
            d[var] -= 1;
            r.add_term(d, c * static_cast<double>(e[var]));
        }
        return r;
    }

    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int i = 0; i < N; ++i) s += e[i];
            d = std::max(d, s);
        }
        return d;
    }

    /// Total degree if every stored monomial has the same one.
    std::optional<int> homogeneous_degree() const {
        std::optional<int> d;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int i = 0; i < N; ++i) s += e[i];
            if (!d) d = s;
            else if (*d != s) return std::nullopt;
        }
        return d ? d : std::optional<int>(0);
    }

    Cplx evaluate(const std::array<Cplx, N>& x) const {
        Cplx total = 0.0;
        for (const auto& [e, c] : terms_) {
            Cplx t = c;
            for (int i = 0; i < N; ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            total += t;
        }
        return total;
    }

    /// Substitutes variable i by images[i]; used for the linear changes of
    /// coordinates between z^mu and matrix-entry variables.
    SparsePoly substitute(const std::array<SparsePoly, N>& images) const {
        SparsePoly r;
        for (const auto& [e, c] : terms_) {
            SparsePoly t = SparsePoly::constant(c);
            for (int i = 0; i < N; ++i)
                for (int k = 0; k < e[i]; ++k) t = t * images[i];
            r = r + t;
        }
        return r;
    }

    /// Drops coefficients with both components below eps in magnitude.
    SparsePoly pruned(double eps) const {
        SparsePoly r;
        for (const auto& [e, c] : terms_)
            if (std::abs(c.real()) > eps || std::abs(c.imag()) > eps) r.terms_.emplace(e, c);
        return r;
    }

    double max_coeff_abs() const {
        double m = 0.0;
        for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
        return m;
    }

    /// Deterministic dump: terms in ascending exponent order, fixed
    /// "a+bi" coefficient formatting.
    std::string dump(const std::array<std::string, N>& names) const;

    bool operator==(const SparsePoly&) const = default;

  private:
    Terms terms_;
};

template <int N>
std::string SparsePoly<N>::dump(const std::array<std::string, N>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    char buf[64];
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::snprintf(buf, sizeof(buf), "(%.17g%+.17gi)", c.real(), c.imag());
        out += buf;
        for (int i = 0; i < N; ++i) {
            if (e[i] == 0) continue;
            out += "*" + names[i];
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

/// Polynomials in the four coset coordinates z^0..z^3.
using Poly = SparsePoly<4>;
/// The same storage viewed in the matrix entries z11, z12, z21, z22.
using PolyEntry = SparsePoly<4>;
/// Polynomials in the eight boson creation variables a0..a3, b0..b3.
using Poly8 = SparsePoly<8>;

/// z^2 = z_mu z^mu = (z0)^2 - (z1)^2 - (z2)^2 - (z3)^2.
Poly poly_z_squared();

/// Change of coordinates induced by Z = z^mu sigma_mu.
PolyEntry to_entry_coords(const Poly& p);
Poly from_entry_coords(const PolyEntry& p);

/// Coordinates z^mu of a 2x2 matrix, and its entries in variable order.
std::array<Cplx, 4> z_coords(const CMat2& Z);
std::array<Cplx, 4> entry_coords(const CMat2& Z);

inline Cplx evaluate_z(const Poly& p, const CMat2& Z) { return p.evaluate(z_coords(Z)); }
inline Cplx evaluate_entry(const PolyEntry& p, const CMat2& Z) { return p.evaluate(entry_coords(Z)); }

/// Identifiers for the differential generators acting on polynomials of
/// degree <= 2*lambda.  `raised` selects the metric-raised component for the
/// ladder families.
struct Gen {
    enum class Kind { T30, Tminus, Tplus, M, Spin3, SpinPlus, SpinMinus } kind;
    int mu = -1, nu = -1;
    bool raised = false;
    Layer layer = Layer::a;

    static Gen t30() { return {Kind::T30}; }
    static Gen tminus(int mu, bool raised = true) { return {Kind::Tminus, mu, -1, raised}; }
    static Gen tplus(int mu, bool raised = true) { return {Kind::Tplus, mu, -1, raised}; }
    static Gen m(int mu, int nu) { return {Kind::M, mu, nu}; }
    static Gen spin3(Layer l) { return {Kind::Spin3, -1, -1, false, l}; }
    static Gen spin_plus(Layer l) { return {Kind::SpinPlus, -1, -1, false, l}; }
    static Gen spin_minus(Layer l) { return {Kind::SpinMinus, -1, -1, false, l}; }

    std::string name() const;
};

/// Applies one generator in its first-order differential form.  Throws if
/// deg(p) exceeds 2*lambda, which signals an input outside the carrier
/// space.
Poly diff_generator(int lambda, const Gen& gen, const Poly& p);

/// The corresponding u(4) matrix in the 4-dim fundamental representation,
/// used to cross-check against the oscillator realization.
CMat4 fundamental_matrix(const Gen& gen);

}  // namespace grasscs
