#pragma once

#include <array>
#include <map>
#include <vector>

#include "grasscs/gbasis.hpp"
#include "grasscs/gops.hpp"

namespace grasscs {

/// Occupation numbers (na0..na3, nb0..nb3); modes 0..3 are the top layer,
/// 4..7 the bottom layer.
using FockState8 = std::array<int, 8>;
/// Single-layer pattern (n0, n1, n2, n3).
using FockState4 = std::array<int, 4>;

/// Sparse ket over occupation states, lexicographically ordered for
/// deterministic serialization.
template <class State>
class SparseKet {
  public:
    using Amps = std::map<State, Cplx>;

    const Amps& amps() const { return amps_; }
    bool empty() const { return amps_.empty(); }

    void add(const State& s, Cplx a) {
        auto it = amps_.find(s);
        if (it == amps_.end()) {
            if (a != 0.0) amps_.emplace(s, a);
        } else {
            it->second += a;
            if (it->second == 0.0) amps_.erase(it);
        }
    }

    SparseKet operator+(const SparseKet& o) const {
        SparseKet r = *this;
        for (const auto& [s, a] : o.amps_) r.add(s, a);
        return r;
    }
    SparseKet operator-(const SparseKet& o) const {
        SparseKet r = *this;
        for (const auto& [s, a] : o.amps_) r.add(s, -a);
        return r;
    }
    SparseKet scaled(Cplx c) const {
        SparseKet r;
        if (c == 0.0) return r;
        for (const auto& [s, a] : amps_) r.amps_.emplace(s, a * c);
        return r;
    }
    SparseKet pruned(double eps) const {
        SparseKet r;
        for (const auto& [s, a] : amps_)
            if (std::abs(a) > eps) r.amps_.emplace(s, a);
        return r;
    }

    double norm() const {
        double n2 = 0.0;
        for (const auto& [s, a] : amps_) n2 += std::norm(a);
        return std::sqrt(n2);
    }

    friend Cplx inner(const SparseKet& bra, const SparseKet& ket) {
        const SparseKet& small = bra.amps_.size() <= ket.amps_.size() ? bra : ket;
        const SparseKet& big = bra.amps_.size() <= ket.amps_.size() ? ket : bra;
        const bool conj_small = &small == &bra;
        Cplx r = 0.0;
        for (const auto& [s, a] : small.amps_) {
            auto it = big.amps_.find(s);
            if (it == big.amps_.end()) continue;
            r += conj_small ? std::conj(a) * it->second : std::conj(it->second) * a;
        }
        return r;
    }

  private:
    Amps amps_;
};

using FockVector = SparseKet<FockState8>;
using FockVector4 = SparseKet<FockState4>;

FockVector tensor_ab(const FockVector4& a, const FockVector4& b);

/// Normal-ordered one-body operator sum_t c_t a^+_{i_t} a_{j_t}.
class OneBodyOp {
  public:
    struct Term {
        int create, annihilate;
        Cplx coeff;
    };

    OneBodyOp() = default;
    explicit OneBodyOp(std::vector<Term> terms) : terms_(std::move(terms)) {}

    const std::vector<Term>& terms() const { return terms_; }
    void add(int create, int annihilate, Cplx c) {
        if (c != 0.0) terms_.push_back({create, annihilate, c});
    }

    FockVector apply(const FockVector& v) const;

    /// Oscillator image of a u(4) element X: tr(Zcal^+ X Zcal), with
    /// Zcal_{r s} the boson matrix whose mode index is 2r+s.
    static OneBodyOp from_block_matrix(const CMat4& X);

    /// Entry (s, t) of the Zcal^+ Zcal constraint matrix.
    static OneBodyOp zdagz(int s, int t);

    /// Counting operators used by the occupancy audits: quanta in one
    /// layer, and the per-layer (0,1) minus (2,3) imbalance.
    static OneBodyOp layer_number(Layer l);
    static OneBodyOp layer_updown_imbalance(Layer l);

  private:
    std::vector<Term> terms_;
};

/// Amplitude G^{j,m}_{q,q'}(k): exact integer alternating sum under an
/// exact rational square root.
double g_coeff(HalfInt j, int m, HalfInt q, HalfInt qp, long k);

/// One-layer building block |v^{j,m}_{q,q'}> as a unit-norm combination of
/// occupation patterns (k, j+m+q'-k; j+m+q-k, k-q-q').
FockVector4 v_state(HalfInt j, int m, HalfInt q, HalfInt qp);

/// Basis state in the eight-mode Fock space.
FockVector basis_fock(const IrrepContext& ctx, const BasisLabel& l);

/// All 2*lambda quanta in the bottom layer in the alternating determinant
/// combination; coincides with basis_fock at the label (0,0,0,0).
FockVector lowest_weight(int lambda);

/// p(a^+_0..b^+_3)|0>, for a commuting polynomial in the creation modes.
FockVector apply_creation_poly(const Poly8& p);

/// Re-letters an entry-variable polynomial into the creation modes of one
/// layer (entries of the transposed block: z11->m0, z12->m2, z21->m1,
/// z22->m3, offset by 4 for layer b).
Poly8 creation_entry_poly(const PolyEntry& p, Layer layer);

/// Basis state rebuilt from products of basis polynomials in the creation
/// operators acting on the vacuum; must reproduce basis_fock.
FockVector basis_fock_polynomial_route(const IrrepContext& ctx, const BasisLabel& l);

/// Cached Fock form of every basis state plus matrix elements.
class FockBasis {
  public:
    explicit FockBasis(const IrrepContext& ctx);

    const IrrepContext& ctx() const { return *ctx_; }
    const FockVector& state(int i) const { return states_.at(i); }

    OpMatrix matrix(const OneBodyOp& op) const;
    OpMatrix generator_matrix(const CMat4& X) const { return matrix(OneBodyOp::from_block_matrix(X)); }

  private:
    const IrrepContext* ctx_;
    std::vector<FockVector> states_;
};

struct ConstraintReport {
    double norm_dev = 0.0;            // | ||state|| - 1 |
    double zdagz_dev = 0.0;           // || (Z^+Z)_{st} v - lambda delta_st v ||
    double layer_quanta_dev = 0.0;    // supported-state audit of sum n_a = 2(j+m)
    double even_odd_dev = 0.0;        // even/odd balance audit
    double qa_qb_dev = 0.0;           // per-layer up/down imbalance audit
    double expectation_dev = 0.0;     // same rules as operator expectations

    double worst() const;
    bool pass(double tol) const { return worst() <= tol; }
};

/// Audits every basis state against the constraint matrix and the
/// occupancy rules, both on supported states and as expectations.
ConstraintReport constraint_check(const IrrepContext& ctx);

/// Two-mode realization: ladder action on spin-s component vectors indexed
/// by q = -s..s.
Eigen::VectorXcd su2_apply(SpinComponent which, HalfInt s, const Eigen::VectorXcd& v);

/// ((b^+ + z a^+)/sqrt(1+|z|^2))^{2s}/sqrt((2s)!) |0>, expanded symbolically.
Eigen::VectorXcd su2_condensate(HalfInt s, Cplx z);

/// exp(z S_+) |s,-s> / (1+|z|^2)^s via the terminating ladder series.
Eigen::VectorXcd su2_exponential(HalfInt s, Cplx z);

}  // namespace grasscs
