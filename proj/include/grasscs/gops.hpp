#pragma once

#include <Eigen/Dense>
#include <vector>

#include "grasscs/gbasis.hpp"

namespace grasscs {

using OpMatrix = Eigen::MatrixXcd;
using CoeffVector = Eigen::VectorXcd;

/// Ladder coefficient C^{j,m}_{qa,qb} =
/// sqrt[(j+qa)(j+qb) m (lambda-m+2)] / sqrt[2j(2j+1)].
/// A vanishing numerator wins over a vanishing denominator (the j = 0 case);
/// a negative radicand indicates a caller bug and throws.
double coeff_C(int lambda, HalfInt j, int m, HalfInt qa, HalfInt qb);

/// Pseudospin third component: diagonal 2(2j+2m-lambda).
OpMatrix op_T30(const IrrepContext& ctx);

/// Metric-raised lowering/raising ladders T_-^mu, T_+^mu from the four-term
/// shift tables.  Terms whose target label leaves the carrier space are
/// dropped.
OpMatrix op_Tminus(const IrrepContext& ctx, int mu);
OpMatrix op_Tplus(const IrrepContext& ctx, int mu);

/// Variant of the mu = 1, 2 lowering tables with both j-1/2 terms sent to
/// (qa+1/2, qb-1/2).  The j-1/2 shift must move (qa, qb) in opposite
/// directions, which the differential cross-check confirms; this variant is
/// kept only so the verification report can show the discrepancy.
OpMatrix op_Tminus_uncorrected(const IrrepContext& ctx, int mu);

/// Variant of the raising tables whose j+1/2 coefficients carry the
/// determinant-power index m+2j+1 instead of m+2j+2.  The two agree only at
/// lambda = 1; for lambda > 1 the variant breaks both the differential
/// cross-check and the adjointness with op_Tminus, so the shipped table
/// uses m+2j+2.  Kept for the documented cross-check.
OpMatrix op_Tplus_uncorrected(const IrrepContext& ctx, int mu);

enum class SpinComponent { third, plus, minus };

/// Layer spin action: S_{l3} is diagonal q_l; S_{l+-} shift q_l by one with
/// sqrt[(j -+ q)(j +- q + 1)].
OpMatrix op_spin(const IrrepContext& ctx, Layer layer, SpinComponent which);

/// M_{mu nu} assembled from the layer spin matrices.
OpMatrix op_M(const IrrepContext& ctx, int mu, int nu);

enum class Quad { M2, TmTm, TpTp, TpTm, TmTp };

/// The five U(2)^2-invariant quadratics in closed form (diagonal or m-shift).
OpMatrix op_quadratic(const IrrepContext& ctx, Quad kind);

/// Quadratic Casimir assembled from the generator matrices; equals
/// lambda(lambda+4) times the identity.
OpMatrix casimir2(const IrrepContext& ctx);

/// Dispatch from a generator id to its closed-form matrix.
OpMatrix op_matrix(const IrrepContext& ctx, const Gen& gen);

/// Every generator covered by the closed-form/oracle/oscillator
/// cross-checks.
std::vector<Gen> all_generators();

/// Exact monomial-coefficient expansion of polynomials over the basis,
/// organized in homogeneity-degree blocks.
class BasisExpander {
  public:
    explicit BasisExpander(const IrrepContext& ctx);

    /// Least-squares coefficients of p over the basis polynomials; residual
    /// (if requested) is the max-norm defect of the reconstruction.
    CoeffVector expand(const Poly& p, double* residual = nullptr) const;

    const Poly& basis_poly(int i) const { return basis_[i]; }

    /// Rank of the degree-n coefficient block.
    int block_rank(int degree) const;

  private:
    const IrrepContext* ctx_;
    std::vector<Poly> basis_;
    struct Block {
        std::vector<int> label_ids;
        std::map<Poly::Exp, int> monomials;
        Eigen::MatrixXcd A;
        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr;
    };
    std::vector<Block> blocks_;
};

/// Matrix of a generator computed through the differential realization:
/// apply it to every basis polynomial and re-expand.  This is the normative
/// definition the shift tables are checked against.
OpMatrix oracle_matrix(const IrrepContext& ctx, const BasisExpander& exp, const Gen& gen);

/// Fixed evaluation grid used to express the finite group action in
/// coefficients.  Points are redrawn at construction until the evaluation
/// matrix is well conditioned.
class ActionSampler {
  public:
    ActionSampler(const IrrepContext& ctx, std::uint64_t seed, double max_condition = 1e6);

    const IrrepContext& ctx() const { return *ctx_; }
    const std::vector<CMat2>& points() const { return points_; }
    double condition() const { return condition_; }
    CoeffVector solve(const CoeffVector& values) const;

  private:
    const IrrepContext* ctx_;
    std::vector<CMat2> points_;
    double condition_ = 0.0;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu_;
};

/// Finite action of g on basis coefficients: evaluate
/// det(D'^+ + B'^+ Z)^lambda phi((A'^+ Z + C'^+)(D'^+ + B'^+ Z)^{-1}) on the
/// grid and solve the evaluation system.  Throws if a Moebius denominator is
/// singular at a grid point; the caller may retry with a reseeded sampler.
CoeffVector group_action(const ActionSampler& sampler, const GroupElement& g, const CoeffVector& coeffs);

struct IwasawaFactors {
    CMat2 Z, U1, U2;
};

/// Block factorization of a unitary in the patch where A and D are
/// invertible: Z = B D^{-1}, U1 = (AA^+)^{-1/2} A, U2 = (DD^+)^{-1/2} D.
IwasawaFactors iwasawa(const GroupElement& g);

}  // namespace grasscs
