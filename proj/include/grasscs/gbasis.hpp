#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "grasscs/halfint.hpp"
#include "grasscs/polyring.hpp"
#include "grasscs/wigner.hpp"

namespace grasscs {

/// One basis function phi^{j,m}_{qa,qb}: spin j, determinant power m and the
/// two layer magnetic numbers.
struct BasisLabel {
    HalfInt j;
    int m = 0;
    HalfInt qa, qb;

    bool valid(int lambda) const;
    auto operator<=>(const BasisLabel&) const = default;
    std::string str() const;
};

/// The carrier space for one value of lambda: every admissible label exactly
/// once, ordered by (2j+2m, 2j, 2qa, 2qb) ascending so that homogeneity-
/// diagonal operators come out block-banded.  Immutable after construction.
class IrrepContext {
  public:
    explicit IrrepContext(int lambda);

    int lambda() const { return lambda_; }
    int dim() const { return static_cast<int>(labels_.size()); }
    const std::vector<BasisLabel>& labels() const { return labels_; }
    const BasisLabel& label(int i) const { return labels_.at(i); }
    int index(const BasisLabel& l) const;
    bool contains(const BasisLabel& l) const { return index_.count(l) > 0; }

  private:
    int lambda_;
    std::vector<BasisLabel> labels_;
    std::map<BasisLabel, int> index_;
};

/// dim H_lambda = (lambda+1)(lambda+2)^2(lambda+3)/12.
std::int64_t dim_lambda(int lambda);

/// Flux-counting identity C(l+3,3) C(l+2,2) / C(l+1,1); equals dim_lambda.
std::int64_t cf_counting(int lambda);

/// Number of labels at homogeneity degree n (0 <= n <= 2*lambda).
std::int64_t degree_count(int lambda, int n);

/// Normalization N_{j,m} = sqrt[(2j+1)/(lambda+1) C(lambda+1,2j+m+1) C(lambda+1,m)].
double normalization(int lambda, HalfInt j, int m);

/// phi^{j,m}_{qa,qb}(Z) = N_{j,m} det(Z)^m D^j_{qa,qb}(Z).
Cplx phi(const IrrepContext& ctx, const BasisLabel& l, const CMat2& Z);

/// Same function as a homogeneous polynomial of degree 2j+2m in z^mu.
Poly phi_poly(const IrrepContext& ctx, const BasisLabel& l);

/// Relative residual of the determinant expansion
/// det(1+X)^lambda = sum_{m,j} [(2j+1)/(lambda+1)] C(lambda+1,2j+m+1)
///                   C(lambda+1,m) det(X)^m sum_q D^j_qq(X).
double lemma1_residual(int lambda, const CMat2& X);

/// Reproducing kernel det(1 + Z'^+ Z)^lambda.
Cplx bergman_kernel(int lambda, const CMat2& Zp, const CMat2& Z);

/// Relative residual of sum_labels conj(phi(Z')) phi(Z) against the kernel.
double closure_residual(const IrrepContext& ctx, const CMat2& Zp, const CMat2& Z);

}  // namespace grasscs
