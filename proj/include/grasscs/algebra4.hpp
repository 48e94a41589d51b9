#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "grasscs/rng.hpp"

namespace grasscs {

using Cplx = std::complex<double>;
using CMat2 = Eigen::Matrix2cd;
using CMat4 = Eigen::Matrix4cd;

/// Metric diag(1,-1,-1,-1) used to raise and lower Greek indices.
inline constexpr double eta(int mu) { return mu == 0 ? 1.0 : -1.0; }

CMat2 pauli(int mu);
/// sigma-check: the metric-raised Pauli matrix, sigma^mu.
CMat2 pauli_check(int mu);

CMat4 kron22(const CMat2& a, const CMat2& b);

/// tau_{mu nu} = sigma_mu (x) sigma_nu, the u(4) basis in the 4-dim rep.
CMat4 tau(int mu, int nu);

enum class Sign { plus, minus };

/// Interlayer ladder matrices tau_{+-mu} = (tau_{1mu} +- i tau_{2mu})/2.
CMat4 tau_ladder(Sign s, int mu);

/// Block-diagonal "Lorentz-like" generators m_{mu nu}.
CMat4 m_lorentz(int mu, int nu);

enum class Layer { a, b };

/// Layer angular momentum s_{a j} (upper block) and s_{b j} (lower block).
CMat4 spin(Layer layer, int j);

/// Linear Casimir C1 = tau_{00}.
CMat4 casimir1_fundamental();

/// Quadratic Casimir in the 4-dim rep; `form` selects one of the three
/// equivalent contractions (delta-delta, 0/3 rows + ladders, pseudospin +
/// layer spins + ladders).  All evaluate to (15/4) * identity.
CMat4 casimir2_fundamental(int form = 1);

struct GroupElement {
    CMat2 A, B, C, D;

    CMat4 matrix() const;
    static GroupElement from_matrix(const CMat4& g);
    static GroupElement identity();
};

/// Checks the block-unitarity relations D^+D + B^+B = 1, A^+A + C^+C = 1,
/// A^+B + C^+D = 0 together with g g^+ = 1.
bool validate_group_element(const GroupElement& g, double tol = 1e-10);

/// Builds the unitary with coset part fixed by Z and fiber part (U1, U2).
GroupElement group_from_coset(const CMat2& Z, const CMat2& U1, const CMat2& U2);

/// Hermitian psd square root.
CMat2 msqrt_psd(const CMat2& h);

/// Haar-random U(2) / U(4) elements.
CMat2 random_unitary2(Rng& rng);
CMat4 random_unitary4(Rng& rng);

struct StructureReport {
    struct Entry {
        std::string relation;
        double max_residual = 0.0;
    };
    std::vector<Entry> entries;

    double worst() const;
    bool pass(double tol) const { return worst() <= tol; }
};

/// Verifies every commutation relation of the u(4) basis on the fundamental
/// matrices and reports the largest residual per relation class.
StructureReport check_structure();

inline double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace grasscs
