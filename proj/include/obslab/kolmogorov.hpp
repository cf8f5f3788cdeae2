#pragma once

#include <Eigen/Dense>

#include "obslab/phase_matrix.hpp"

namespace obslab {

/// Relative eigenvalue / singular-value threshold shared by every rank
/// decision in the library.
inline constexpr double kDefaultRankTol = 1e-9;

/// Minimal Kolmogorov decomposition of a phase matrix: unit vectors
/// eta_0..eta_{d-1} in C^r with <eta_m|eta_n> = c_mn and spanning C^r.
class KolmogorovFamily {
public:
    KolmogorovFamily(Eigen::MatrixXcd vectors, double tol, bool degenerate)
        : vectors_(std::move(vectors)), tol_(tol), degenerate_(degenerate) {}

    int rank() const { return static_cast<int>(vectors_.rows()); }
    int size() const { return static_cast<int>(vectors_.cols()); }

    /// Column n is eta_n in the r-dimensional auxiliary space.
    const Eigen::MatrixXcd& vectors() const { return vectors_; }

    Eigen::VectorXcd vector(int n) const { return vectors_.col(n); }

    /// Gram matrix <eta_m|eta_n>; reproduces the source phase matrix.
    Eigen::MatrixXcd gram() const { return vectors_.adjoint() * vectors_; }

    double tolerance() const { return tol_; }

    /// True when an eigenvalue sits within a decade of the rank cut, in
    /// which case the rank is not stable under a x10 tolerance change.
    bool degenerate_tolerance() const { return degenerate_; }

private:
    Eigen::MatrixXcd vectors_;  // r x d
    double tol_;
    bool degenerate_;
};

/// Eigendecompose c = V L V^dagger, keep eigenvalues above rel_tol times
/// the largest one, and return eta_n = L_r^{1/2} V_r^dagger e_n.  Never
/// throws on a degenerate cut; the result carries the flag instead.
KolmogorovFamily kolmogorov_decompose(const PhaseMatrix& c,
                                      double rel_tol = kDefaultRankTol);

/// dim of the auxiliary space of the minimal decomposition.
int rank_of(const PhaseMatrix& c, double rel_tol = kDefaultRankTol);

/// Diagonal-unitary normal form of a rank-1 matrix: c_mn = e^{i(a_m - a_n)}
/// with the gauge a_0 = 0.
struct RankOneForm {
    Eigen::VectorXd alpha;          // phases in [0, 2pi)
    Eigen::VectorXcd unitary_diag;  // e^{i alpha_n}
};

/// Recovers the phases of a rank-1 matrix; throws NotRankOne when the
/// reconstruction misses any entry by more than 1e-10.
RankOneForm rank_one_canonical_form(const PhaseMatrix& c);

}  // namespace obslab
