#pragma once

#include <Eigen/Dense>
#include <optional>

#include "obslab/extremality.hpp"
#include "obslab/phase_matrix.hpp"

namespace obslab {

/// Diagonal density T = sum_n lambda_n |n><n|: nonnegative weights
/// summing to one.
class DiagonalState {
public:
    explicit DiagonalState(Eigen::VectorXd weights);

    static DiagonalState vacuum() { return DiagonalState(Eigen::VectorXd::Ones(1)); }

    int levels() const { return static_cast<int>(weights_.size()); }
    const Eigen::VectorXd& weights() const { return weights_; }

private:
    Eigen::VectorXd weights_;
};

/// Gauss-Legendre rule on [0, r_max].
struct RadialQuadrature {
    double r_max = 0.0;
    int nodes = 0;

    /// The integrand decays like e^{-r^2} r^{2d}, so r_max = sqrt(2(d+k)) + 6
    /// and 4(d+k) nodes resolve it to well below the diagonal check.
    static RadialQuadrature defaults(int d, int levels);
};

/// Gauss-Legendre nodes and weights on [a, b] (Golub-Welsch).
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int n, double a, double b);

/// Phase matrix of the phase-space observable built from T:
/// c_mn = 2 int_0^inf <m|D(r) T D(r)*|n> r dr.  The angular integral is
/// not computed numerically: D(r e^{i t}) = e^{itN} D(r) e^{-itN} reduces
/// it exactly to the covariant form, leaving the radial quadrature.
/// Throws QuadratureNotConverged when the diagonal misses 1 by more
/// than 1e-6.
PhaseMatrix et_phase_matrix(const DiagonalState& t, int d,
                            std::optional<RadialQuadrature> quad = std::nullopt);

struct EtAnalysis {
    PhaseMatrix matrix;
    int rank = 0;
    ExtremalityCertificate certificate;
};

/// et_phase_matrix -> kolmogorov_decompose -> extremality, in one call.
/// Every E_T truncation comes out full rank and not extreme.
EtAnalysis et_analysis(const DiagonalState& t, int d,
                       std::optional<RadialQuadrature> quad = std::nullopt,
                       double rel_tol = kDefaultRankTol);

}  // namespace obslab
