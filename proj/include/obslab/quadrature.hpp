#pragma once

#include <Eigen/Dense>
#include <complex>

#include "obslab/extremality.hpp"
#include "obslab/phase_matrix.hpp"

namespace obslab {

/// Uniformly spaced momentum sample points p_i = p0 + i h.
class MomentumGrid {
public:
    MomentumGrid(double p0, double h, int n);

    /// Accepts explicit points; rejects spacing deviations above 1e-14.
    static MomentumGrid from_points(const Eigen::VectorXd& points);

    double p0() const { return p0_; }
    double spacing() const { return h_; }
    int size() const { return n_; }
    double point(int i) const { return p0_ + h_ * i; }

private:
    double p0_, h_;
    int n_;
};

/// Closed-form probability measures on R, carried by their characteristic
/// functions.
class ProbabilityMeasure {
public:
    enum class Kind { PointMass, Gaussian, Uniform };

    static ProbabilityMeasure point_mass(double at = 0.0);
    static ProbabilityMeasure gaussian(double mean, double sigma);
    static ProbabilityMeasure uniform(double a, double b);

    Kind kind() const { return kind_; }
    double param_a() const { return a_; }
    double param_b() const { return b_; }

    /// Characteristic function rho_hat(t) = int e^{itx} d rho(x).
    std::complex<double> cf(double t) const;

private:
    ProbabilityMeasure(Kind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}
    Kind kind_;
    double a_, b_;  // point: (at, -); gaussian: (mean, sigma); uniform: (a, b)
};

/// Fuzzy rotated quadrature at truncation: the kernel K_ij = <eta_pi|eta_pj>
/// on a momentum grid, same Hermitian/PSD/unit-diagonal contract as a
/// phase matrix, tagged with the rotation angle.
struct QuadratureKernel {
    MomentumGrid grid;
    double theta = 0.0;
    PhaseMatrix kernel;
};

/// Sharp quadrature: all-ones kernel (rank 1).
QuadratureKernel sharp_kernel(const MomentumGrid& grid, double theta = 0.0);

/// Post-processed quadrature F = rho * Pi_Q: K_ij = rho_hat(p_i - p_j).
/// PSD by Bochner, Toeplitz by construction.
QuadratureKernel convolution_kernel(const ProbabilityMeasure& rho, const MomentumGrid& grid,
                                    double theta = 0.0);

/// F(X) for X = [a, b): entry (i,j) = K_ij (1/2pi) int_a^b e^{i(p_i-p_j)x} dx.
Eigen::MatrixXcd interval_kernel(const QuadratureKernel& k, double a, double b);

/// Max entry deviation between the shifted interval operator and the
/// conjugated one; the covariance identity makes this roundoff-level for
/// any correct kernel.
double covariance_deviation(const QuadratureKernel& k, double a, double b, double q);

/// Invariance under shifts generated by Q_theta holds iff the kernel
/// depends on p_i - p_j only, i.e. is Toeplitz.
bool invariance_check(const QuadratureKernel& k, double tol = 1e-12);

/// Extremality of the kernel via the same constraint-rank test as for
/// phase matrices; grid points stand in for "almost all p".
ExtremalityCertificate quadrature_extremality(const QuadratureKernel& k,
                                              double rel_tol = kDefaultRankTol);

struct RotatedFrame {
    Eigen::MatrixXcd q;  // Q_theta
    Eigen::MatrixXcd p;  // P_theta = Q_{theta + pi/2}
};

/// Fock-truncated rotated quadrature pair Q_theta = R(theta) Q R(theta)*,
/// P_theta = R(theta) P R(theta)*.  Verifies P_theta = Q_{theta+pi/2}
/// entrywise before returning.
RotatedFrame rotate_frame(double theta, int d);

}  // namespace obslab
