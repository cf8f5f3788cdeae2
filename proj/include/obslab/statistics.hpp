#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "obslab/phase_matrix.hpp"

namespace obslab {

using Complex = std::complex<double>;

/// Coherent-state phase density g_z(theta) sampled on the uniform grid
/// theta_k = 2 pi k / n, k = 0..n-1.  The grid always satisfies
/// n > 2 d, so the trapezoid mean integrates the trigonometric
/// polynomial exactly.
struct PhaseDensity {
    Eigen::VectorXd values;
    Complex z;
    int d = 0;
    double tail_bound = 0.0;

    int grid_size() const { return static_cast<int>(values.size()); }
    double theta(int k) const;

    /// (1/2pi) integral of g over the period (trapezoid = grid mean).
    double normalization() const { return values.mean(); }

    /// What normalization() must equal: the partial Poisson sum
    /// sum_{m<d} e^{-|z|^2} |z|^{2m}/m!.
    double expected_normalization() const;
};

/// g_z(theta) = e^{-|z|^2} sum_{m,n<d} c_mn e^{i(m-n)theta}
///              conj(z)^m z^n / sqrt(m! n!).
/// Throws ImaginaryResidue if the imaginary part survives above 1e-12.
double density(const PhaseMatrix& c, Complex z, double theta);

/// Full sweep over a uniform grid (default 4096 points; must exceed 2d).
PhaseDensity density_profile(const PhaseMatrix& c, Complex z, int grid_size = 4096);

struct PeakDominance {
    double candidate = 0.0;  // g^E_z(arg z)
    double canonical = 0.0;  // g^can_z(arg z)
    bool dominated = false;  // candidate <= canonical + 1e-10
};

/// The canonical matrix maximizes the density at theta = arg z; compare a
/// candidate against that peak.
PeakDominance peak_dominance(const PhaseMatrix& c, Complex z);

/// Minimized circular standard deviation: scan every window
/// [theta_s, theta_s + 2pi) on the grid, compute the variance of the
/// density over the window, and take the square root of the smallest.
/// Requires at least 512 grid points.  Uniform density gives pi/sqrt(3).
double min_circular_deviation(const Eigen::VectorXd& grid_values);
double min_circular_deviation(const PhaseDensity& density);

/// sqrt Var(N) of the truncated coherent state; |z| up to the Poisson
/// tail.  Throws TailTooLarge when the truncation loses more than 1e-10.
double number_deviation(Complex z, int d);

struct UncertaintyReport {
    double delta_phase = 0.0;
    double delta_number = 0.0;
    double product = 0.0;
};

/// Canonical-phase uncertainty product Delta(phase) * Delta(N) for the
/// coherent state of amplitude |z|; approaches 1/2 from above as |z|
/// grows.  d <= 0 selects the automatic truncation.
UncertaintyReport uncertainty_product(double abs_z, int d = 0, int grid_size = 4096);

/// Full width at half maximum of a sampled density, with linear
/// interpolation at the crossings; 2pi when the density never drops
/// below half its peak.
double full_width_half_max(const PhaseDensity& density);

/// FWHM of the canonical density for each amplitude; the widths shrink
/// like 1/|z|.
std::vector<double> delta_limit_widths(const std::vector<double>& amplitudes,
                                       int grid_size = 4096);

}  // namespace obslab
