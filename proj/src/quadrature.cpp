#include "obslab/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "obslab/fock.hpp"

namespace obslab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// sin(x)/x with the series takeover near zero.
double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// (1/2pi) int_a^b e^{i delta x} dx on the real line.
std::complex<double> window_integral(double delta, double a, double b) {
    if (delta == 0.0) return {(b - a) / kTwoPi, 0.0};
    const std::complex<double> id(0.0, delta);
    return (std::exp(id * b) - std::exp(id * a)) / (kTwoPi * id);
}

}  // namespace

MomentumGrid::MomentumGrid(double p0, double h, int n) : p0_(p0), h_(h), n_(n) {
    if (n < 2) throw std::invalid_argument("momentum grid: need at least 2 points");
    if (!(h > 0.0)) throw std::invalid_argument("momentum grid: spacing must be positive");
}

MomentumGrid MomentumGrid::from_points(const Eigen::VectorXd& points) {
    const int n = static_cast<int>(points.size());
    if (n < 2) throw std::invalid_argument("momentum grid: need at least 2 points");
    const double h = (points(n - 1) - points(0)) / (n - 1);
    if (!(h > 0.0)) throw std::invalid_argument("momentum grid: points must increase");
    for (int i = 0; i + 1 < n; ++i)
        if (std::abs(points(i + 1) - points(i) - h) > 1e-14)
            throw std::invalid_argument("momentum grid: spacing is not uniform");
    return MomentumGrid(points(0), h, n);
}

ProbabilityMeasure ProbabilityMeasure::point_mass(double at) {
    return ProbabilityMeasure(Kind::PointMass, at, 0.0);
}

ProbabilityMeasure ProbabilityMeasure::gaussian(double mean, double sigma) {
    if (sigma < 0.0) throw std::invalid_argument("gaussian measure: sigma must be >= 0");
    return ProbabilityMeasure(Kind::Gaussian, mean, sigma);
}

ProbabilityMeasure ProbabilityMeasure::uniform(double a, double b) {
    if (!(b > a)) throw std::invalid_argument("uniform measure: need b > a");
    return ProbabilityMeasure(Kind::Uniform, a, b);
}

std::complex<double> ProbabilityMeasure::cf(double t) const {
    switch (kind_) {
        case Kind::PointMass:
            return std::polar(1.0, a_ * t);
        case Kind::Gaussian:
            return std::polar(std::exp(-0.5 * b_ * b_ * t * t), a_ * t);
        case Kind::Uniform:
            return std::polar(1.0, 0.5 * (a_ + b_) * t) * sinc(0.5 * (b_ - a_) * t);
    }
    return 0.0;
}

QuadratureKernel sharp_kernel(const MomentumGrid& grid, double theta) {
    return QuadratureKernel{grid, theta, PhaseMatrix::canonical(grid.size())};
}

QuadratureKernel convolution_kernel(const ProbabilityMeasure& rho, const MomentumGrid& grid,
                                    double theta) {
    const int n = grid.size();
    Eigen::MatrixXcd k(n, n);
    // Toeplitz: the entry depends on i - j only.
    for (int diff = -(n - 1); diff <= n - 1; ++diff) {
        const std::complex<double> value = rho.cf(diff * grid.spacing());
        for (int i = std::max(0, diff); i < n && i - diff < n; ++i) k(i, i - diff) = value;
    }
    return QuadratureKernel{grid, theta, PhaseMatrix(std::move(k))};
}

Eigen::MatrixXcd interval_kernel(const QuadratureKernel& k, double a, double b) {
    if (!(b >= a)) throw BadInterval("interval_kernel: need b >= a");
    const int n = k.grid.size();
    Eigen::MatrixXcd e(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double delta = (i - j) * k.grid.spacing();
            e(i, j) = k.kernel.coefficients()(i, j) * window_integral(delta, a, b);
        }
    return e;
}

double covariance_deviation(const QuadratureKernel& k, double a, double b, double q) {
    const Eigen::MatrixXcd base = interval_kernel(k, a, b);
    const Eigen::MatrixXcd shifted = interval_kernel(k, a + q, b + q);
    double dev = 0.0;
    // e^{iqP} acts on the momentum representation as multiplication by
    // the phases e^{i p_i q}.
    for (int i = 0; i < k.grid.size(); ++i)
        for (int j = 0; j < k.grid.size(); ++j) {
            const std::complex<double> phase =
                std::polar(1.0, (k.grid.point(i) - k.grid.point(j)) * q);
            dev = std::max(dev, std::abs(phase * base(i, j) - shifted(i, j)));
        }
    return dev;
}

bool invariance_check(const QuadratureKernel& k, double tol) {
    const Eigen::MatrixXcd& m = k.kernel.coefficients();
    for (int i = 0; i + 1 < m.rows(); ++i)
        for (int j = 0; j + 1 < m.cols(); ++j)
            if (std::abs(m(i, j) - m(i + 1, j + 1)) > tol) return false;
    return true;
}

ExtremalityCertificate quadrature_extremality(const QuadratureKernel& k, double rel_tol) {
    return analyze_extremality(k.kernel, rel_tol);
}

RotatedFrame rotate_frame(double theta, int d) {
    const Eigen::MatrixXcd q = fock::quadrature_q(d);
    const Eigen::MatrixXcd a = fock::lowering_operator(d);
    const std::complex<double> i_unit(0.0, 1.0);
    const Eigen::MatrixXcd p = i_unit / std::sqrt(2.0) * (a.adjoint() - a);

    const Eigen::MatrixXcd r = fock::rotation(theta, d);
    RotatedFrame frame;
    frame.q = r * q * r.adjoint();
    frame.p = r * p * r.adjoint();

    const Eigen::MatrixXcd r_quarter = fock::rotation(theta + std::numbers::pi / 2.0, d);
    const double dev = (frame.p - r_quarter * q * r_quarter.adjoint()).cwiseAbs().maxCoeff();
    if (dev > 1e-13)
        throw NumericalFailure("rotate_frame: P_theta != Q_{theta+pi/2}, deviation " +
                               std::to_string(dev));
    return frame;
}

}  // namespace obslab
