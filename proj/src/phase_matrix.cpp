#include "obslab/phase_matrix.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace obslab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Closed form of (1/2pi) int_a^b e^{ikt} dt on a non-wrapping interval.
std::complex<double> fourier_window(int k, double a, double b) {
    if (k == 0) return {(b - a) / kTwoPi, 0.0};
    const std::complex<double> ik(0.0, static_cast<double>(k));
    return (std::exp(ik * b) - std::exp(ik * a)) / (kTwoPi * ik);
}

}  // namespace

std::string Violation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::NotHermitian:
            os << "NotHermitian: max |C - C^dagger| = " << magnitude;
            break;
        case Kind::NotPSD:
            os << "NotPSD: min eigenvalue = " << magnitude;
            break;
        case Kind::BadDiagonal:
            os << "BadDiagonal: |c[" << index << "][" << index << "] - 1| = " << magnitude;
            break;
    }
    return os.str();
}

std::string ValidationReport::summary() const {
    if (ok()) return "valid";
    std::string s;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) s += "; ";
        s += violations[i].describe();
    }
    return s;
}

ValidationReport validate_phase_matrix(const Eigen::MatrixXcd& c,
                                       const ValidationTolerances& tol) {
    ValidationReport report;
    if (c.rows() != c.cols() || c.rows() < 1) {
        report.violations.push_back({Violation::Kind::NotHermitian,
                                     static_cast<double>(c.rows() - c.cols()), -1});
        return report;
    }
    const double herm = (c - c.adjoint()).cwiseAbs().maxCoeff();
    if (!(herm <= tol.hermitian))
        report.violations.push_back({Violation::Kind::NotHermitian, herm, -1});

    for (int m = 0; m < c.rows(); ++m) {
        const double dev = std::abs(c(m, m) - 1.0);
        if (!(dev <= tol.diagonal))
            report.violations.push_back({Violation::Kind::BadDiagonal, dev, m});
    }

    // Eigenvalues of the Hermitian part; for a genuinely Hermitian input
    // this is the spectrum itself.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (c + c.adjoint()),
                                                       Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (!(min_eig >= -tol.psd))
        report.violations.push_back({Violation::Kind::NotPSD, min_eig, -1});
    return report;
}

PhaseMatrix::PhaseMatrix(Eigen::MatrixXcd c, const ValidationTolerances& tol)
    : c_(std::move(c)) {
    const ValidationReport report = validate_phase_matrix(c_, tol);
    if (!report.ok()) throw InvalidPhaseMatrix("invalid phase matrix: " + report.summary());
}

PhaseMatrix PhaseMatrix::canonical(int d) {
    return PhaseMatrix(Eigen::MatrixXcd::Ones(d, d));
}

PhaseMatrix PhaseMatrix::trivial(int d) {
    return PhaseMatrix(Eigen::MatrixXcd::Identity(d, d));
}

Eigen::MatrixXcd interval_operator(const PhaseMatrix& c, double a, double b) {
    if (!(b >= a)) throw BadInterval("interval_operator: need b >= a");
    if (!(b - a <= kTwoPi + 1e-12)) throw BadInterval("interval_operator: length exceeds 2pi");
    const double len = std::min(b - a, kTwoPi);
    double start = std::fmod(a, kTwoPi);
    if (start < 0.0) start += kTwoPi;

    const int d = c.dim();
    Eigen::MatrixXcd e(d, d);
    const bool wraps = start + len > kTwoPi;
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            const int k = m - n;
            std::complex<double> w;
            if (wraps)
                w = fourier_window(k, start, kTwoPi) + fourier_window(k, 0.0, start + len - kTwoPi);
            else
                w = fourier_window(k, start, start + len);
            e(m, n) = c.coefficients()(m, n) * w;
        }
    }
    return e;
}

}  // namespace obslab
