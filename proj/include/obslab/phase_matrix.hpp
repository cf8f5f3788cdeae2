#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "obslab/errors.hpp"

namespace obslab {

/// Tolerances for the phase-matrix validator.
struct ValidationTolerances {
    double hermitian = 1e-12;    // max |C - C^dagger| entry
    double psd = 1e-10;          // min eigenvalue >= -psd
    double diagonal = 1e-12;     // |c_mm - 1|
};

struct Violation {
    enum class Kind { NotHermitian, NotPSD, BadDiagonal };
    Kind kind;
    double magnitude = 0.0;  // offending size (residue, eigenvalue, deviation)
    int index = -1;          // diagonal index for BadDiagonal

    std::string describe() const;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

/// Check Hermiticity, positive semidefiniteness and the unit diagonal of a
/// candidate phase matrix.  Collects every violated invariant.
ValidationReport validate_phase_matrix(const Eigen::MatrixXcd& c,
                                       const ValidationTolerances& tol = {});

/// A d x d complex matrix (c_mn): Hermitian, PSD, unit diagonal.  These
/// are the Fourier coefficients of a covariant phase observable at
/// truncation d; the same contract serves as the quadrature kernel on a
/// momentum grid.
class PhaseMatrix {
public:
    /// Validates and takes ownership; throws InvalidPhaseMatrix listing
    /// every violated invariant.
    explicit PhaseMatrix(Eigen::MatrixXcd c, const ValidationTolerances& tol = {});

    /// All-ones matrix (the canonical phase observable; rank 1).
    static PhaseMatrix canonical(int d);

    /// Identity matrix (the trivial, uniformly random phase observable;
    /// rank d).
    static PhaseMatrix trivial(int d);

    int dim() const { return static_cast<int>(c_.rows()); }
    const Eigen::MatrixXcd& coefficients() const { return c_; }

private:
    Eigen::MatrixXcd c_;
};

/// E(X) for X = [a, b): entry (m,n) = c_mn * (1/2pi) int_a^b e^{i(m-n)t} dt,
/// the integral in closed form.  Requires b >= a and b - a <= 2pi; the
/// interval is reduced mod 2pi and split at the wrap point, so shifted
/// intervals from the covariance relation work unchanged.
Eigen::MatrixXcd interval_operator(const PhaseMatrix& c, double a, double b);

}  // namespace obslab
