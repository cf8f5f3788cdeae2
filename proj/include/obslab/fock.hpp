#pragma once

#include <Eigen/Dense>
#include <complex>

namespace obslab::fock {

using Complex = std::complex<double>;

/// log(n!) via lgamma; exact for n <= 20, stable far beyond d = 512.
double log_factorial(int n);

/// Truncated coherent state: component n = e^{-|z|^2/2} z^n / sqrt(n!),
/// n = 0..d-1.  Amplitudes are computed in log space so |z|^2 >> 50 does
/// not overflow the intermediate powers.
Eigen::VectorXcd coherent_vector(Complex z, int d);

/// Poisson tail e^{-|z|^2} sum_{n>=d} |z|^{2n}/n!, i.e. the probability
/// weight lost to truncation at d levels.
double coherent_tail(Complex z, int d);

/// Partial Poisson sum sum_{n<d} e^{-lambda} lambda^n / n!.
double poisson_partial_sum(double lambda, int d);

/// Smallest d with coherent_tail(z, d) < 1e-10 for |z| in the supported
/// range: ceil(|z|^2 + 10|z| + 20).
int auto_truncation(double abs_z);

/// N = diag(0, 1, ..., d-1).
Eigen::MatrixXcd number_operator(int d);

/// Lowering operator, <n|a|n+1> = sqrt(n+1).
Eigen::MatrixXcd lowering_operator(int d);

/// Q = (a + a^dagger)/sqrt(2): real symmetric tridiagonal.
Eigen::MatrixXcd quadrature_q(int d);

/// R(theta) = e^{i theta N} = diag(e^{i n theta}).
Eigen::MatrixXcd rotation(double theta, int d);

/// <m|D(r)|n> for the displacement D(r) = e^{r(a^dagger - a)} with real
/// r >= 0.  Real-valued; evaluated through the normalized associated
/// Laguerre recurrence so no intermediate exceeds the unit bound of a
/// unitary matrix element.
double displacement_element(int m, int n, double r);

/// Matrix [ <m|D(r)|n> ] for m < rows, n < cols.
Eigen::MatrixXd displacement_matrix(int rows, int cols, double r);

}  // namespace obslab::fock
