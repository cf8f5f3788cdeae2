#include "obslab/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace obslab::fock {

namespace {

void require_dim(int d) {
    if (d < 1) throw std::invalid_argument("truncation d must be >= 1");
}

}  // namespace

double log_factorial(int n) {
    if (n < 0) throw std::invalid_argument("log_factorial: n must be >= 0");
    return std::lgamma(static_cast<double>(n) + 1.0);
}

Eigen::VectorXcd coherent_vector(Complex z, int d) {
    require_dim(d);
    Eigen::VectorXcd v(d);
    const double az = std::abs(z);
    if (az == 0.0) {
        v.setZero();
        v(0) = 1.0;
        return v;
    }
    const double phase = std::arg(z);
    const double log_az = std::log(az);
    for (int n = 0; n < d; ++n) {
        const double log_mag = n * log_az - 0.5 * log_factorial(n) - 0.5 * az * az;
        v(n) = std::polar(std::exp(log_mag), n * phase);
    }
    return v;
}

double poisson_partial_sum(double lambda, int d) {
    require_dim(d);
    if (lambda < 0.0) throw std::invalid_argument("poisson_partial_sum: lambda must be >= 0");
    if (lambda == 0.0) return 1.0;
    const double log_lambda = std::log(lambda);
    double sum = 0.0;
    for (int n = d - 1; n >= 0; --n)  // small terms first
        sum += std::exp(n * log_lambda - lambda - log_factorial(n));
    return sum;
}

double coherent_tail(Complex z, int d) {
    require_dim(d);
    const double lambda = std::norm(z);
    if (lambda == 0.0) return 0.0;
    const double log_lambda = std::log(lambda);
    // Sum the tail directly; stop once terms stop contributing.
    double sum = 0.0;
    for (int n = d; n < 16 * (d + 16); ++n) {
        const double term = std::exp(n * log_lambda - lambda - log_factorial(n));
        sum += term;
        if (n > lambda && term < sum * 1e-18 + 1e-300) break;
    }
    return sum;
}

int auto_truncation(double abs_z) {
    if (abs_z < 0.0) throw std::invalid_argument("auto_truncation: |z| must be >= 0");
    return static_cast<int>(std::ceil(abs_z * abs_z + 10.0 * abs_z + 20.0));
}

Eigen::MatrixXcd number_operator(int d) {
    require_dim(d);
    Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k) n(k, k) = static_cast<double>(k);
    return n;
}

Eigen::MatrixXcd lowering_operator(int d) {
    require_dim(d);
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k + 1 < d; ++k) a(k, k + 1) = std::sqrt(static_cast<double>(k + 1));
    return a;
}

Eigen::MatrixXcd quadrature_q(int d) {
    require_dim(d);
    Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k + 1 < d; ++k) {
        const double v = std::sqrt(static_cast<double>(k + 1) / 2.0);
        q(k, k + 1) = v;
        q(k + 1, k) = v;
    }
    return q;
}

Eigen::MatrixXcd rotation(double theta, int d) {
    require_dim(d);
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 0; k < d; ++k) r(k, k) = std::polar(1.0, k * theta);
    return r;
}

double displacement_element(int m, int n, double r) {
    if (m < 0 || n < 0) throw std::invalid_argument("displacement_element: levels must be >= 0");
    if (r < 0.0) throw std::invalid_argument("displacement_element: r must be >= 0");
    // <m|D(r)|n> = (-1)^{n-m, if n>m} sqrt(min!/max!) r^{|m-n|} e^{-r^2/2}
    //              L_min^{(|m-n|)}(r^2).
    const int lo = std::min(m, n);
    const int alpha = std::abs(m - n);
    const double sign = (n > m && (n - m) % 2 != 0) ? -1.0 : 1.0;
    const double x = r * r;
    if (r == 0.0) return (m == n) ? 1.0 : 0.0;

    // psi_k = <k+alpha|D(r)|k>; the recurrence keeps every iterate a
    // genuine matrix element (|psi_k| <= 1), so it cannot overflow even
    // when the bare Laguerre values would.
    double psi_prev = 0.0;
    double psi = std::exp(alpha * std::log(r) - 0.5 * x - 0.5 * log_factorial(alpha));
    for (int k = 0; k < lo; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - x) * psi -
                             std::sqrt(static_cast<double>(k) * (k + alpha)) * psi_prev) /
                            std::sqrt(static_cast<double>(k + 1) * (k + 1 + alpha));
        psi_prev = psi;
        psi = next;
    }
    return sign * psi;
}

Eigen::MatrixXd displacement_matrix(int rows, int cols, double r) {
    require_dim(rows);
    require_dim(cols);
    if (r == 0.0)
        return Eigen::MatrixXd::Identity(rows, cols);
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(rows, cols);
    const double x = r * r;
    // One recurrence pass per diagonal m - n = +-alpha fills it entirely.
    for (int alpha = 0; alpha < std::max(rows, cols); ++alpha) {
        const double sign_upper = (alpha % 2 != 0) ? -1.0 : 1.0;
        double psi_prev = 0.0;
        double psi = std::exp(alpha * std::log(r) - 0.5 * x - 0.5 * log_factorial(alpha));
        for (int k = 0;; ++k) {
            if (k + alpha < rows && k < cols) d(k + alpha, k) = psi;
            if (k < rows && k + alpha < cols) d(k, k + alpha) = sign_upper * psi;
            const bool lower_next = (k + 1 + alpha < rows) && (k + 1 < cols);
            const bool upper_next = (k + 1 < rows) && (k + 1 + alpha < cols);
            if (!lower_next && !upper_next) break;
            const double next = ((2.0 * k + 1.0 + alpha - x) * psi -
                                 std::sqrt(static_cast<double>(k) * (k + alpha)) * psi_prev) /
                                std::sqrt(static_cast<double>(k + 1) * (k + 1 + alpha));
            psi_prev = psi;
            psi = next;
        }
    }
    return d;
}

}  // namespace obslab::fock
