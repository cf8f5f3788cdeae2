#include "obslab/phase_space.hpp"

#include <cmath>

#include "obslab/fock.hpp"
#include "obslab/kolmogorov.hpp"

namespace obslab {

DiagonalState::DiagonalState(Eigen::VectorXd weights) : weights_(std::move(weights)) {
    if (weights_.size() == 0) throw BadState("diagonal state: no weights");
    if (weights_.minCoeff() < 0.0) throw BadState("diagonal state: negative weight");
    const double total = weights_.sum();
    if (std::abs(total - 1.0) > 1e-12)
        throw BadState("diagonal state: weights sum to " + std::to_string(total));
}

RadialQuadrature RadialQuadrature::defaults(int d, int levels) {
    RadialQuadrature q;
    q.r_max = std::sqrt(2.0 * (d + levels)) + 6.0;
    q.nodes = 4 * (d + levels);
    return q;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
    // Golub-Welsch: nodes are eigenvalues of the Legendre Jacobi matrix,
    // weights 2 * (first eigenvector component)^2.
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double beta = k / std::sqrt(4.0 * k * k - 1.0);
        jacobi(k, k - 1) = beta;
        jacobi(k - 1, k) = beta;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    Eigen::VectorXd nodes(n), weights(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        nodes(i) = mid + half * es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        weights(i) = 2.0 * v0 * v0 * half;
    }
    return {nodes, weights};
}

PhaseMatrix et_phase_matrix(const DiagonalState& t, int d,
                            std::optional<RadialQuadrature> quad) {
    if (d < 1) throw std::invalid_argument("et_phase_matrix: d must be >= 1");
    const int levels = t.levels();
    const RadialQuadrature q = quad.value_or(RadialQuadrature::defaults(d, levels));
    if (q.nodes < 1 || q.r_max <= 0.0)
        throw std::invalid_argument("et_phase_matrix: bad quadrature config");

    const auto [nodes, weights] = gauss_legendre(q.nodes, 0.0, q.r_max);
    const Eigen::VectorXd sqrt_w = t.weights().cwiseSqrt();

    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i < q.nodes; ++i) {
        const double r = nodes(i);
        // <m|D(r) T D(r)*|n> = sum_k lambda_k <m|D(r)|k><n|D(r)|k>
        const Eigen::MatrixXd g =
            fock::displacement_matrix(d, levels, r) * sqrt_w.asDiagonal();
        c.noalias() += (2.0 * weights(i) * r) * (g * g.transpose());
    }

    const double diag_err = (c.diagonal().array() - 1.0).abs().maxCoeff();
    if (diag_err > 1e-6)
        throw QuadratureNotConverged("et_phase_matrix: diagonal misses 1 by " +
                                     std::to_string(diag_err));

    // Normalize the quadrature residue away: c / sqrt(c_mm c_nn) has an
    // exact unit diagonal and stays PSD (congruence by a positive
    // diagonal).
    const Eigen::VectorXd scale = c.diagonal().cwiseSqrt().cwiseInverse();
    c = scale.asDiagonal() * c * scale.asDiagonal();
    c = 0.5 * (c + c.transpose()).eval();
    return PhaseMatrix(c.cast<std::complex<double>>());
}

EtAnalysis et_analysis(const DiagonalState& t, int d, std::optional<RadialQuadrature> quad,
                       double rel_tol) {
    PhaseMatrix matrix = et_phase_matrix(t, d, quad);
    ExtremalityCertificate cert = analyze_extremality(matrix, rel_tol);
    const int rank = cert.rank;
    return EtAnalysis{std::move(matrix), rank, std::move(cert)};
}

}  // namespace obslab
