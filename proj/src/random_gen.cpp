#include "obslab/random_gen.hpp"

#include <cmath>
#include <numbers>

namespace obslab {

PhaseMatrix random_phase_matrix(std::mt19937_64& rng, int d, int rank) {
    if (d < 1 || rank < 1 || rank > d)
        throw std::invalid_argument("random_phase_matrix: need 1 <= rank <= d");
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd x(rank, d);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < rank; ++i) x(i, j) = std::complex<double>(normal(rng), normal(rng));
        x.col(j).normalize();
    }
    Eigen::MatrixXcd c = x.adjoint() * x;
    c = 0.5 * (c + c.adjoint()).eval();
    c.diagonal().setOnes();
    return PhaseMatrix(std::move(c));
}

Eigen::VectorXd random_phase_sequence(std::mt19937_64& rng, int d) {
    std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
    Eigen::VectorXd alpha(d);
    alpha(0) = 0.0;
    for (int n = 1; n < d; ++n) alpha(n) = uniform(rng);
    return alpha;
}

PhaseMatrix rank_one_matrix(const Eigen::VectorXd& alpha) {
    const int d = static_cast<int>(alpha.size());
    Eigen::MatrixXcd c(d, d);
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) c(m, n) = std::polar(1.0, alpha(m) - alpha(n));
    return PhaseMatrix(std::move(c));
}

}  // namespace obslab
