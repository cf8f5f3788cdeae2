#include "obslab/kolmogorov.hpp"

#include <cmath>
#include <numbers>

namespace obslab {

KolmogorovFamily kolmogorov_decompose(const PhaseMatrix& c, double rel_tol) {
    const int d = c.dim();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
        0.5 * (c.coefficients() + c.coefficients().adjoint()));
    const Eigen::VectorXd& eig = es.eigenvalues();  // ascending
    const double lambda_max = eig(d - 1);
    const double cut = rel_tol * lambda_max;

    int rank = 0;
    bool degenerate = false;
    for (int i = 0; i < d; ++i) {
        if (eig(i) > cut) ++rank;
        if (eig(i) > 0.1 * cut && eig(i) <= 10.0 * cut) degenerate = true;
    }

    Eigen::MatrixXcd vectors(rank, d);
    for (int i = 0; i < rank; ++i) {
        const int src = d - 1 - i;  // largest eigenvalues first
        vectors.row(i) = std::sqrt(eig(src)) * es.eigenvectors().col(src).adjoint();
    }
    return KolmogorovFamily(std::move(vectors), rel_tol, degenerate);
}

int rank_of(const PhaseMatrix& c, double rel_tol) {
    return kolmogorov_decompose(c, rel_tol).rank();
}

RankOneForm rank_one_canonical_form(const PhaseMatrix& c) {
    constexpr double kReconstructTol = 1e-10;
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    const int d = c.dim();
    const Eigen::MatrixXcd& m = c.coefficients();

    RankOneForm form;
    form.alpha.resize(d);
    form.unitary_diag.resize(d);
    form.alpha(0) = 0.0;
    for (int n = 1; n < d; ++n) {
        // c_0n = e^{-i alpha_n} under the alpha_0 = 0 gauge.
        double a = -std::arg(m(0, n));
        if (a < 0.0) a += kTwoPi;
        if (a >= kTwoPi) a -= kTwoPi;
        form.alpha(n) = a;
    }
    for (int n = 0; n < d; ++n) form.unitary_diag(n) = std::polar(1.0, form.alpha(n));

    double err = 0.0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            err = std::max(err, std::abs(m(i, j) - std::polar(1.0, form.alpha(i) - form.alpha(j))));
    if (err > kReconstructTol)
        throw NotRankOne("rank_one_canonical_form: reconstruction misses by " +
                         std::to_string(err));
    return form;
}

}  // namespace obslab
