#include "obslab/extremality.hpp"

#include <cmath>

namespace obslab {

namespace {

constexpr double kConstraintTol = 1e-10;

double operator_norm(const Eigen::MatrixXcd& hermitian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

Eigen::VectorXd constraint_residuals(const KolmogorovFamily& fam,
                                     const Eigen::MatrixXcd& a) {
    const int d = fam.size();
    Eigen::VectorXd res(d);
    for (int n = 0; n < d; ++n) {
        const Eigen::VectorXcd eta = fam.vector(n);
        res(n) = std::abs((eta.adjoint() * a * eta).value());
    }
    return res;
}

struct ConstraintSvd {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd;
    int rank = 0;
    bool degenerate = false;
};

ConstraintSvd constraint_svd(const KolmogorovFamily& fam, double rel_tol, bool full_v) {
    ConstraintSvd out;
    const Eigen::MatrixXcd m = constraint_matrix(fam);
    out.svd.compute(m, full_v ? Eigen::ComputeFullV : 0);
    const Eigen::VectorXd& sv = out.svd.singularValues();  // descending
    const double cut = rel_tol * sv(0);
    for (int i = 0; i < sv.size(); ++i) {
        if (sv(i) > cut) ++out.rank;
        if (sv(i) > 0.1 * cut && sv(i) <= 10.0 * cut) out.degenerate = true;
    }
    return out;
}

}  // namespace

Eigen::MatrixXcd constraint_matrix(const KolmogorovFamily& fam) {
    const int d = fam.size();
    const int r = fam.rank();
    Eigen::MatrixXcd m(d, r * r);
    for (int n = 0; n < d; ++n) {
        const Eigen::VectorXcd eta = fam.vector(n);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) m(n, i * r + j) = std::conj(eta(i)) * eta(j);
    }
    return m;
}

ExtremalityTest is_extreme(const KolmogorovFamily& fam, double rel_tol) {
    const ConstraintSvd cs = constraint_svd(fam, rel_tol, false);
    ExtremalityTest t;
    t.r_squared = fam.rank() * fam.rank();
    t.constraint_rank = cs.rank;
    t.extreme = (cs.rank == t.r_squared);
    t.degenerate_tolerance = cs.degenerate || fam.degenerate_tolerance();
    return t;
}

std::optional<Eigen::MatrixXcd> find_witness(const KolmogorovFamily& fam, double rel_tol) {
    const int r = fam.rank();
    const ConstraintSvd cs = constraint_svd(fam, rel_tol, true);
    if (cs.rank == r * r) return std::nullopt;

    // First singular vector past the numerical rank: the smallest
    // singular value, ties resolved by index order.
    const Eigen::VectorXcd v = cs.svd.matrixV().col(cs.rank);
    Eigen::MatrixXcd b(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) b(i, j) = v(i * r + j);

    // The kernel of the constraint map is closed under the adjoint, so
    // either the Hermitian or the anti-Hermitian part is a usable witness.
    Eigen::MatrixXcd a = 0.5 * (b + b.adjoint());
    if (a.norm() < 1e-8) a = std::complex<double>(0.0, 0.5) * (b - b.adjoint());
    a /= operator_norm(a);

    const double residual = constraint_residuals(fam, a).maxCoeff();
    if (residual > kConstraintTol)
        throw DegenerateTolerance("find_witness: constraint residual " +
                                  std::to_string(residual) +
                                  " exceeds tolerance; adjust the rank cut");
    return a;
}

ConvexSplit convex_split(const PhaseMatrix& c, const KolmogorovFamily& fam,
                         const Eigen::MatrixXcd& witness, double eps) {
    const int r = fam.rank();
    if (witness.rows() != r || witness.cols() != r)
        throw WitnessInvalid("convex_split: witness is not r x r");
    if ((witness - witness.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw WitnessInvalid("convex_split: witness is not Hermitian");
    const double norm = operator_norm(witness);
    if (norm < 1e-14) throw WitnessInvalid("convex_split: witness is zero");
    if (constraint_residuals(fam, witness).maxCoeff() > kConstraintTol)
        throw WitnessInvalid("convex_split: witness does not annihilate the diagonal forms");

    if (eps <= 0.0) eps = 0.5 / norm;
    if (eps * norm > 1.0 + 1e-12)
        throw EpsilonTooLarge("convex_split: I - eps*A is not PSD");

    // W_mn = <eta_m|A eta_n>.  Hermitize and zero the diagonal: both hold
    // exactly for a true witness, so this only removes numerical residue.
    Eigen::MatrixXcd w = fam.vectors().adjoint() * witness * fam.vectors();
    w = 0.5 * (w + w.adjoint());
    w.diagonal().setZero();

    if (2.0 * eps * w.cwiseAbs().maxCoeff() < 1e-12)
        throw WitnessInvalid("convex_split: split halves coincide");

    return ConvexSplit{PhaseMatrix(c.coefficients() + eps * w),
                       PhaseMatrix(c.coefficients() - eps * w), eps};
}

ExtremalityCertificate analyze_extremality(const PhaseMatrix& c, double rel_tol) {
    const KolmogorovFamily fam = kolmogorov_decompose(c, rel_tol);
    const ExtremalityTest test = is_extreme(fam, rel_tol);

    ExtremalityCertificate cert;
    cert.extreme = test.extreme;
    cert.rank = fam.rank();
    cert.constraint_rank = test.constraint_rank;
    cert.r_squared = test.r_squared;
    cert.degenerate_tolerance = test.degenerate_tolerance;
    if (!test.extreme) {
        cert.witness = find_witness(fam, rel_tol);
        if (cert.witness) cert.split = convex_split(c, fam, *cert.witness);
    }
    return cert;
}

}  // namespace obslab
