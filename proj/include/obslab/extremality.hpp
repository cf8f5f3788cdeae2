#pragma once

#include <Eigen/Dense>
#include <optional>

#include "obslab/kolmogorov.hpp"
#include "obslab/phase_matrix.hpp"

namespace obslab {

/// d x r^2 matrix whose row n is the row-major flattening of the rank-1
/// projector |eta_n><eta_n|, so that M vec(A) = (<eta_n|A eta_n>)_n for
/// every r x r matrix A.
Eigen::MatrixXcd constraint_matrix(const KolmogorovFamily& fam);

struct ExtremalityTest {
    bool extreme = false;
    int constraint_rank = 0;
    int r_squared = 0;
    bool degenerate_tolerance = false;
};

/// Rank test: the family is extreme within the truncated model iff the
/// constraint matrix has full column rank r^2.
ExtremalityTest is_extreme(const KolmogorovFamily& fam, double rel_tol = kDefaultRankTol);

/// A nonzero Hermitian A with unit operator norm and <eta_n|A eta_n> = 0
/// for every n, or nullopt when the family is extreme.  Deterministic:
/// the null vector comes from the first zero singular value in index
/// order.
std::optional<Eigen::MatrixXcd> find_witness(const KolmogorovFamily& fam,
                                             double rel_tol = kDefaultRankTol);

struct ConvexSplit {
    PhaseMatrix plus;
    PhaseMatrix minus;
    double epsilon;
};

/// Explicit nontrivial decomposition c = (c_plus + c_minus)/2 generated
/// by a witness: (c_pm)_mn = <eta_m|(I pm eps A)eta_n>.  eps <= 0 selects
/// the default 1/(2 ||A||_op).
ConvexSplit convex_split(const PhaseMatrix& c, const KolmogorovFamily& fam,
                         const Eigen::MatrixXcd& witness, double eps = 0.0);

/// Full verdict for one observable.  "Extreme" always means extreme
/// within the truncated model; no claim is made about an infinite
/// extension.
struct ExtremalityCertificate {
    bool extreme = false;
    int rank = 0;
    int constraint_rank = 0;
    int r_squared = 0;
    bool degenerate_tolerance = false;
    std::optional<Eigen::MatrixXcd> witness;
    std::optional<ConvexSplit> split;
};

/// decompose -> rank test -> witness -> split, in one call.
ExtremalityCertificate analyze_extremality(const PhaseMatrix& c,
                                           double rel_tol = kDefaultRankTol);

}  // namespace obslab
