#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "obslab/kolmogorov.hpp"
#include "obslab/random_gen.hpp"

using namespace obslab;

TEST_CASE("canonical matrix decomposes to a constant unit scalar") {
    const KolmogorovFamily fam = kolmogorov_decompose(PhaseMatrix::canonical(8));
    CHECK(fam.rank() == 1);
    for (int n = 0; n < 8; ++n) {
        CHECK(std::abs(fam.vector(n).norm() - 1.0) < 1e-10);
        CHECK(std::abs(fam.vector(n)(0) - fam.vector(0)(0)) < 1e-12);
    }
}

TEST_CASE("identity matrix decomposes to an orthonormal family") {
    const KolmogorovFamily fam = kolmogorov_decompose(PhaseMatrix::trivial(3));
    CHECK(fam.rank() == 3);
    CHECK((fam.gram() - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Gram roundtrip reproduces the source matrix") {
    std::mt19937_64 rng(5);
    for (int rank : {1, 2, 5, 8}) {
        const PhaseMatrix c = random_phase_matrix(rng, 8, rank);
        const KolmogorovFamily fam = kolmogorov_decompose(c);
        CHECK((fam.gram() - c.coefficients()).cwiseAbs().maxCoeff() < 1e-10);
        for (int n = 0; n < fam.size(); ++n)
            CHECK(std::abs(fam.vector(n).norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("rank matches the generating dimension") {
    std::mt19937_64 rng(17);
    CHECK(rank_of(PhaseMatrix::canonical(8)) == 1);
    CHECK(rank_of(PhaseMatrix::trivial(5)) == 5);
    for (int rank : {2, 4, 7}) CHECK(rank_of(random_phase_matrix(rng, 12, rank)) == rank);
}

TEST_CASE("decomposition is unique up to a unitary") {
    // The testable form: any unitary rotation of the family leaves the
    // Gram matrix, and hence everything derived from it, unchanged.
    std::mt19937_64 rng(29);
    const PhaseMatrix c = random_phase_matrix(rng, 6, 3);
    const KolmogorovFamily fam = kolmogorov_decompose(c);

    Eigen::MatrixXcd gauss(fam.rank(), fam.rank());
    std::normal_distribution<double> normal;
    for (int i = 0; i < fam.rank(); ++i)
        for (int j = 0; j < fam.rank(); ++j)
            gauss(i, j) = std::complex<double>(normal(rng), normal(rng));
    const Eigen::MatrixXcd u = Eigen::HouseholderQR<Eigen::MatrixXcd>(gauss).householderQ();

    const KolmogorovFamily rotated(u * fam.vectors(), fam.tolerance(), false);
    CHECK((rotated.gram() - fam.gram()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("degenerate tolerance is flagged when an eigenvalue rides the cut") {
    // Two nearly parallel unit vectors: eigenvalues {2 - s, s}.  Put the
    // small one within a decade of the relative cut ~ 2e-9.
    const double s = 2.0 * kDefaultRankTol;
    Eigen::MatrixXcd c(2, 2);
    c << 1.0, 1.0 - s, 1.0 - s, 1.0;
    const KolmogorovFamily fam = kolmogorov_decompose(PhaseMatrix(c));
    CHECK(fam.degenerate_tolerance());

    CHECK(!kolmogorov_decompose(PhaseMatrix::trivial(4)).degenerate_tolerance());
    CHECK(!kolmogorov_decompose(PhaseMatrix::canonical(4)).degenerate_tolerance());
}

TEST_CASE("rank-one canonical form") {
    const int d = 6;
    SUBCASE("canonical gives zero phases") {
        const RankOneForm form = rank_one_canonical_form(PhaseMatrix::canonical(d));
        CHECK(form.alpha.cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("linear phase ramp is recovered") {
        Eigen::VectorXd alpha(d);
        for (int n = 0; n < d; ++n)
            alpha(n) = std::fmod(n * std::numbers::pi / 3.0, 2.0 * std::numbers::pi);
        const RankOneForm form = rank_one_canonical_form(rank_one_matrix(alpha));
        for (int n = 0; n < d; ++n) CHECK(std::abs(form.alpha(n) - alpha(n)) < 1e-12);
    }
    SUBCASE("identity is rejected") {
        CHECK_THROWS_AS(rank_one_canonical_form(PhaseMatrix::trivial(2)), NotRankOne);
    }
}
