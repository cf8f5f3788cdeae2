#include <cmath>
#include <random>

#include "doctest.h"
#include "obslab/extremality.hpp"
#include "obslab/random_gen.hpp"

using namespace obslab;
using Complex = std::complex<double>;

namespace {

// Family of `d` random unit vectors in C^r (not necessarily coming from a
// phase matrix); spanning is almost sure for d >= r.
KolmogorovFamily random_family(std::mt19937_64& rng, int d, int r) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd v(r, d);
    for (int n = 0; n < d; ++n) {
        for (int i = 0; i < r; ++i) v(i, n) = Complex(normal(rng), normal(rng));
        v.col(n).normalize();
    }
    return KolmogorovFamily(std::move(v), kDefaultRankTol, false);
}

Eigen::MatrixXcd random_matrix(std::mt19937_64& rng, int r) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd a(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) a(i, j) = Complex(normal(rng), normal(rng));
    return a;
}

// Independent dense null-space computation: dimension of {A : <n|A|n> = 0}.
int null_space_dim_oracle(const KolmogorovFamily& fam) {
    const int d = fam.size(), r = fam.rank();
    Eigen::MatrixXcd m(d, r * r);
    for (int n = 0; n < d; ++n)
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                m(n, i * r + j) = std::conj(fam.vector(n)(i)) * fam.vector(n)(j);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 1e-9 * svd.singularValues()(0)) ++rank;
    return r * r - rank;
}

}  // namespace

TEST_CASE("constraint matrix of the canonical family is an all-ones column") {
    const KolmogorovFamily fam = kolmogorov_decompose(PhaseMatrix::canonical(5));
    const Eigen::MatrixXcd m = constraint_matrix(fam);
    REQUIRE(m.rows() == 5);
    REQUIRE(m.cols() == 1);
    for (int n = 0; n < 5; ++n) CHECK(std::abs(m(n, 0) - Complex(1.0)) < 1e-12);
}

TEST_CASE("constraint matrix of basis projectors") {
    const KolmogorovFamily fam = kolmogorov_decompose(PhaseMatrix::trivial(2));
    const Eigen::MatrixXcd m = constraint_matrix(fam);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 4);
    // Rows are the flattened projectors onto the two basis directions, in
    // whichever order the eigensolver emitted them.
    Eigen::MatrixXcd expected(2, 4);
    expected << 1, 0, 0, 0, 0, 0, 0, 1;
    const bool direct = (m - expected).cwiseAbs().maxCoeff() < 1e-12;
    const bool swapped = (m - expected.colwise().reverse()).cwiseAbs().maxCoeff() < 1e-12;
    CHECK((direct || swapped));
}

TEST_CASE("constraint matrix realizes the quadratic-form map") {
    std::mt19937_64 rng(31);
    const KolmogorovFamily fam = random_family(rng, 7, 3);
    const Eigen::MatrixXcd m = constraint_matrix(fam);
    for (int trial = 0; trial < 5; ++trial) {
        const Eigen::MatrixXcd a = random_matrix(rng, 3);
        Eigen::VectorXcd vec_a(9);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) vec_a(i * 3 + j) = a(i, j);
        const Eigen::VectorXcd via_m = m * vec_a;
        for (int n = 0; n < 7; ++n) {
            const Complex direct = (fam.vector(n).adjoint() * a * fam.vector(n)).value();
            CHECK(std::abs(via_m(n) - direct) < 1e-13);
        }
    }
}

TEST_CASE("canonical is extreme, trivial is not") {
    for (int d : {1, 2, 8, 32}) {
        const auto test = is_extreme(kolmogorov_decompose(PhaseMatrix::canonical(d)));
        CHECK(test.extreme);
        CHECK(test.constraint_rank == 1);
    }
    const auto test = is_extreme(kolmogorov_decompose(PhaseMatrix::trivial(2)));
    CHECK(!test.extreme);
    CHECK(test.constraint_rank <= 2);
    CHECK(test.r_squared == 4);
}

TEST_CASE("witness for the trivial matrix has zero diagonal") {
    const KolmogorovFamily fam = kolmogorov_decompose(PhaseMatrix::trivial(2));
    const auto witness = find_witness(fam);
    REQUIRE(witness.has_value());
    CHECK((*witness - witness->adjoint()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(witness->diagonal().cwiseAbs().maxCoeff() < 1e-10);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(*witness, Eigen::EigenvaluesOnly);
    CHECK(es.eigenvalues().cwiseAbs().maxCoeff() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("no witness exists for the canonical family") {
    CHECK(!find_witness(kolmogorov_decompose(PhaseMatrix::canonical(8))).has_value());
}

TEST_CASE("convex split of the trivial matrix") {
    const PhaseMatrix c = PhaseMatrix::trivial(2);
    const KolmogorovFamily fam = kolmogorov_decompose(c);
    const auto witness = find_witness(fam);
    REQUIRE(witness.has_value());
    const ConvexSplit split = convex_split(c, fam, *witness);
    const Eigen::MatrixXcd avg =
        0.5 * (split.plus.coefficients() + split.minus.coefficients());
    CHECK((avg - c.coefficients()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((split.plus.coefficients() - split.minus.coefficients()).cwiseAbs().maxCoeff() > 1e-6);
    CHECK(split.epsilon == doctest::Approx(0.5));
}

TEST_CASE("split guards") {
    const PhaseMatrix c = PhaseMatrix::trivial(2);
    const KolmogorovFamily fam = kolmogorov_decompose(c);
    const auto witness = find_witness(fam);
    REQUIRE(witness.has_value());
    CHECK_THROWS_AS(convex_split(c, fam, Eigen::MatrixXcd::Zero(2, 2)), WitnessInvalid);
    CHECK_THROWS_AS(convex_split(c, fam, *witness, 3.0), EpsilonTooLarge);
    // A Hermitian matrix that does not annihilate the quadratic forms.
    CHECK_THROWS_AS(convex_split(c, fam, Eigen::MatrixXcd::Identity(2, 2)), WitnessInvalid);
}

TEST_CASE("verdicts agree with the dense null-space oracle") {
    std::mt19937_64 rng(101);
    for (int r : {1, 2}) {
        for (int d = std::max(1, r); d <= 6; ++d) {
            const KolmogorovFamily fam = random_family(rng, d, r);
            const auto test = is_extreme(fam);
            const int null_dim = null_space_dim_oracle(fam);
            CHECK(test.extreme == (null_dim == 0));
            CHECK(test.constraint_rank == r * r - null_dim);
        }
    }
}

TEST_CASE("counting bound: extreme families satisfy d >= r^2") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 3);
        const int d = 1 + static_cast<int>(rng() % 10);
        if (d < r) continue;
        const KolmogorovFamily fam = random_family(rng, d, r);
        const auto test = is_extreme(fam);
        if (test.extreme) CHECK(d >= r * r);
        if (d < r * r) CHECK(!test.extreme);
    }
}

TEST_CASE("verdict is invariant under a global unitary on the family") {
    std::mt19937_64 rng(77);
    const KolmogorovFamily fam = random_family(rng, 5, 2);
    const Eigen::MatrixXcd u =
        Eigen::HouseholderQR<Eigen::MatrixXcd>(random_matrix(rng, 2)).householderQ();
    const KolmogorovFamily rotated(u * fam.vectors(), fam.tolerance(), false);
    CHECK(is_extreme(fam).extreme == is_extreme(rotated).extreme);
    CHECK(is_extreme(fam).constraint_rank == is_extreme(rotated).constraint_rank);
}

TEST_CASE("full pipeline produces sound certificates") {
    std::mt19937_64 rng(13);
    for (int rank : {2, 3}) {
        const PhaseMatrix c = random_phase_matrix(rng, 6, rank);
        const ExtremalityCertificate cert = analyze_extremality(c);
        CHECK(cert.rank == rank);
        if (!cert.extreme) {
            REQUIRE(cert.witness.has_value());
            REQUIRE(cert.split.has_value());
            const Eigen::MatrixXcd avg =
                0.5 * (cert.split->plus.coefficients() + cert.split->minus.coefficients());
            CHECK((avg - c.coefficients()).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}
