#pragma once

#include <Eigen/Dense>
#include <random>

#include "obslab/phase_matrix.hpp"

namespace obslab {

/// Gram matrix of `rank` -dimensional random unit vectors: a valid phase
/// matrix of (almost surely) that rank.
PhaseMatrix random_phase_matrix(std::mt19937_64& rng, int d, int rank);

/// Phases drawn uniformly from [0, 2pi), alpha_0 = 0.
Eigen::VectorXd random_phase_sequence(std::mt19937_64& rng, int d);

/// Rank-1 matrix c_mn = e^{i(alpha_m - alpha_n)}.
PhaseMatrix rank_one_matrix(const Eigen::VectorXd& alpha);

}  // namespace obslab
