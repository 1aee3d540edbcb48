#pragma once

#include <vector>

#include "lomat/matrix.hpp"
#include "lomat/tower.hpp"

namespace lomat {

/*
 * Jordan-Wigner realization of 2k Clifford generators in M_{2^k} over the
 * Gaussian rationals: gamma_{2j-1} = Z^(j-1) (x) X (x) I^(k-j) and
 * gamma_{2j} likewise with Y, where X, Y, Z are the standard 2x2 matrices.
 * They satisfy gamma_a gamma_b + gamma_b gamma_a = 2 delta_ab I exactly, and
 * stage k embeds into stage k+1 by gamma (x) I_2.
 */
struct CliffordStage {
    std::size_t k = 0;
    std::vector<ExactMatrix> gammas;  // 2k generators in M_{2^k}(Qi)
};

// throws bad_parameters for k < 1, stage_too_large for k > k_max
CliffordStage clifford_generators(std::size_t k, std::size_t k_max = 5);

// dimension of the span of the 2^{2k} ordered products of distinct
// generators, by exact rank of their vectorizations; equals 4^k
std::size_t generated_dimension(const CliffordStage& stage);

// the tower M_2 c M_4 c M_8 c ... carrying the construction: n1 = 2,
// cycle = {2}, Steinitz number 2^inf
TowerDescriptor clifford_tower(std::size_t k_max);

} // namespace lomat
