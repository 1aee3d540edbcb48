#pragma once

#include <cstddef>
#include <vector>

namespace lomat {

/*
 * Finite description of an embedding tower M_{n1} c M_{n2} c ...: stage
 * sizes obey n_{i+1} = n_i * m_i, where the multiplier sequence m_1, m_2, ...
 * is the prefix list followed by the cycle list repeated forever. A
 * finite-dimensional (constant) tower is cycle = {1}.
 */
struct TowerDescriptor {
    unsigned long n1 = 1;
    std::vector<unsigned long> prefix;
    std::vector<unsigned long> cycle = {1};

    // throws bad_parameters unless n1 >= 1, every multiplier >= 1, cycle nonempty
    void validate() const;

    // multiplier taking stage i to stage i+1 (stages are 1-based)
    unsigned long multiplier(std::size_t i) const;

    // n_i; throws stage_too_large when the product overflows the guard
    unsigned long stage_size(std::size_t i) const;

    bool operator==(const TowerDescriptor&) const = default;
};

} // namespace lomat
