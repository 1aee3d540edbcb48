#pragma once

#include <cstdint>
#include <random>

#include "lomat/matrix.hpp"

namespace lomat {

/*
 * Deterministic corpus generator. mt19937_64 has a fully specified output
 * sequence, and values are reduced with plain modulo (std distributions are
 * not portable across standard libraries), so a seed pins every corpus
 * byte-for-byte on any platform.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform-ish integer in [lo, hi], inclusive
    long int_in(long lo, long hi);

    // rational with numerator in [-mag, mag] and denominator in [1, mag];
    // over Qi both components are drawn
    Scalar rational(Field f, long mag = 9);
    // as above but never zero
    Scalar nonzero_rational(Field f, long mag = 9);

    ExactMatrix matrix(std::size_t rows, std::size_t cols, Field f, long mag = 9);

    // D * L * U with nonzero diagonal D and unit-triangular L, U: invertible
    // by construction, no rejection sampling
    ExactMatrix invertible(std::size_t n, Field f, long mag = 9);

    // L * U with unit-triangular factors: determinant exactly 1
    ExactMatrix unit_det(std::size_t n, Field f, long mag = 9);

    // S * diag(1,...,1,0,...,0) * T with invertible S, T: rank exactly r
    ExactMatrix of_rank(std::size_t n, std::size_t r, Field f, long mag = 3);

    // S * diag(1,...,1,0,...,0) * S^-1: idempotent of rank r
    ExactMatrix idempotent(std::size_t n, std::size_t r, Field f, long mag = 3);

private:
    std::mt19937_64 eng_;
};

} // namespace lomat
