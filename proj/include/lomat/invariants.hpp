#pragma once

#include <cstdint>

#include "lomat/algebra.hpp"
#include "lomat/linmap.hpp"
#include "lomat/poly.hpp"

namespace lomat {

/*
 * RadicalValue: the real number v^{1/n} for a nonnegative rational v and a
 * positive root index n, kept canonical - n is minimal (no rational d-th
 * root of v exists for a divisor d > 1 of n), and v in {0, 1} forces n = 1.
 */
struct RadicalValue {
    mpq_class v;
    unsigned long n = 1;

    friend bool operator==(const RadicalValue& a, const RadicalValue& b) {
        return a.v == b.v && a.n == b.n;
    }
};

// canonicalizing constructor; throws bad_parameters for v < 0 or n = 0
RadicalValue make_radical(const mpq_class& v, unsigned long n);

// equality of represented values via cross-powering: x.v^{y.n} = y.v^{x.n}
bool radical_eq(const RadicalValue& x, const RadicalValue& y);

std::string radical_str(const RadicalValue& x);

// q^k for a nonnegative exponent
mpq_class mpq_pow_ui(const mpq_class& q, unsigned long k);

// rank(a)/n at the element's stage; promotion-invariant
mpq_class normalized_rank(const Element& a);
mpq_class normalized_rank_matrix(const ExactMatrix& a);

// |det(a)|^{1/n}; over Qi computed through |det|^2 with doubled root index
RadicalValue normalized_det(const Element& a);
RadicalValue normalized_det_matrix(const ExactMatrix& a);

// rank characterization of idempotents: r(a)/n + r(1-a)/n = 1
bool is_idempotent_via_rank(const Element& a);

/*
 * Degree oracle for rank: r(a) = max over b of deg det(t*a + b). The witness
 * strategy reduces a to diag(l_1, ..., l_r, 0, ...) by recorded row/column
 * operations and transports the complementary identity block back, which
 * certifies the max; random sampling gives a certified lower bound; the
 * exhaustive strategy scans all 0/1 matrices b (n <= 3).
 */
enum class RankStrategy { witness, random, exhaustive_small };

struct DegreeRankResult {
    std::size_t value = 0;
    bool certified = false;
    ExactMatrix b;  // candidate achieving the reported degree
    Poly poly;      // det(t*a + b)
};

DegreeRankResult rank_by_degree_witness(const ExactMatrix& a);
DegreeRankResult rank_by_degree_random(const ExactMatrix& a, std::size_t trials,
                                       std::uint64_t seed);
DegreeRankResult rank_by_degree_exhaustive_small(const ExactMatrix& a);
DegreeRankResult rank_by_degree(const ExactMatrix& a, RankStrategy strategy,
                                std::size_t trials = 50, std::uint64_t seed = 0);

// exact polynomial identity det(t*a + b)^m = det(t*phi(a) + phi(b))^n
bool poly_identity_check(const MatLinearMap& map, const ExactMatrix& a, const ExactMatrix& b);

} // namespace lomat
