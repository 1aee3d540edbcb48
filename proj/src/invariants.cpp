#include "lomat/invariants.hpp"

#include "lomat/error.hpp"
#include "lomat/linalg.hpp"
#include "lomat/rng.hpp"

namespace lomat {

mpq_class mpq_pow_ui(const mpq_class& q, unsigned long k) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), k);
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

namespace {

// v >= 0 reduced; a rational d-th root exists iff numerator and denominator
// are both integer d-th powers
bool rational_root(const mpq_class& v, unsigned long d, mpq_class& out) {
    if (d == 1) {
        out = v;
        return true;
    }
    mpz_class rn, rd;
    bool exact_n = mpz_root(rn.get_mpz_t(), v.get_num().get_mpz_t(), d) != 0;
    if (!exact_n)
        return false;
    bool exact_d = mpz_root(rd.get_mpz_t(), v.get_den().get_mpz_t(), d) != 0;
    if (!exact_d)
        return false;
    out = mpq_class(rn, rd);
    out.canonicalize();
    return true;
}

} // namespace

RadicalValue make_radical(const mpq_class& v, unsigned long n) {
    if (n == 0)
        throw Error(Errc::bad_parameters, "root index must be positive");
    if (v < 0)
        throw Error(Errc::bad_parameters, "radicand must be nonnegative");
    for (unsigned long d = n; d >= 2; --d) {
        if (n % d != 0)
            continue;
        mpq_class root;
        if (rational_root(v, d, root))
            return RadicalValue{root, n / d};
    }
    return RadicalValue{v, n};
}

bool radical_eq(const RadicalValue& x, const RadicalValue& y) {
    return mpq_pow_ui(x.v, y.n) == mpq_pow_ui(y.v, x.n);
}

std::string radical_str(const RadicalValue& x) {
    std::string s = rational_str(x.v);
    if (x.n != 1)
        s += "^(1/" + std::to_string(x.n) + ")";
    return s;
}

mpq_class normalized_rank_matrix(const ExactMatrix& a) {
    if (!a.is_square())
        throw Error(Errc::non_square, "normalized rank needs a square matrix");
    mpq_class r(static_cast<unsigned long>(rank_exact(a)), static_cast<unsigned long>(a.rows()));
    r.canonicalize();
    return r;
}

mpq_class normalized_rank(const Element& a) { return normalized_rank_matrix(a.mat); }

RadicalValue normalized_det_matrix(const ExactMatrix& a) {
    if (!a.is_square())
        throw Error(Errc::non_square, "normalized determinant needs a square matrix");
    const unsigned long n = static_cast<unsigned long>(a.rows());
    Scalar d = det_exact(a);
    if (a.field() == Field::Q)
        return make_radical(d.abs_q(), n);
    return make_radical(d.abs_squared(), 2 * n);
}

RadicalValue normalized_det(const Element& a) { return normalized_det_matrix(a.mat); }

bool is_idempotent_via_rank(const Element& a) {
    Element one = element_identity(a.tower, a.stage, a.mat.field());
    return normalized_rank(a) + normalized_rank(elem_sub(one, a)) == 1;
}

DegreeRankResult rank_by_degree_witness(const ExactMatrix& a) {
    if (!a.is_square())
        throw Error(Errc::non_square, "rank oracle needs a square matrix");
    const std::size_t n = a.rows();
    const Field f = a.field();
    ExactMatrix m(a);
    ExactMatrix p = ExactMatrix::identity(n, f);
    ExactMatrix q = ExactMatrix::identity(n, f);
    std::size_t r = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pi = n, pj = n;
        for (std::size_t i = k; i < n && pi == n; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (!m.at(i, j).is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == n)
            break;
        if (pi != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(k, j), m.at(pi, j));
                std::swap(p.at(k, j), p.at(pi, j));
            }
        if (pj != k)
            for (std::size_t i = 0; i < n; ++i) {
                std::swap(m.at(i, k), m.at(i, pj));
                std::swap(q.at(i, k), q.at(i, pj));
            }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero())
                continue;
            Scalar c = m.at(i, k) / m.at(k, k);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) -= c * m.at(k, j);
                p.at(i, j) -= c * p.at(k, j);
            }
        }
        for (std::size_t j = k + 1; j < n; ++j) {
            if (m.at(k, j).is_zero())
                continue;
            Scalar c = m.at(k, j) / m.at(k, k);
            for (std::size_t i = 0; i < n; ++i) {
                m.at(i, j) -= c * m.at(i, k);
                q.at(i, j) -= c * q.at(i, k);
            }
        }
        ++r;
    }
    // p * a * q = diag(l_1..l_r, 0..); push the complementary identity
    // block back through the operations: b = p^{-1} * b0 * q^{-1}
    ExactMatrix b0(n, n, f);
    for (std::size_t i = r; i < n; ++i)
        b0.at(i, i) = Scalar::one(f);
    ExactMatrix b = invert(p) * b0 * invert(q);
    DegreeRankResult res;
    res.value = r;
    res.certified = true;
    res.b = std::move(b);
    res.poly = det_poly(a, res.b);
    return res;
}

DegreeRankResult rank_by_degree_random(const ExactMatrix& a, std::size_t trials,
                                       std::uint64_t seed) {
    if (!a.is_square())
        throw Error(Errc::non_square, "rank oracle needs a square matrix");
    const std::size_t n = a.rows();
    Rng rng(seed);
    DegreeRankResult res;
    res.b = ExactMatrix(n, n, a.field());
    res.poly = Poly(a.field());
    long best = -1;
    for (std::size_t t = 0; t < trials; ++t) {
        ExactMatrix cand = rng.matrix(n, n, a.field());
        Poly p = det_poly(a, cand);
        if (p.degree() > best) {
            best = p.degree();
            res.b = std::move(cand);
            res.poly = std::move(p);
        }
    }
    // the zero polynomial's degree (-inf) never beats any candidate; a
    // degree-0 lower bound is always sound since r(a) >= 0
    res.value = best < 0 ? 0 : static_cast<std::size_t>(best);
    res.certified = false;
    return res;
}

DegreeRankResult rank_by_degree_exhaustive_small(const ExactMatrix& a) {
    if (!a.is_square())
        throw Error(Errc::non_square, "rank oracle needs a square matrix");
    const std::size_t n = a.rows();
    if (n > 3)
        throw Error(Errc::bad_parameters, "exhaustive strategy is limited to n <= 3");
    const Field f = a.field();
    DegreeRankResult res;
    res.b = ExactMatrix(n, n, f);
    res.poly = Poly(f);
    long best = -1;
    for (std::size_t mask = 0; mask < (std::size_t(1) << (n * n)); ++mask) {
        ExactMatrix cand(n, n, f);
        for (std::size_t bit = 0; bit < n * n; ++bit)
            if (mask & (std::size_t(1) << bit))
                cand.at(bit / n, bit % n) = Scalar::one(f);
        Poly p = det_poly(a, cand);
        if (p.degree() > best) {
            best = p.degree();
            res.b = std::move(cand);
            res.poly = std::move(p);
        }
    }
    res.value = best < 0 ? 0 : static_cast<std::size_t>(best);
    res.certified = true;
    return res;
}

DegreeRankResult rank_by_degree(const ExactMatrix& a, RankStrategy strategy, std::size_t trials,
                                std::uint64_t seed) {
    switch (strategy) {
    case RankStrategy::witness:
        return rank_by_degree_witness(a);
    case RankStrategy::random:
        return rank_by_degree_random(a, trials, seed);
    case RankStrategy::exhaustive_small:
        return rank_by_degree_exhaustive_small(a);
    }
    throw Error(Errc::bad_parameters, "unknown rank strategy");
}

bool poly_identity_check(const MatLinearMap& map, const ExactMatrix& a, const ExactMatrix& b) {
    if (!a.is_square() || a.rows() != map.src() || b.rows() != a.rows() || !b.is_square())
        throw Error(Errc::size_mismatch, "operands must be square of the map's source size");
    Poly lhs = det_poly(a, b);
    Poly rhs = det_poly(apply(map, a), apply(map, b));
    return lhs.pow(map.dst()) == rhs.pow(map.src());
}

} // namespace lomat
