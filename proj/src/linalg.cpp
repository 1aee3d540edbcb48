#include "lomat/linalg.hpp"

#include <algorithm>

namespace lomat {

std::size_t rank_exact(const ExactMatrix& a) {
    RowReducer red(a.cols(), 0, a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::vector<Scalar> row(a.cols(), Scalar::zero(a.field()));
        for (std::size_t j = 0; j < a.cols(); ++j)
            row[j] = a.at(i, j);
        red.insert(std::move(row));
    }
    return red.rank();
}

/*
 * Bareiss elimination. Intermediate entries are leading minors of the
 * (row-permuted) input, so every division is exact; with first-nonzero
 * pivoting the computation is fully deterministic.
 */
Scalar det_exact(const ExactMatrix& a) {
    if (!a.is_square())
        throw Error(Errc::non_square, "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    const Field f = a.field();
    if (n == 0)
        return Scalar::one(f);
    ExactMatrix m(a);
    bool negate = false;
    Scalar prev = Scalar::one(f);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (!m.at(i, k).is_zero()) {
                piv = i;
                break;
            }
        if (piv == n)
            return Scalar::zero(f);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = Scalar::zero(f);
        }
        prev = m.at(k, k);
    }
    Scalar d = m.at(n - 1, n - 1);
    return negate ? -d : d;
}

namespace {

// entries of t*a + b as degree <= 1 polynomials
std::vector<Poly> linear_entries(const ExactMatrix& a, const ExactMatrix& b) {
    std::vector<Poly> p;
    p.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            p.push_back(Poly::linear(b.at(i, j), a.at(i, j)));
    return p;
}

void check_det_poly_args(const ExactMatrix& a, const ExactMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
        throw Error(Errc::size_mismatch, "det_poly needs square matrices of equal size");
    if (a.field() != b.field())
        throw Error(Errc::field_mismatch, "det_poly operand fields differ");
}

} // namespace

// Laplace expansion memoized over column subsets: minor(rows 0..r-1, cols S)
// is computed once per subset S.
Poly det_poly_cofactor(const ExactMatrix& a, const ExactMatrix& b) {
    check_det_poly_args(a, b);
    const std::size_t n = a.rows();
    const Field f = a.field();
    if (n == 0)
        return Poly::constant(Scalar::one(f));
    if (n > 20)
        throw Error(Errc::bad_parameters, "cofactor path limited to small matrices");
    std::vector<Poly> entry = linear_entries(a, b);
    std::vector<Poly> minor(std::size_t(1) << n, Poly(f));
    minor[0] = Poly::constant(Scalar::one(f));
    for (std::size_t s = 1; s < minor.size(); ++s) {
        const std::size_t r = static_cast<std::size_t>(__builtin_popcountll(s));
        Poly acc(f);
        std::size_t pos = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(s & (std::size_t(1) << j)))
                continue;
            const Poly& e = entry[(r - 1) * n + j];
            if (!e.is_zero()) {
                Poly term = e * minor[s ^ (std::size_t(1) << j)];
                if (((r - 1) + pos) % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            ++pos;
        }
        minor[s] = std::move(acc);
    }
    return minor.back();
}

Poly det_poly_bareiss(const ExactMatrix& a, const ExactMatrix& b) {
    check_det_poly_args(a, b);
    const std::size_t n = a.rows();
    const Field f = a.field();
    if (n == 0)
        return Poly::constant(Scalar::one(f));
    std::vector<Poly> m = linear_entries(a, b);
    auto at = [&](std::size_t i, std::size_t j) -> Poly& { return m[i * n + j]; };
    bool negate = false;
    Poly prev = Poly::constant(Scalar::one(f));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (!at(i, k).is_zero()) {
                piv = i;
                break;
            }
        if (piv == n)
            return Poly(f);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(at(k, j), at(piv, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = Poly::divexact(at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
            at(i, k) = Poly(f);
        }
        prev = at(k, k);
    }
    Poly d = m[n * n - 1];
    if (negate)
        d = Poly(f) - d;
    return d;
}

Poly det_poly(const ExactMatrix& a, const ExactMatrix& b) {
    check_det_poly_args(a, b);
    return a.rows() <= 8 ? det_poly_cofactor(a, b) : det_poly_bareiss(a, b);
}

ExactMatrix invert(const ExactMatrix& a) {
    if (!a.is_square())
        throw Error(Errc::non_square, "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    const Field f = a.field();
    ExactMatrix aug(n, 2 * n, f);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = Scalar::one(f);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t i = col; i < n; ++i)
            if (!aug.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv == n)
            throw Error(Errc::singular_matrix, "matrix is singular");
        if (piv != col)
            for (std::size_t j = 0; j < 2 * n; ++j)
                std::swap(aug.at(col, j), aug.at(piv, j));
        Scalar d = aug.at(col, col);
        for (std::size_t j = col; j < 2 * n; ++j)
            aug.at(col, j) /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || aug.at(i, col).is_zero())
                continue;
            Scalar fmul = aug.at(i, col);
            for (std::size_t j = col; j < 2 * n; ++j)
                aug.at(i, j) -= fmul * aug.at(col, j);
        }
    }
    ExactMatrix inv(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

RowReducer::RowReducer(std::size_t cols, std::size_t rhs_cols, Field f)
    : cols_(cols), rhs_cols_(rhs_cols), field_(f) {}

bool RowReducer::insert(std::vector<Scalar> row) {
    if (row.size() != cols_ + rhs_cols_)
        throw Error(Errc::size_mismatch, "row length mismatch");
    // reduce against existing pivots
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = row[pivot_[k]];
        if (c.is_zero())
            continue;
        Scalar fmul = c;  // pivot entries are normalized to 1
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!rows_[k][j].is_zero())
                row[j] -= fmul * rows_[k][j];
    }
    std::size_t p = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!row[j].is_zero()) {
            p = j;
            break;
        }
    if (p == cols_) {
        for (std::size_t j = cols_; j < row.size(); ++j)
            if (!row[j].is_zero())
                inconsistent_ = true;
        return false;
    }
    Scalar d = row[p];
    for (std::size_t j = p; j < row.size(); ++j)
        row[j] /= d;
    // keep existing rows fully reduced
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = rows_[k][p];
        if (c.is_zero())
            continue;
        Scalar fmul = c;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero())
                rows_[k][j] -= fmul * row[j];
    }
    auto it = std::lower_bound(pivot_.begin(), pivot_.end(), p);
    std::size_t idx = static_cast<std::size_t>(it - pivot_.begin());
    pivot_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(row));
    return true;
}

std::vector<std::size_t> RowReducer::free_columns() const {
    std::vector<std::size_t> free;
    std::size_t k = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (k < pivot_.size() && pivot_[k] == j)
            ++k;
        else
            free.push_back(j);
    }
    return free;
}

std::vector<Scalar> RowReducer::particular() const {
    if (rhs_cols_ != 1)
        throw Error(Errc::bad_parameters, "particular solution needs one rhs column");
    if (inconsistent_)
        throw Error(Errc::bad_parameters, "system is inconsistent");
    std::vector<Scalar> x(cols_, Scalar::zero(field_));
    for (std::size_t k = 0; k < rows_.size(); ++k)
        x[pivot_[k]] = rows_[k][cols_];
    return x;
}

std::vector<std::vector<Scalar>> RowReducer::nullspace() const {
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t fcol : free_columns()) {
        std::vector<Scalar> v(cols_, Scalar::zero(field_));
        v[fcol] = Scalar::one(field_);
        for (std::size_t k = 0; k < rows_.size(); ++k)
            v[pivot_[k]] = -rows_[k][fcol];
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolution solve_linear(const ExactMatrix& system, const ExactMatrix& rhs) {
    if (rhs.rows() != system.rows() || rhs.cols() != 1)
        throw Error(Errc::size_mismatch, "rhs must be a column of matching height");
    if (rhs.field() != system.field())
        throw Error(Errc::field_mismatch, "system and rhs fields differ");
    RowReducer red(system.cols(), 1, system.field());
    for (std::size_t i = 0; i < system.rows(); ++i) {
        std::vector<Scalar> row;
        row.reserve(system.cols() + 1);
        for (std::size_t j = 0; j < system.cols(); ++j)
            row.push_back(system.at(i, j));
        row.push_back(rhs.at(i, 0));
        red.insert(std::move(row));
        if (red.inconsistent())
            return LinearSolution{};
    }
    LinearSolution sol;
    sol.consistent = true;
    std::vector<Scalar> x = red.particular();
    sol.particular = ExactMatrix(system.cols(), 1, system.field());
    for (std::size_t j = 0; j < system.cols(); ++j)
        sol.particular.at(j, 0) = x[j];
    for (auto& v : red.nullspace()) {
        ExactMatrix col(system.cols(), 1, system.field());
        for (std::size_t j = 0; j < system.cols(); ++j)
            col.at(j, 0) = v[j];
        sol.nullspace.push_back(std::move(col));
    }
    return sol;
}

} // namespace lomat
