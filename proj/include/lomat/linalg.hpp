#pragma once

#include <vector>

#include "lomat/matrix.hpp"
#include "lomat/poly.hpp"

namespace lomat {

// row rank by exact Gaussian elimination
std::size_t rank_exact(const ExactMatrix& a);

// exact determinant by fraction-free (Bareiss) elimination; throws non_square
Scalar det_exact(const ExactMatrix& a);

// det(t*a + b) as an exact polynomial in t; cofactor expansion for n <= 8,
// fraction-free elimination with polynomial pivots above. Throws size_mismatch.
Poly det_poly(const ExactMatrix& a, const ExactMatrix& b);
Poly det_poly_cofactor(const ExactMatrix& a, const ExactMatrix& b);
Poly det_poly_bareiss(const ExactMatrix& a, const ExactMatrix& b);

// inverse by Gauss-Jordan elimination; throws singular_matrix
ExactMatrix invert(const ExactMatrix& a);

// Full solution set of system*x = rhs: a particular solution with free
// variables set to zero plus a basis of the nullspace. Inconsistency is a
// return state, not an error.
struct LinearSolution {
    bool consistent = false;
    ExactMatrix particular;               // cols x 1
    std::vector<ExactMatrix> nullspace;   // each cols x 1
};

LinearSolution solve_linear(const ExactMatrix& system, const ExactMatrix& rhs);

/*
 * RowReducer: incremental reduced row echelon form over the scalar field.
 * Rows of an (optionally augmented) system are inserted one at a time and
 * reduced against the pivots collected so far; dependent rows vanish at
 * insertion, so assembling a large redundant system never materializes it.
 * Pivoting is first-nonzero in row order, which keeps results deterministic.
 */
class RowReducer {
public:
    RowReducer(std::size_t cols, std::size_t rhs_cols, Field f);

    // row.size() == cols + rhs_cols; returns true if the row added a pivot
    bool insert(std::vector<Scalar> row);

    bool inconsistent() const { return inconsistent_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    // columns without a pivot, ascending
    std::vector<std::size_t> free_columns() const;
    // particular solution of the accumulated system (rhs_cols == 1, consistent)
    std::vector<Scalar> particular() const;
    // nullspace basis of the coefficient part, one vector per free column
    std::vector<std::vector<Scalar>> nullspace() const;

private:
    std::size_t cols_, rhs_cols_;
    Field field_;
    bool inconsistent_ = false;
    std::vector<std::vector<Scalar>> rows_;  // in pivot-column order
    std::vector<std::size_t> pivot_;         // pivot column of rows_[k]
};

} // namespace lomat
