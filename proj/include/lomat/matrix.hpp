#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lomat/scalar.hpp"

namespace lomat {

// Dense matrix over a single scalar field. Immutable in spirit: operations
// return fresh values, nothing is cached.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0), field_(Field::Q) {}
    ExactMatrix(std::size_t rows, std::size_t cols, Field f)
        : rows_(rows), cols_(cols), field_(f), e_(rows * cols, Scalar::zero(f)) {}

    static ExactMatrix identity(std::size_t n, Field f);
    // e_{ij} (0-based indices)
    static ExactMatrix basis(std::size_t n, std::size_t i, std::size_t j, Field f);
    static ExactMatrix diag(const std::vector<Scalar>& d, Field f);
    static ExactMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows,
                                 Field f = Field::Q);
    static ExactMatrix block_diag(const std::vector<ExactMatrix>& blocks);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    ExactMatrix transpose() const;
    // Kronecker product, block structure of *this scaled by entries
    ExactMatrix kron(const ExactMatrix& o) const;
    ExactMatrix scaled(const Scalar& c) const;

    ExactMatrix& operator+=(const ExactMatrix& o);
    ExactMatrix& operator-=(const ExactMatrix& o);
    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    std::string str() const;

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> e_;
};

} // namespace lomat
