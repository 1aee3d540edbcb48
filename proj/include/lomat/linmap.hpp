#pragma once

#include <vector>

#include "lomat/matrix.hpp"

namespace lomat {

// row-major vectorization: entry (i,j) of an n x n matrix lands at i*n + j
ExactMatrix vec(const ExactMatrix& a);
ExactMatrix unvec(const ExactMatrix& v, std::size_t m, Field f);

/*
 * Linear map M_n -> M_m stored as its m^2 x n^2 coefficient matrix: column
 * (i*n + j) is vec of the image of the basis matrix e_{ij}. Constructed
 * either from explicit basis images or from a raw coefficient matrix.
 */
class MatLinearMap {
public:
    static MatLinearMap from_images(std::size_t n, const std::vector<ExactMatrix>& images);
    static MatLinearMap from_coeffs(std::size_t n, std::size_t m, ExactMatrix coeffs);

    std::size_t src() const { return n_; }
    std::size_t dst() const { return m_; }
    Field field() const { return coeffs_.field(); }
    const ExactMatrix& coeffs() const { return coeffs_; }

    friend bool operator==(const MatLinearMap& a, const MatLinearMap& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
    }

private:
    MatLinearMap(std::size_t n, std::size_t m, ExactMatrix coeffs)
        : n_(n), m_(m), coeffs_(std::move(coeffs)) {}

    std::size_t n_, m_;
    ExactMatrix coeffs_;
};

ExactMatrix apply(const MatLinearMap& map, const ExactMatrix& a);

// images of e_{11}, e_{12}, ..., e_{nn} in basis order
std::vector<ExactMatrix> basis_images(const MatLinearMap& map);

MatLinearMap identity_map(std::size_t n, Field f);
// a |-> a (x) I_k, the canonical unital embedding M_n -> M_{nk}
MatLinearMap embed_canonical(std::size_t n, unsigned long k, Field f);
MatLinearMap transpose_map(std::size_t n, Field f);
// a |-> u a u^{-1}; throws singular_conjugator
MatLinearMap conjugation_map(const ExactMatrix& u);
// a |-> x a y with x: m x n, y: n x m
MatLinearMap two_sided_map(const ExactMatrix& x, const ExactMatrix& y);
// g after f
MatLinearMap compose(const MatLinearMap& g, const MatLinearMap& f);
MatLinearMap scale_map(const Scalar& c, const MatLinearMap& map);
// a |-> block-diag(f(a), g(a)) for f, g with the same source
MatLinearMap direct_sum(const MatLinearMap& f, const MatLinearMap& g);

} // namespace lomat
