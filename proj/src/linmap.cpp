#include "lomat/linmap.hpp"

#include "lomat/error.hpp"
#include "lomat/linalg.hpp"

namespace lomat {

ExactMatrix vec(const ExactMatrix& a) {
    if (!a.is_square())
        throw Error(Errc::non_square, "vectorization needs a square matrix");
    const std::size_t n = a.rows();
    ExactMatrix v(n * n, 1, a.field());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            v.at(i * n + j, 0) = a.at(i, j);
    return v;
}

ExactMatrix unvec(const ExactMatrix& v, std::size_t m, Field f) {
    if (v.rows() != m * m || v.cols() != 1)
        throw Error(Errc::size_mismatch, "unvec needs an m^2 x 1 column");
    ExactMatrix a(m, m, f);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            a.at(i, j) = v.at(i * m + j, 0);
    return a;
}

MatLinearMap MatLinearMap::from_images(std::size_t n, const std::vector<ExactMatrix>& images) {
    if (n == 0 || images.size() != n * n)
        throw Error(Errc::size_mismatch, "need exactly n^2 basis images");
    const std::size_t m = images.front().rows();
    const Field f = images.front().field();
    ExactMatrix coeffs(m * m, n * n, f);
    for (std::size_t c = 0; c < n * n; ++c) {
        const ExactMatrix& img = images[c];
        if (!img.is_square() || img.rows() != m)
            throw Error(Errc::size_mismatch, "basis images must share one square size");
        if (img.field() != f)
            throw Error(Errc::field_mismatch, "basis images must share one field");
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                coeffs.at(i * m + j, c) = img.at(i, j);
    }
    return MatLinearMap(n, m, std::move(coeffs));
}

MatLinearMap MatLinearMap::from_coeffs(std::size_t n, std::size_t m, ExactMatrix coeffs) {
    if (n == 0 || m == 0 || coeffs.rows() != m * m || coeffs.cols() != n * n)
        throw Error(Errc::size_mismatch, "coefficient matrix must be m^2 x n^2");
    return MatLinearMap(n, m, std::move(coeffs));
}

ExactMatrix apply(const MatLinearMap& map, const ExactMatrix& a) {
    if (!a.is_square() || a.rows() != map.src())
        throw Error(Errc::size_mismatch, "argument size does not match the map source");
    if (a.field() != map.field())
        throw Error(Errc::field_mismatch, "argument field does not match the map");
    return unvec(map.coeffs() * vec(a), map.dst(), map.field());
}

std::vector<ExactMatrix> basis_images(const MatLinearMap& map) {
    const std::size_t n = map.src(), m = map.dst();
    std::vector<ExactMatrix> images;
    images.reserve(n * n);
    for (std::size_t c = 0; c < n * n; ++c) {
        ExactMatrix img(m, m, map.field());
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                img.at(i, j) = map.coeffs().at(i * m + j, c);
        images.push_back(std::move(img));
    }
    return images;
}

MatLinearMap identity_map(std::size_t n, Field f) {
    return MatLinearMap::from_coeffs(n, n, ExactMatrix::identity(n * n, f));
}

MatLinearMap embed_canonical(std::size_t n, unsigned long k, Field f) {
    if (n == 0 || k == 0)
        throw Error(Errc::bad_parameters, "embedding needs n >= 1 and k >= 1");
    ExactMatrix ik = ExactMatrix::identity(static_cast<std::size_t>(k), f);
    std::vector<ExactMatrix> images;
    images.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            images.push_back(ExactMatrix::basis(n, i, j, f).kron(ik));
    return MatLinearMap::from_images(n, images);
}

MatLinearMap transpose_map(std::size_t n, Field f) {
    std::vector<ExactMatrix> images;
    images.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            images.push_back(ExactMatrix::basis(n, j, i, f));
    return MatLinearMap::from_images(n, images);
}

MatLinearMap conjugation_map(const ExactMatrix& u) {
    if (!u.is_square())
        throw Error(Errc::non_square, "conjugator must be square");
    if (det_exact(u).is_zero())
        throw Error(Errc::singular_conjugator, "conjugator is not invertible");
    ExactMatrix uinv = invert(u);
    const std::size_t n = u.rows();
    std::vector<ExactMatrix> images;
    images.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            images.push_back(u * ExactMatrix::basis(n, i, j, u.field()) * uinv);
    return MatLinearMap::from_images(n, images);
}

MatLinearMap two_sided_map(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.cols() != y.rows() || x.rows() != y.cols())
        throw Error(Errc::size_mismatch, "factors must be m x n and n x m");
    const std::size_t n = x.cols();
    std::vector<ExactMatrix> images;
    images.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            images.push_back(x * ExactMatrix::basis(n, i, j, x.field()) * y);
    return MatLinearMap::from_images(n, images);
}

MatLinearMap compose(const MatLinearMap& g, const MatLinearMap& f) {
    if (f.dst() != g.src())
        throw Error(Errc::size_mismatch, "inner sizes do not match for composition");
    return MatLinearMap::from_coeffs(f.src(), g.dst(), g.coeffs() * f.coeffs());
}

MatLinearMap scale_map(const Scalar& c, const MatLinearMap& map) {
    return MatLinearMap::from_coeffs(map.src(), map.dst(), map.coeffs().scaled(c));
}

MatLinearMap direct_sum(const MatLinearMap& f, const MatLinearMap& g) {
    if (f.src() != g.src())
        throw Error(Errc::size_mismatch, "direct sum needs a common source size");
    std::vector<ExactMatrix> fi = basis_images(f);
    std::vector<ExactMatrix> gi = basis_images(g);
    std::vector<ExactMatrix> images;
    images.reserve(fi.size());
    for (std::size_t c = 0; c < fi.size(); ++c)
        images.push_back(ExactMatrix::block_diag({fi[c], gi[c]}));
    return MatLinearMap::from_images(f.src(), images);
}

} // namespace lomat
