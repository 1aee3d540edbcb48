#include "lomat/rng.hpp"

#include "lomat/error.hpp"
#include "lomat/linalg.hpp"

namespace lomat {

long Rng::int_in(long lo, long hi) {
    if (hi < lo)
        throw Error(Errc::bad_parameters, "empty integer range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

Scalar Rng::rational(Field f, long mag) {
    mpq_class re(int_in(-mag, mag), int_in(1, mag));
    re.canonicalize();
    if (f == Field::Q)
        return Scalar(re, Field::Q);
    mpq_class im(int_in(-mag, mag), int_in(1, mag));
    im.canonicalize();
    return Scalar(re, im);
}

Scalar Rng::nonzero_rational(Field f, long mag) {
    for (;;) {
        Scalar s = rational(f, mag);
        if (!s.is_zero())
            return s;
    }
}

ExactMatrix Rng::matrix(std::size_t rows, std::size_t cols, Field f, long mag) {
    ExactMatrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = rational(f, mag);
    return m;
}

ExactMatrix Rng::unit_det(std::size_t n, Field f, long mag) {
    ExactMatrix l = ExactMatrix::identity(n, f);
    ExactMatrix u = ExactMatrix::identity(n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j)
                l.at(i, j) = rational(f, mag);
            else if (i < j)
                u.at(i, j) = rational(f, mag);
        }
    return l * u;
}

ExactMatrix Rng::invertible(std::size_t n, Field f, long mag) {
    ExactMatrix m = unit_det(n, f, mag);
    for (std::size_t i = 0; i < n; ++i) {
        Scalar d = nonzero_rational(f, mag);
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = d * m.at(i, j);
    }
    return m;
}

ExactMatrix Rng::of_rank(std::size_t n, std::size_t r, Field f, long mag) {
    if (r > n)
        throw Error(Errc::bad_parameters, "rank exceeds size");
    std::vector<Scalar> d(n, Scalar::zero(f));
    for (std::size_t i = 0; i < r; ++i)
        d[i] = Scalar::one(f);
    return invertible(n, f, mag) * ExactMatrix::diag(d, f) * invertible(n, f, mag);
}

ExactMatrix Rng::idempotent(std::size_t n, std::size_t r, Field f, long mag) {
    if (r > n)
        throw Error(Errc::bad_parameters, "rank exceeds size");
    std::vector<Scalar> d(n, Scalar::zero(f));
    for (std::size_t i = 0; i < r; ++i)
        d[i] = Scalar::one(f);
    ExactMatrix s = invertible(n, f, mag);
    return s * ExactMatrix::diag(d, f) * invert(s);
}

} // namespace lomat
