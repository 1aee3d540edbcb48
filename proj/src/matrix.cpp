#include "lomat/matrix.hpp"

#include <sstream>

namespace lomat {

ExactMatrix ExactMatrix::identity(std::size_t n, Field f) {
    ExactMatrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Scalar::one(f);
    return m;
}

ExactMatrix ExactMatrix::basis(std::size_t n, std::size_t i, std::size_t j, Field f) {
    ExactMatrix m(n, n, f);
    m.at(i, j) = Scalar::one(f);
    return m;
}

ExactMatrix ExactMatrix::diag(const std::vector<Scalar>& d, Field f) {
    ExactMatrix m(d.size(), d.size(), f);
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i].field() != f)
            throw Error(Errc::field_mismatch, "diag entry field differs");
        m.at(i, i) = d[i];
    }
    return m;
}

ExactMatrix ExactMatrix::from_ints(std::initializer_list<std::initializer_list<long>> rows,
                                   Field f) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    ExactMatrix m(r, c, f);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw Error(Errc::size_mismatch, "ragged row list");
        std::size_t j = 0;
        for (long v : row)
            m.at(i, j++) = Scalar(v, f);
        ++i;
    }
    return m;
}

ExactMatrix ExactMatrix::block_diag(const std::vector<ExactMatrix>& blocks) {
    if (blocks.empty())
        throw Error(Errc::bad_parameters, "block_diag of nothing");
    Field f = blocks[0].field();
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        if (b.field() != f)
            throw Error(Errc::field_mismatch, "block fields differ");
        r += b.rows();
        c += b.cols();
    }
    ExactMatrix m(r, c, f);
    std::size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                m.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& s : e_)
        if (!s.is_zero())
            return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& o) const {
    if (field_ != o.field_)
        throw Error(Errc::field_mismatch, "kron operand fields differ");
    ExactMatrix m(rows_ * o.rows_, cols_ * o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& s = at(i, j);
            if (s.is_zero())
                continue;
            for (std::size_t u = 0; u < o.rows_; ++u)
                for (std::size_t v = 0; v < o.cols_; ++v)
                    m.at(i * o.rows_ + u, j * o.cols_ + v) = s * o.at(u, v);
        }
    return m;
}

ExactMatrix ExactMatrix::scaled(const Scalar& c) const {
    if (c.field() != field_)
        throw Error(Errc::field_mismatch, "scale factor field differs");
    ExactMatrix m(*this);
    for (auto& s : m.e_)
        s *= c;
    return m;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
    if (field_ != o.field_)
        throw Error(Errc::field_mismatch, "matrix fields differ");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(Errc::size_mismatch, "matrix sizes differ");
    for (std::size_t k = 0; k < e_.size(); ++k)
        e_[k] += o.e_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
    if (field_ != o.field_)
        throw Error(Errc::field_mismatch, "matrix fields differ");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(Errc::size_mismatch, "matrix sizes differ");
    for (std::size_t k = 0; k < e_.size(); ++k)
        e_[k] -= o.e_[k];
    return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.field_ != b.field_)
        throw Error(Errc::field_mismatch, "matrix fields differ");
    if (a.cols_ != b.rows_)
        throw Error(Errc::size_mismatch, "inner dimensions differ");
    ExactMatrix m(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& s = a.at(i, k);
            if (s.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& t = b.at(k, j);
                if (!t.is_zero())
                    m.at(i, j) += s * t;
            }
        }
    return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

} // namespace lomat
