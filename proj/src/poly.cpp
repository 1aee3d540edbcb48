#include "lomat/poly.hpp"

#include <sstream>

namespace lomat {

const Scalar& Poly::leading() const {
    if (c_.empty())
        throw Error(Errc::bad_parameters, "zero polynomial has no leading coefficient");
    return c_.back();
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t k = c_.size(); k-- > 0;)
        acc = acc * x + c_[k];
    return acc;
}

Poly Poly::pow(unsigned long e) const {
    Poly r = Poly::constant(Scalar::one(field_));
    Poly base = *this;
    while (e) {
        if (e & 1)
            r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (field_ != o.field_)
        throw Error(Errc::field_mismatch, "polynomial fields differ");
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), Scalar::zero(field_));
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (field_ != o.field_)
        throw Error(Errc::field_mismatch, "polynomial fields differ");
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), Scalar::zero(field_));
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.field_ != b.field_)
        throw Error(Errc::field_mismatch, "polynomial fields differ");
    if (a.is_zero() || b.is_zero())
        return Poly(a.field_);
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.field_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero())
                c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c), a.field_);
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
    if (a.field_ != b.field_)
        throw Error(Errc::field_mismatch, "polynomial fields differ");
    if (b.is_zero())
        throw Error(Errc::bad_parameters, "polynomial division by zero");
    if (a.is_zero())
        return Poly(a.field_);
    if (a.degree() < b.degree())
        throw Error(Errc::bad_parameters, "inexact polynomial division");
    std::vector<Scalar> rem = a.c_;
    std::vector<Scalar> quo(a.c_.size() - b.c_.size() + 1, Scalar::zero(a.field_));
    const Scalar& lead = b.c_.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
        Scalar q = rem[k + b.c_.size() - 1] / lead;
        quo[k] = q;
        if (q.is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            rem[k + j] -= q * b.c_[j];
    }
    for (const auto& s : rem)
        if (!s.is_zero())
            throw Error(Errc::bad_parameters, "inexact polynomial division");
    return Poly(std::move(quo), a.field_);
}

std::string Poly::str() const {
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c_[k].str() << ")";
        if (k == 1)
            os << "*t";
        else if (k > 1)
            os << "*t^" << k;
    }
    return os.str();
}

} // namespace lomat
