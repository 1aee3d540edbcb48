#pragma once

#include <vector>

#include "lomat/scalar.hpp"

namespace lomat {

// Univariate polynomial over the scalar field. Coefficients are stored in
// ascending degree order with trailing zeros stripped; the zero polynomial
// has an empty coefficient list and degree() == -1.
class Poly {
public:
    explicit Poly(Field f = Field::Q) : field_(f) {}
    Poly(std::vector<Scalar> coeffs, Field f) : field_(f), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const Scalar& c) { return Poly({c}, c.field()); }
    // c0 + c1*t
    static Poly linear(const Scalar& c0, const Scalar& c1) {
        return Poly({c0, c1}, c0.field());
    }

    Field field() const { return field_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(std::size_t k) const {
        return k < c_.size() ? c_[k] : Scalar::zero(field_);
    }
    const Scalar& leading() const;

    Scalar eval(const Scalar& x) const;
    Poly pow(unsigned long e) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // quotient of an exact division; throws if the division leaves a remainder
    static Poly divexact(const Poly& a, const Poly& b);

    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    Field field_;
    std::vector<Scalar> c_;
};

} // namespace lomat
