#pragma once

#include <gmpxx.h>

#include <string>

#include "lomat/error.hpp"

namespace lomat {

enum class Field { Q, Qi };

inline const char* field_name(Field f) { return f == Field::Q ? "Q" : "Qi"; }

/*
 * Scalar: an element of Q or of the Gaussian rationals Q(i), backed by
 * reduced big-integer fractions. Values of distinct fields never mix:
 * arithmetic between a Q value and a Qi value throws field_mismatch, and
 * a Qi value with zero imaginary part is not equal to its Q counterpart.
 */
class Scalar {
public:
    Scalar() : field_(Field::Q) {}
    explicit Scalar(long v, Field f = Field::Q) : field_(f), re_(v) {}
    Scalar(mpq_class re, Field f) : field_(f), re_(std::move(re)) {}
    Scalar(mpq_class re, mpq_class im_part)
        : field_(Field::Qi), re_(std::move(re)), im_(std::move(im_part)) {}

    static Scalar zero(Field f) { return Scalar(0, f); }
    static Scalar one(Field f) { return Scalar(1, f); }
    // the imaginary unit; only meaningful in Qi
    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    Field field() const { return field_; }
    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    Scalar operator-() const;
    Scalar conj() const;

    // |z|^2 as a rational; for Q values this is just the square
    mpq_class abs_squared() const { return re_ * re_ + im_ * im_; }
    // |x| for Q values only
    mpq_class abs_q() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ && a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;

private:
    void require_same_field(const Scalar& o) const {
        if (field_ != o.field_)
            throw Error(Errc::field_mismatch, "scalar fields differ");
    }

    Field field_;
    mpq_class re_;
    mpq_class im_;
};

std::string rational_str(const mpq_class& q);
// parses "p/q" or "p" (big integers allowed); throws parse_error
mpq_class parse_rational(const std::string& s);

} // namespace lomat
