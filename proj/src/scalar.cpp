#include "lomat/scalar.hpp"

namespace lomat {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::parse_error: return "ParseError";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::non_square: return "NonSquare";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::not_divisible: return "NotDivisible";
    case Errc::tower_mismatch: return "TowerMismatch";
    case Errc::stage_below_current: return "StageBelowCurrent";
    case Errc::stage_too_large: return "StageTooLarge";
    case Errc::not_unital: return "NotUnital";
    case Errc::not_jordan: return "NotJordan";
    case Errc::ambiguous_split: return "AmbiguousSplit";
    case Errc::no_idempotent_solution: return "NoIdempotentSolution";
    case Errc::no_invertible_solution: return "NoInvertibleSolution";
    case Errc::singular_conjugator: return "SingularConjugator";
    case Errc::singular_unit_image: return "SingularUnitImage";
    case Errc::not_jordan_after_normalization: return "NotJordanAfterNormalization";
    case Errc::mixed_kind_on_bijection: return "MixedKindOnBijection";
    }
    return "Error";
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.re_ = -r.re_;
    r.im_ = -r.im_;
    return r;
}

Scalar Scalar::conj() const {
    Scalar r(*this);
    r.im_ = -r.im_;
    return r;
}

mpq_class Scalar::abs_q() const {
    if (field_ != Field::Q)
        throw Error(Errc::field_mismatch, "abs_q is defined on Q only");
    return re_ < 0 ? mpq_class(-re_) : re_;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_field(o);
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same_field(o);
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_field(o);
    if (field_ == Field::Q) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same_field(o);
    if (o.is_zero())
        throw Error(Errc::bad_parameters, "division by zero scalar");
    if (field_ == Field::Q) {
        re_ /= o.re_;
        return *this;
    }
    mpq_class n = o.abs_squared();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::string Scalar::str() const {
    if (field_ == Field::Q)
        return rational_str(re_);
    std::string s = rational_str(re_);
    s += (im_ < 0) ? "-" : "+";
    mpq_class a = im_ < 0 ? mpq_class(-im_) : im_;
    s += rational_str(a);
    s += "i";
    return s;
}

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(const std::string& s) {
    if (s.empty())
        throw Error(Errc::parse_error, "empty rational literal");
    // validate shape before handing to GMP: optional '-', digits, optional /digits
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t k = (t[0] == '-') ? 1 : 0;
        if (k == t.size()) return false;
        for (; k < t.size(); ++k)
            if (t[k] < '0' || t[k] > '9') return false;
        return true;
    };
    std::size_t slash = s.find('/');
    bool ok;
    if (slash == std::string::npos) {
        ok = digits(s);
    } else {
        std::string den = s.substr(slash + 1);
        ok = digits(s.substr(0, slash)) && digits(den) && den != "0" && den[0] != '-';
    }
    if (!ok)
        throw Error(Errc::parse_error, "bad rational literal '" + s + "'");
    mpq_class q(s);
    q.canonicalize();
    return q;
}

} // namespace lomat
