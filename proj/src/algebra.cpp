#include "lomat/algebra.hpp"

#include "lomat/error.hpp"
#include "lomat/linalg.hpp"

namespace lomat {

void TowerDescriptor::validate() const {
    if (n1 < 1)
        throw Error(Errc::bad_parameters, "tower needs n1 >= 1");
    for (unsigned long m : prefix)
        if (m < 1)
            throw Error(Errc::bad_parameters, "tower multipliers must be >= 1");
    if (cycle.empty())
        throw Error(Errc::bad_parameters, "tower cycle must be nonempty");
    for (unsigned long m : cycle)
        if (m < 1)
            throw Error(Errc::bad_parameters, "tower multipliers must be >= 1");
}

unsigned long TowerDescriptor::multiplier(std::size_t i) const {
    if (i < 1)
        throw Error(Errc::bad_parameters, "stages are 1-based");
    std::size_t idx = i - 1;
    if (idx < prefix.size())
        return prefix[idx];
    return cycle[(idx - prefix.size()) % cycle.size()];
}

unsigned long TowerDescriptor::stage_size(std::size_t i) const {
    if (i < 1)
        throw Error(Errc::bad_parameters, "stages are 1-based");
    validate();
    unsigned long n = n1;
    for (std::size_t s = 1; s < i; ++s) {
        unsigned long m = multiplier(s);
        if (m != 0 && n > (1ul << 40) / m)
            throw Error(Errc::stage_too_large,
                        "stage " + std::to_string(i) + " exceeds the size guard");
        n *= m;
    }
    return n;
}

Element make_element(const TowerDescriptor& t, std::size_t stage, ExactMatrix mat) {
    t.validate();
    unsigned long n = t.stage_size(stage);
    if (!mat.is_square() || mat.rows() != n)
        throw Error(Errc::size_mismatch,
                    "matrix must be " + std::to_string(n) + "x" + std::to_string(n) +
                        " at stage " + std::to_string(stage));
    return Element{t, stage, std::move(mat)};
}

Element element_identity(const TowerDescriptor& t, std::size_t stage, Field f) {
    return make_element(t, stage, ExactMatrix::identity(t.stage_size(stage), f));
}

Element promote(const Element& a, std::size_t j) {
    if (j < a.stage)
        throw Error(Errc::stage_below_current,
                    "cannot move from stage " + std::to_string(a.stage) + " down to " +
                        std::to_string(j));
    if (j == a.stage)
        return a;
    unsigned long k = a.tower.stage_size(j) / a.tower.stage_size(a.stage);
    return Element{a.tower, j, a.mat.kron(ExactMatrix::identity(k, a.mat.field()))};
}

namespace {

std::pair<Element, Element> align(const Element& a, const Element& b) {
    if (!(a.tower == b.tower))
        throw Error(Errc::tower_mismatch, "elements live in different towers");
    std::size_t j = std::max(a.stage, b.stage);
    return {promote(a, j), promote(b, j)};
}

} // namespace

Element elem_add(const Element& a, const Element& b) {
    auto [x, y] = align(a, b);
    ExactMatrix m = x.mat;
    m += y.mat;
    return Element{x.tower, x.stage, std::move(m)};
}

Element elem_sub(const Element& a, const Element& b) {
    auto [x, y] = align(a, b);
    ExactMatrix m = x.mat;
    m -= y.mat;
    return Element{x.tower, x.stage, std::move(m)};
}

Element elem_mul(const Element& a, const Element& b) {
    auto [x, y] = align(a, b);
    return Element{x.tower, x.stage, x.mat * y.mat};
}

Element elem_scale(const Scalar& c, const Element& a) {
    return Element{a.tower, a.stage, a.mat.scaled(c)};
}

Element transpose_elem(const Element& a) {
    return Element{a.tower, a.stage, a.mat.transpose()};
}

bool elem_eq(const Element& a, const Element& b) {
    auto [x, y] = align(a, b);
    return x.mat == y.mat;
}

bool is_invertible(const Element& a) {
    return !det_exact(a.mat).is_zero();
}

} // namespace lomat
