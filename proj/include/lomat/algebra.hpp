#pragma once

#include "lomat/matrix.hpp"
#include "lomat/tower.hpp"

namespace lomat {

/*
 * Element of the limit algebra of an embedding tower: a square matrix sitting
 * at a finite stage. Elements at different stages compare equal when their
 * promotions to the common larger stage agree entrywise; the canonical
 * embedding from stage i to stage j is a |-> a (x) I_k with k = n_j / n_i.
 */
struct Element {
    TowerDescriptor tower;
    std::size_t stage = 1;
    ExactMatrix mat;
};

// validates the tower and that mat is square of exactly the stage size
Element make_element(const TowerDescriptor& t, std::size_t stage, ExactMatrix mat);
Element element_identity(const TowerDescriptor& t, std::size_t stage, Field f);

// canonical embedding to stage j >= a.stage; throws stage_below_current
Element promote(const Element& a, std::size_t j);

// arithmetic after promotion to the larger of the two stages; throws
// tower_mismatch when the operands live in different towers
Element elem_add(const Element& a, const Element& b);
Element elem_sub(const Element& a, const Element& b);
Element elem_mul(const Element& a, const Element& b);
Element elem_scale(const Scalar& c, const Element& a);

// transpose at the element's own stage (compatible with promotion)
Element transpose_elem(const Element& a);

bool elem_eq(const Element& a, const Element& b);
bool is_invertible(const Element& a);

} // namespace lomat
