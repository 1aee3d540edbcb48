#pragma once

#include <stdexcept>
#include <string>

namespace lomat {

enum class Errc {
    parse_error,
    field_mismatch,
    size_mismatch,
    non_square,
    singular_matrix,
    bad_parameters,
    not_divisible,
    tower_mismatch,
    stage_below_current,
    stage_too_large,
    not_unital,
    not_jordan,
    ambiguous_split,
    no_idempotent_solution,
    no_invertible_solution,
    singular_conjugator,
    singular_unit_image,
    not_jordan_after_normalization,
    mixed_kind_on_bijection,
};

const char* errc_name(Errc c);

struct Error : std::runtime_error {
    Errc code;
    Error(Errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

} // namespace lomat
