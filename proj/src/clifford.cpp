#include "lomat/clifford.hpp"

#include "lomat/error.hpp"
#include "lomat/linalg.hpp"

namespace lomat {

namespace {

ExactMatrix pauli_x() {
    return ExactMatrix::from_ints({{0, 1}, {1, 0}}, Field::Qi);
}

ExactMatrix pauli_y() {
    ExactMatrix y(2, 2, Field::Qi);
    y.at(0, 1) = -Scalar::i();
    y.at(1, 0) = Scalar::i();
    return y;
}

ExactMatrix pauli_z() {
    return ExactMatrix::from_ints({{1, 0}, {0, -1}}, Field::Qi);
}

ExactMatrix jw_generator(std::size_t k, std::size_t j, const ExactMatrix& middle) {
    ExactMatrix g = ExactMatrix::identity(1, Field::Qi);
    for (std::size_t t = 1; t < j; ++t)
        g = g.kron(pauli_z());
    g = g.kron(middle);
    for (std::size_t t = j; t < k; ++t)
        g = g.kron(ExactMatrix::identity(2, Field::Qi));
    return g;
}

} // namespace

CliffordStage clifford_generators(std::size_t k, std::size_t k_max) {
    if (k < 1)
        throw Error(Errc::bad_parameters, "stage index must be >= 1");
    if (k > k_max)
        throw Error(Errc::stage_too_large,
                    "stage " + std::to_string(k) + " exceeds the limit " + std::to_string(k_max));
    CliffordStage stage;
    stage.k = k;
    stage.gammas.reserve(2 * k);
    for (std::size_t j = 1; j <= k; ++j) {
        stage.gammas.push_back(jw_generator(k, j, pauli_x()));
        stage.gammas.push_back(jw_generator(k, j, pauli_y()));
    }
    return stage;
}

std::size_t generated_dimension(const CliffordStage& stage) {
    const std::size_t g = stage.gammas.size();
    const std::size_t dim = stage.gammas.empty() ? 1 : stage.gammas.front().rows();
    RowReducer red(dim * dim, 0, Field::Qi);
    for (std::size_t mask = 0; mask < (std::size_t(1) << g); ++mask) {
        ExactMatrix prod = ExactMatrix::identity(dim, Field::Qi);
        for (std::size_t bit = 0; bit < g; ++bit)
            if (mask & (std::size_t(1) << bit))
                prod = prod * stage.gammas[bit];
        std::vector<Scalar> row;
        row.reserve(dim * dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                row.push_back(prod.at(i, j));
        red.insert(std::move(row));
    }
    return red.rank();
}

TowerDescriptor clifford_tower(std::size_t k_max) {
    if (k_max < 1)
        throw Error(Errc::bad_parameters, "k_max must be >= 1");
    TowerDescriptor d;
    d.n1 = 2;
    d.prefix = {};
    d.cycle = {2};
    return d;
}

} // namespace lomat
