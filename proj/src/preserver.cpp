#include "lomat/preserver.hpp"

#include "lomat/invariants.hpp"
#include "lomat/linalg.hpp"
#include "lomat/rng.hpp"
#include "lomat/steinitz.hpp"

namespace lomat {

const char* verdict_name(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::certified:
        return "Certified";
    case VerdictStatus::passed_samples:
        return "PassedSamples";
    case VerdictStatus::certified_fail:
        return "CertifiedFail";
    }
    return "?";
}

const char* map_kind_name(MapKind k) {
    switch (k) {
    case MapKind::hom:
        return "hom";
    case MapKind::antihom:
        return "antihom";
    case MapKind::mixed:
        return "mixed";
    }
    return "?";
}

namespace {

ExactMatrix rank_rep(std::size_t n, std::size_t r, Field f) {
    ExactMatrix d(n, n, f);
    for (std::size_t i = 0; i < r; ++i)
        d.at(i, i) = Scalar::one(f);
    return d;
}

} // namespace

std::vector<ExactMatrix> rank_corpus(std::size_t n, Field f, const CorpusSpec& spec) {
    std::vector<ExactMatrix> out;
    out.reserve(n * n + n + 1 + spec.random_count);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.push_back(ExactMatrix::basis(n, i, j, f));
    for (std::size_t r = 0; r <= n; ++r)
        out.push_back(rank_rep(n, r, f));
    Rng rng(spec.seed);
    for (std::size_t s = 0; s < spec.random_count; ++s) {
        std::size_t r = static_cast<std::size_t>(rng.int_in(0, static_cast<long>(n)));
        out.push_back(rng.of_rank(n, r, f));
    }
    return out;
}

std::vector<ExactMatrix> idempotent_corpus(std::size_t n, Field f, const CorpusSpec& spec) {
    std::vector<ExactMatrix> out;
    out.reserve(n + 1 + spec.random_count);
    for (std::size_t r = 0; r <= n; ++r)
        out.push_back(rank_rep(n, r, f));
    Rng rng(spec.seed);
    for (std::size_t s = 0; s < spec.random_count; ++s) {
        std::size_t r = static_cast<std::size_t>(rng.int_in(0, static_cast<long>(n)));
        out.push_back(rng.idempotent(n, r, f));
    }
    return out;
}

PreservationVerdict preserves_normalized_rank(const MatLinearMap& map, const CorpusSpec& spec) {
    const std::size_t n = map.src(), m = map.dst();
    PreservationVerdict v;
    for (const ExactMatrix& a : rank_corpus(n, map.field(), spec)) {
        if (m * rank_exact(a) != n * rank_exact(apply(map, a))) {
            v.status = VerdictStatus::certified_fail;
            v.witness = a;
            return v;
        }
        ++v.samples;
    }
    v.status = VerdictStatus::passed_samples;
    return v;
}

PreservationVerdict preserves_normalized_det(const MatLinearMap& map, const CorpusSpec& spec) {
    const std::size_t n = map.src(), m = map.dst();
    PreservationVerdict v;
    for (const ExactMatrix& a : rank_corpus(n, map.field(), spec)) {
        // |det a|^m = |det phi(a)|^n, compared through squared magnitudes
        mpq_class lhs = mpq_pow_ui(det_exact(a).abs_squared(), m);
        mpq_class rhs = mpq_pow_ui(det_exact(apply(map, a)).abs_squared(), n);
        if (lhs != rhs) {
            v.status = VerdictStatus::certified_fail;
            v.witness = a;
            return v;
        }
        ++v.samples;
    }
    v.status = VerdictStatus::passed_samples;
    return v;
}

PreservationVerdict jordan_check(const MatLinearMap& map) {
    const std::size_t n = map.src(), m = map.dst();
    const Field f = map.field();
    std::vector<ExactMatrix> img = basis_images(map);
    PreservationVerdict v;
    // the defect phi(xy + yx) - phi(x)phi(y) - phi(y)phi(x) is bilinear and
    // symmetric, so vanishing on unordered basis pairs certifies all inputs
    for (std::size_t c1 = 0; c1 < n * n; ++c1) {
        for (std::size_t c2 = c1; c2 < n * n; ++c2) {
            const std::size_t i = c1 / n, j = c1 % n, k = c2 / n, l = c2 % n;
            ExactMatrix lhs(m, m, f);
            if (j == k)
                lhs += img[i * n + l];
            if (l == i)
                lhs += img[k * n + j];
            ExactMatrix rhs = img[c1] * img[c2];
            rhs += img[c2] * img[c1];
            if (lhs != rhs) {
                v.status = VerdictStatus::certified_fail;
                v.witness = ExactMatrix::basis(n, i, j, f);
                v.witness_second = ExactMatrix::basis(n, k, l, f);
                return v;
            }
            ++v.samples;
        }
    }
    v.status = VerdictStatus::certified;
    return v;
}

PreservationVerdict maps_idempotents_to_idempotents(const MatLinearMap& map,
                                                    const CorpusSpec& spec) {
    PreservationVerdict v;
    for (const ExactMatrix& e : idempotent_corpus(map.src(), map.field(), spec)) {
        ExactMatrix fe = apply(map, e);
        if (fe * fe != fe) {
            v.status = VerdictStatus::certified_fail;
            v.witness = e;
            return v;
        }
        ++v.samples;
    }
    v.status = VerdictStatus::passed_samples;
    return v;
}

namespace {

std::vector<Scalar> matrix_row(const ExactMatrix& m) {
    std::vector<Scalar> row;
    row.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.at(i, j));
    return row;
}

ExactMatrix from_vec(const std::vector<Scalar>& v, std::size_t m, Field f) {
    ExactMatrix a(m, m, f);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            a.at(i, j) = v[i * m + j];
    return a;
}

} // namespace

DecompositionWitness jr_decompose(const MatLinearMap& map) {
    const std::size_t n = map.src(), m = map.dst();
    const Field f = map.field();
    if (apply(map, ExactMatrix::identity(n, f)) != ExactMatrix::identity(m, f))
        throw Error(Errc::not_unital, "map does not send identity to identity");
    if (jordan_check(map).status != VerdictStatus::certified)
        throw Error(Errc::not_jordan, "map is not a Jordan homomorphism");

    std::vector<ExactMatrix> img = basis_images(map);
    const std::size_t nn = n * n;

    // multiplicativity defects of every ordered basis pair, in pair order
    std::vector<ExactMatrix> dh, da;
    dh.reserve(nn * nn);
    da.reserve(nn * nn);
    for (std::size_t c1 = 0; c1 < nn; ++c1)
        for (std::size_t c2 = 0; c2 < nn; ++c2) {
            const std::size_t i = c1 / n, j = c1 % n, k = c2 / n, l = c2 % n;
            ExactMatrix prod_img(m, m, f);  // phi(e_ij * e_kl)
            if (j == k)
                prod_img += img[i * n + l];
            ExactMatrix h = prod_img;
            h -= img[c1] * img[c2];
            ExactMatrix a = std::move(prod_img);
            a -= img[c2] * img[c1];
            dh.push_back(std::move(h));
            da.push_back(std::move(a));
        }

    // reduce each defect family to a span basis so the equation count below
    // stays O(m^2) instead of O(n^4)
    auto span_basis = [&](const std::vector<ExactMatrix>& ds) {
        RowReducer red(m * m, 0, f);
        std::vector<const ExactMatrix*> basis;
        for (const ExactMatrix& d : ds)
            if (!d.is_zero() && red.insert(matrix_row(d)))
                basis.push_back(&d);
        return basis;
    };
    std::vector<const ExactMatrix*> hom_basis = span_basis(dh);
    std::vector<const ExactMatrix*> anti_basis = span_basis(da);

    // unknown splitting idempotent E, vectorized row-major into m^2 columns
    RowReducer sys(m * m, 1, f);
    const Scalar zero = Scalar::zero(f);
    // E commutes with phi(e_ij)
    for (const ExactMatrix& a : img)
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t s = 0; s < m; ++s) {
                std::vector<Scalar> row(m * m + 1, zero);
                for (std::size_t t = 0; t < m; ++t) {
                    row[r * m + t] += a.at(t, s);
                    row[t * m + s] -= a.at(r, t);
                }
                sys.insert(std::move(row));
            }
    // E annihilates hom defects; E fixes antihom defects from the left
    auto add_left_mult = [&](const ExactMatrix& d, bool fix) {
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t s = 0; s < m; ++s) {
                std::vector<Scalar> row(m * m + 1, zero);
                for (std::size_t t = 0; t < m; ++t)
                    row[r * m + t] += d.at(t, s);
                if (fix)
                    row[m * m] = d.at(r, s);
                sys.insert(std::move(row));
            }
    };
    for (const ExactMatrix* d : hom_basis)
        add_left_mult(*d, false);
    for (const ExactMatrix* d : anti_basis)
        add_left_mult(*d, true);

    if (sys.inconsistent())
        throw Error(Errc::no_idempotent_solution, "splitting system has no solution");
    std::vector<std::vector<Scalar>> ns = sys.nullspace();
    if (!ns.empty()) {
        std::vector<ExactMatrix> dirs;
        dirs.reserve(ns.size());
        for (const auto& v : ns)
            dirs.push_back(from_vec(v, m, f));
        throw AmbiguousSplitError(from_vec(sys.particular(), m, f), std::move(dirs));
    }
    ExactMatrix e = from_vec(sys.particular(), m, f);
    if (e * e != e)
        throw Error(Errc::no_idempotent_solution, "unique solution is not idempotent");
    ExactMatrix e2 = ExactMatrix::identity(m, f);
    e2 -= e;

    // independent re-verification on every pair, not just the span basis
    for (std::size_t c = 0; c < nn * nn; ++c) {
        if (!(e * dh[c]).is_zero())
            throw Error(Errc::no_idempotent_solution, "e1 does not annihilate a hom defect");
        if (!(e2 * da[c]).is_zero())
            throw Error(Errc::no_idempotent_solution, "e2 does not annihilate an antihom defect");
    }
    for (const ExactMatrix& a : img)
        if (e * a != a * e)
            throw Error(Errc::no_idempotent_solution, "e1 does not commute with the image");

    DecompositionWitness w;
    w.e1 = std::move(e);
    w.e2 = std::move(e2);
    w.kind = w.e2.is_zero()  ? MapKind::hom
             : w.e1.is_zero() ? MapKind::antihom
                              : MapKind::mixed;
    for (std::size_t c = 0; c < nn * nn; ++c) {
        if (!w.hom_fail && !dh[c].is_zero())
            w.hom_fail = std::make_pair(ExactMatrix::basis(n, (c / nn) / n, (c / nn) % n, f),
                                        ExactMatrix::basis(n, (c % nn) / n, (c % nn) % n, f));
        if (!w.antihom_fail && !da[c].is_zero())
            w.antihom_fail = std::make_pair(ExactMatrix::basis(n, (c / nn) / n, (c / nn) % n, f),
                                            ExactMatrix::basis(n, (c % nn) / n, (c % nn) % n, f));
        if (w.hom_fail && w.antihom_fail)
            break;
    }
    return w;
}

ExactMatrix recover_inner(const MatLinearMap& map, MapKind kind) {
    const std::size_t n = map.src();
    const Field f = map.field();
    if (map.dst() != n)
        throw Error(Errc::size_mismatch, "conjugator recovery needs equal source and target");
    if (kind == MapKind::mixed)
        throw Error(Errc::bad_parameters, "conjugator recovery needs a pure kind");
    std::vector<ExactMatrix> img = basis_images(map);
    RowReducer red(n * n, 0, f);
    const Scalar zero = Scalar::zero(f);
    for (std::size_t c = 0; c < n * n; ++c) {
        const std::size_t i = c / n, j = c % n;
        const ExactMatrix& a = img[c];
        ExactMatrix b = kind == MapKind::hom ? ExactMatrix::basis(n, i, j, f)
                                             : ExactMatrix::basis(n, j, i, f);
        // a*u - u*b = 0, entry (r,s)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s) {
                std::vector<Scalar> row(n * n, zero);
                for (std::size_t t = 0; t < n; ++t) {
                    row[t * n + s] += a.at(r, t);
                    row[r * n + t] -= b.at(t, s);
                }
                red.insert(std::move(row));
            }
    }
    std::vector<std::vector<Scalar>> ns = red.nullspace();
    if (ns.empty())
        throw Error(Errc::no_invertible_solution, "intertwiner system has only the zero solution");
    ExactMatrix u = from_vec(ns.front(), n, f);
    // gauge: first nonzero entry scaled to 1
    Scalar pivot = zero;
    for (std::size_t i = 0; i < n && pivot.is_zero(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!u.at(i, j).is_zero()) {
                pivot = u.at(i, j);
                break;
            }
    u = u.scaled(Scalar::one(f) / pivot);
    if (det_exact(u).is_zero())
        throw Error(Errc::no_invertible_solution, "intertwiner is singular");
    return u;
}

DecompositionWitness frobenius_form(const MatLinearMap& map, FrobeniusMode mode) {
    const std::size_t n = map.src();
    const Field f = map.field();
    if (map.dst() != n)
        throw Error(Errc::size_mismatch, "form recovery needs equal source and target");
    ExactMatrix c = apply(map, ExactMatrix::identity(n, f));
    if (det_exact(c).is_zero())
        throw Error(Errc::singular_unit_image, "image of the identity is singular");
    ExactMatrix cinv = invert(c);
    std::vector<ExactMatrix> img = basis_images(map);
    std::vector<ExactMatrix> psi_img;
    psi_img.reserve(img.size());
    for (const ExactMatrix& a : img)
        psi_img.push_back(cinv * a);
    MatLinearMap psi = MatLinearMap::from_images(n, psi_img);
    if (jordan_check(psi).status != VerdictStatus::certified)
        throw Error(Errc::not_jordan_after_normalization,
                    "normalized map is not a Jordan homomorphism");
    DecompositionWitness w = jr_decompose(psi);
    if (w.kind == MapKind::mixed)
        throw Error(Errc::mixed_kind_on_bijection,
                    "bijective preserver decomposed with a mixed kind");
    ExactMatrix u = recover_inner(psi, w.kind);
    ExactMatrix x = c * u;
    ExactMatrix y = invert(u);
    for (std::size_t cidx = 0; cidx < n * n; ++cidx) {
        const std::size_t i = cidx / n, j = cidx % n;
        ExactMatrix base = w.kind == MapKind::hom ? ExactMatrix::basis(n, i, j, f)
                                                  : ExactMatrix::basis(n, j, i, f);
        if (img[cidx] != x * base * y)
            throw Error(Errc::no_invertible_solution,
                        "recovered factors do not reproduce the map");
    }
    if (mode == FrobeniusMode::det &&
        !radical_eq(normalized_det_matrix(x * y), RadicalValue{mpq_class(1), 1}))
        throw Error(Errc::bad_parameters, "normalized determinant of x*y is not 1");
    w.u = std::move(u);
    w.x = std::move(x);
    w.y = std::move(y);
    return w;
}

CounterexampleResult counterexample_map(unsigned long p, std::size_t n, Field f) {
    if (p < 2 || !is_prime(p))
        throw Error(Errc::bad_parameters, "p must be a prime >= 2");
    if (n < 2)
        throw Error(Errc::bad_parameters, "n must be >= 2");
    std::vector<ExactMatrix> images;
    images.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<ExactMatrix> blocks(static_cast<std::size_t>(p - 1),
                                            ExactMatrix::basis(n, i, j, f));
            blocks.push_back(ExactMatrix::basis(n, j, i, f));
            images.push_back(ExactMatrix::block_diag(blocks));
        }
    MatLinearMap map = MatLinearMap::from_images(n, images);

    const std::size_t m = map.dst();
    if (apply(map, ExactMatrix::identity(n, f)) != ExactMatrix::identity(m, f))
        throw Error(Errc::bad_parameters, "internal: counterexample map is not unital");
    if (jordan_check(map).status != VerdictStatus::certified)
        throw Error(Errc::bad_parameters, "internal: counterexample map is not Jordan");

    ExactMatrix e12 = ExactMatrix::basis(n, 0, 1, f);
    ExactMatrix e21 = ExactMatrix::basis(n, 1, 0, f);
    ExactMatrix prod_img = apply(map, e12 * e21);
    if (prod_img == apply(map, e12) * apply(map, e21))
        throw Error(Errc::bad_parameters, "internal: hom defect vanished");
    if (prod_img == apply(map, e21) * apply(map, e12))
        throw Error(Errc::bad_parameters, "internal: antihom defect vanished");

    return CounterexampleResult{std::move(map), {e12, e21}, {e12, e21}};
}

} // namespace lomat
