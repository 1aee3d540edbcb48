// Acceptance gate: one line per criterion, [PASS]/[FAIL] plus elapsed time.
// Every check is exact; a criterion also fails when it misses its budget.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "lomat/clifford.hpp"
#include "lomat/invariants.hpp"
#include "lomat/linalg.hpp"
#include "lomat/preserver.hpp"
#include "lomat/rng.hpp"
#include "lomat/steinitz.hpp"

using namespace lomat;

namespace {

struct Gate {
    int failures = 0;

    void run(int idx, const char* label, double budget_s, bool (*body)(std::string&)) {
        std::string detail;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                        .count();
        if (dt >= budget_s) {
            ok = false;
            detail += detail.empty() ? "" : "; ";
            detail += "over budget of " + std::to_string(budget_s) + " s";
        }
        std::printf("[%s] %d. %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", idx, label, dt,
                    detail.empty() ? "" : " - ", detail.c_str());
        std::fflush(stdout);
        if (!ok)
            ++failures;
    }
};

TowerDescriptor tower(unsigned long n1, std::vector<unsigned long> prefix,
                      std::vector<unsigned long> cycle) {
    TowerDescriptor d;
    d.n1 = n1;
    d.prefix = std::move(prefix);
    d.cycle = std::move(cycle);
    return d;
}

// --- 1. promotion invariance -------------------------------------------------

bool crit_promotion(std::string& detail) {
    Rng rng(101);
    // base sizes kept small-heavy; every jump factor appears and the largest
    // promoted stage reaches 48
    const std::size_t bases[] = {2, 3, 4, 5, 6, 8, 10, 12, 2, 3, 4, 6, 16, 2, 3, 4};
    const unsigned long jumps[] = {2, 3, 4};
    std::size_t checked = 0;
    for (std::size_t trial = 0; checked < 200; ++trial) {
        std::size_t n = bases[trial % (sizeof(bases) / sizeof(bases[0]))];
        unsigned long k = jumps[trial % 3];
        while (n * k > 48)
            n /= 2;
        Field f = trial % 4 == 3 ? Field::Qi : Field::Q;
        TowerDescriptor d = tower(n, {}, {k, 2});
        ExactMatrix m = trial % 2 == 0 ? rng.of_rank(n, rng.next() % (n + 1), f, 2)
                                       : rng.matrix(n, n, f, 3);
        Element a = make_element(d, 1, m);
        Element up = promote(a, 2);
        if (normalized_rank(a) != normalized_rank(up)) {
            detail = "rank changed at n=" + std::to_string(n);
            return false;
        }
        RadicalValue da = normalized_det(a), du = normalized_det(up);
        if (!(da == du) || !radical_eq(da, du)) {
            detail = "det changed at n=" + std::to_string(n);
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " elements";
    return true;
}

// --- 2. idempotents by rank --------------------------------------------------

bool crit_idempotent(std::string& detail) {
    Rng rng(202);
    std::size_t agree = 0;
    TowerDescriptor towers[5] = {tower(2, {}, {2}), tower(3, {}, {2}), tower(4, {}, {2}),
                                 tower(5, {}, {2}), tower(6, {}, {2})};
    for (std::size_t t = 0; t < 200; ++t) {
        std::size_t n = 2 + t % 5;
        ExactMatrix e = rng.idempotent(n, rng.next() % (n + 1), Field::Q, 2);
        Element a = make_element(towers[n - 2], 1, e);
        bool direct = e * e == e;
        if (!direct || is_idempotent_via_rank(a) != direct) {
            detail = "mismatch on an idempotent";
            return false;
        }
        ++agree;
    }
    for (std::size_t t = 0; t < 200; ++t) {
        std::size_t n = 2 + t % 5;
        ExactMatrix e = rng.idempotent(n, 1 + rng.next() % n, Field::Q, 2);
        // perturb one entry; retry until idempotency really breaks
        for (;;) {
            ExactMatrix cand = e;
            cand.at(rng.next() % n, rng.next() % n) += rng.nonzero_rational(Field::Q, 3);
            if (cand * cand != cand) {
                e = cand;
                break;
            }
        }
        Element a = make_element(towers[n - 2], 1, e);
        if (is_idempotent_via_rank(a)) {
            detail = "false positive on a perturbed matrix";
            return false;
        }
        ++agree;
    }
    detail = std::to_string(agree) + " agreements";
    return true;
}

// --- 3. degree oracle for rank -----------------------------------------------

bool crit_degree_rank(std::string& detail) {
    Rng rng(303);
    for (std::size_t t = 0; t < 200; ++t) {
        std::size_t n = 2 + t % 5;
        std::size_t r = t % (n + 1);
        ExactMatrix a = rng.of_rank(n, r, Field::Q, 2);
        std::size_t exact = rank_exact(a);
        DegreeRankResult wit = rank_by_degree_witness(a);
        if (!wit.certified || wit.value != exact) {
            detail = "witness disagreed with exact rank at n=" + std::to_string(n);
            return false;
        }
        DegreeRankResult rnd = rank_by_degree_random(a, 4, 900 + t);
        if (rnd.value > exact) {
            detail = "random strategy exceeded the exact rank";
            return false;
        }
    }
    detail = "200 matrices, ranks 0..6";
    return true;
}

// --- 4. determinant identity under embeddings --------------------------------

bool crit_poly_identity(std::string& detail) {
    Rng rng(404);
    std::size_t pairs = 0;
    for (std::size_t n = 2; n <= 4; ++n)
        for (unsigned long k = 2; k <= 3; ++k) {
            MatLinearMap emb = embed_canonical(n, k, Field::Q);
            for (int t = 0; t < 12; ++t, ++pairs)
                if (!poly_identity_check(emb, rng.matrix(n, n, Field::Q, 3),
                                         rng.matrix(n, n, Field::Q, 3))) {
                    detail = "embedding identity failed at n=" + std::to_string(n) +
                             ", k=" + std::to_string(k);
                    return false;
                }
        }
    for (std::size_t n = 2; n <= 4; ++n) {
        MatLinearMap tr = transpose_map(n, Field::Q);
        for (int t = 0; t < 10; ++t, ++pairs)
            if (!poly_identity_check(tr, rng.matrix(n, n, Field::Q, 3),
                                     rng.matrix(n, n, Field::Q, 3))) {
                detail = "transpose identity failed at n=" + std::to_string(n);
                return false;
            }
    }
    if (pairs < 100) {
        detail = "only " + std::to_string(pairs) + " pairs exercised";
        return false;
    }
    MatLinearMap twice = scale_map(Scalar(2), identity_map(3, Field::Q));
    PreservationVerdict v = preserves_normalized_det(twice, CorpusSpec{50, 404});
    if (v.status != VerdictStatus::certified_fail || !v.witness.has_value()) {
        detail = "scaling map escaped certification";
        return false;
    }
    detail = std::to_string(pairs) + " pairs plus the scaling counterexample";
    return true;
}

// --- 5. Frobenius round trip -------------------------------------------------

bool crit_frobenius(std::string& detail) {
    Rng rng(505);
    std::size_t trips = 0;
    for (std::size_t n = 2; n <= 4; ++n)
        for (int kind = 0; kind < 2; ++kind)
            for (int t = 0; t < 50; ++t, ++trips) {
                bool det_mode = t % 2 == 1;
                ExactMatrix x0 = det_mode ? rng.unit_det(n, Field::Q, 2)
                                          : rng.invertible(n, Field::Q, 2);
                ExactMatrix y0 = det_mode ? rng.unit_det(n, Field::Q, 2)
                                          : rng.invertible(n, Field::Q, 2);
                MatLinearMap phi = two_sided_map(x0, y0);
                if (kind == 1)
                    phi = compose(phi, transpose_map(n, Field::Q));
                DecompositionWitness w = frobenius_form(
                    phi, det_mode ? FrobeniusMode::det : FrobeniusMode::rank);
                if (w.kind != (kind == 0 ? MapKind::hom : MapKind::antihom)) {
                    detail = "kind misidentified at n=" + std::to_string(n);
                    return false;
                }
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        ExactMatrix b = ExactMatrix::basis(n, i, j, Field::Q);
                        ExactMatrix arg = kind == 0 ? b : b.transpose();
                        if (apply(phi, b) != *w.x * arg * *w.y) {
                            detail = "nonzero residual at n=" + std::to_string(n);
                            return false;
                        }
                    }
                if (det_mode &&
                    !radical_eq(normalized_det_matrix(*w.x * *w.y),
                                RadicalValue{mpq_class(1), 1})) {
                    detail = "det-mode factor product is not unimodular";
                    return false;
                }
            }
    detail = std::to_string(trips) + " round trips";
    return true;
}

// --- 6. mixed decomposition --------------------------------------------------

bool crit_mixed(std::string& detail) {
    std::size_t cases = 0;
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::size_t r = 0; r <= 4; ++r)
            for (std::size_t s = 0; r + s <= 4; ++s) {
                if (r + s < 1)
                    continue;
                MatLinearMap sum = r > 0 ? identity_map(n, Field::Q)
                                         : transpose_map(n, Field::Q);
                for (std::size_t c = 1; c < r; ++c)
                    sum = direct_sum(sum, identity_map(n, Field::Q));
                for (std::size_t c = r > 0 ? 0 : 1; c < s; ++c)
                    sum = direct_sum(sum, transpose_map(n, Field::Q));
                DecompositionWitness w = jr_decompose(sum);
                if (rank_exact(w.e1) != r * n || rank_exact(w.e2) != s * n) {
                    detail = "projection ranks wrong at n=" + std::to_string(n) +
                             ", r=" + std::to_string(r) + ", s=" + std::to_string(s);
                    return false;
                }
                // re-verify both parts on every ordered basis pair
                std::vector<ExactMatrix> img = basis_images(sum);
                const std::size_t nn = n * n;
                for (std::size_t c1 = 0; c1 < nn; ++c1)
                    for (std::size_t c2 = 0; c2 < nn; ++c2) {
                        ExactMatrix prod(sum.dst(), sum.dst(), Field::Q);
                        if (c1 % n == c2 / n)
                            prod += img[(c1 / n) * n + c2 % n];
                        if (w.e1 * prod != w.e1 * img[c1] * img[c2] ||
                            w.e2 * prod != w.e2 * img[c2] * img[c1]) {
                            detail = "part verification failed";
                            return false;
                        }
                    }
                ++cases;
            }
    detail = std::to_string(cases) + " (r, s) configurations";
    return true;
}

// --- 7. counterexample construction ------------------------------------------

bool crit_counterexample(std::string& detail) {
    for (unsigned long p : {2ul, 3ul})
        for (std::size_t n : {std::size_t{2}, std::size_t{3}}) {
            CounterexampleResult c = counterexample_map(p, n, Field::Q);
            if (preserves_normalized_rank(c.map, CorpusSpec{100, 0}).status !=
                VerdictStatus::passed_samples) {
                detail = "rank corpus failed at p=" + std::to_string(p);
                return false;
            }
            if (jordan_check(c.map).status != VerdictStatus::certified) {
                detail = "missing Jordan certificate at p=" + std::to_string(p);
                return false;
            }
            const auto& [hx, hy] = c.hom_fail;
            if (apply(c.map, hx * hy) == apply(c.map, hx) * apply(c.map, hy)) {
                detail = "hom witness does not fail";
                return false;
            }
            const auto& [ax, ay] = c.antihom_fail;
            if (apply(c.map, ax * ay) == apply(c.map, ay) * apply(c.map, ax)) {
                detail = "antihom witness does not fail";
                return false;
            }
        }
    detail = "p in {2,3} x n in {2,3}, full corpus each";
    return true;
}

// --- 8. Steinitz arithmetic ---------------------------------------------------

bool crit_steinitz(std::string& detail) {
    Rng rng(808);
    const unsigned long primes[] = {2, 3, 5, 7, 11, 13};
    auto random_st = [&] {
        Steinitz s;
        for (unsigned long p : primes) {
            switch (rng.next() % 4) {
            case 0:
                break;
            case 1:
                s.set(p, StExp::infinite());
                break;
            default:
                s.set(p, StExp::finite(1 + rng.next() % 5));
            }
        }
        return s;
    };
    for (int t = 0; t < 100; ++t) {
        Steinitz a = random_st(), b = random_st(), c = random_st();
        if (st_mul(a, b) != st_mul(b, a) || st_lcm(a, b) != st_lcm(b, a) ||
            st_gcd(a, b) != st_gcd(b, a)) {
            detail = "commutativity failed";
            return false;
        }
        if (st_mul(st_mul(a, b), c) != st_mul(a, st_mul(b, c)) ||
            st_lcm(st_lcm(a, b), c) != st_lcm(a, st_lcm(b, c)) ||
            st_gcd(st_gcd(a, b), c) != st_gcd(a, st_gcd(b, c))) {
            detail = "associativity failed";
            return false;
        }
        if (st_lcm(a, st_gcd(a, b)) != a || st_gcd(a, st_lcm(a, b)) != a) {
            detail = "absorption failed";
            return false;
        }
        if (!st_divides(st_gcd(a, b), a) || !st_divides(a, st_lcm(a, b))) {
            detail = "divisibility order failed";
            return false;
        }
        Steinitz inf2 = st_parse("2^inf");
        if (st_mul(a, inf2).exponent(2) != StExp::infinite()) {
            detail = "infinity absorption failed";
            return false;
        }
        if (st_str(st_parse(st_str(a))) != st_str(a)) {
            detail = "canonical form round trip failed";
            return false;
        }
    }
    // finite prefix: the supremum is just the product of the stage sizes
    TowerDescriptor fin = tower(6, {2, 5}, {1});
    if (st_of_tower(fin) != st_from_nat(60)) {
        detail = "finite tower supremum wrong";
        return false;
    }
    if (st_str(st_of_tower(clifford_tower(4))) != "2^inf" ||
        st_is_locally_finite(st_of_tower(clifford_tower(4)))) {
        detail = "Clifford tower supremum wrong";
        return false;
    }
    if (st_str(st_corner(st_parse("2^inf*3"), 2, 6)) != "2^inf") {
        detail = "corner formula wrong";
        return false;
    }
    bool caught = false;
    try {
        st_corner(st_parse("3^2"), 1, 2);
    } catch (const Error& e) {
        caught = e.code == Errc::not_divisible;
    }
    if (!caught) {
        detail = "missing NotDivisible";
        return false;
    }
    detail = "100 random triples plus tower and corner cases";
    return true;
}

// --- 9. Clifford realization ---------------------------------------------------

bool crit_clifford(std::string& detail) {
    for (std::size_t k = 1; k <= 4; ++k) {
        CliffordStage st = clifford_generators(k);
        const std::size_t dim = std::size_t{1} << k;
        if (st.gammas.size() != 2 * k) {
            detail = "generator count wrong at k=" + std::to_string(k);
            return false;
        }
        for (std::size_t a = 0; a < st.gammas.size(); ++a)
            for (std::size_t b = a; b < st.gammas.size(); ++b) {
                ExactMatrix s = st.gammas[a] * st.gammas[b];
                s += st.gammas[b] * st.gammas[a];
                ExactMatrix want(dim, dim, Field::Qi);
                if (a == b)
                    want = ExactMatrix::identity(dim, Field::Qi)
                               .scaled(Scalar(2, Field::Qi));
                if (s != want) {
                    detail = "relation violated at k=" + std::to_string(k);
                    return false;
                }
            }
    }
    for (std::size_t k = 1; k <= 3; ++k) {
        std::size_t want = 1;
        for (std::size_t t = 0; t < k; ++t)
            want *= 4;
        if (generated_dimension(clifford_generators(k)) != want) {
            detail = "generated dimension wrong at k=" + std::to_string(k);
            return false;
        }
        CliffordStage lo = clifford_generators(k);
        CliffordStage hi = clifford_generators(k + 1);
        ExactMatrix i2 = ExactMatrix::identity(2, Field::Qi);
        for (std::size_t a = 0; a < lo.gammas.size(); ++a)
            if (lo.gammas[a].kron(i2) != hi.gammas[a]) {
                detail = "promotion compatibility failed at k=" + std::to_string(k);
                return false;
            }
    }
    detail = "relations k<=4, dimensions and embeddings k<=3";
    return true;
}

} // namespace

int main() {
    Gate gate;
    gate.run(1, "promotion invariance of normalized rank and det", 30.0, crit_promotion);
    gate.run(2, "idempotent characterization by rank", 10.0, crit_idempotent);
    gate.run(3, "degree oracle matches exact rank", 60.0, crit_degree_rank);
    gate.run(4, "determinant identity under embeddings", 60.0, crit_poly_identity);
    gate.run(5, "Frobenius form round trip", 120.0, crit_frobenius);
    gate.run(6, "mixed hom/antihom decomposition", 60.0, crit_mixed);
    gate.run(7, "rank-preserving counterexample", 30.0, crit_counterexample);
    gate.run(8, "Steinitz arithmetic laws", 5.0, crit_steinitz);
    gate.run(9, "Clifford generators", 60.0, crit_clifford);
    if (gate.failures == 0) {
        std::printf("acceptance: all 9 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", gate.failures);
    return 1;
}
