#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lomat/error.hpp"
#include "lomat/linmap.hpp"

namespace lomat {

/*
 * Epistemic status of a preservation test. Rank/determinant preservation is
 * universally quantified and can only be refuted from finite evidence, so those
 * tests return certified_fail (with a concrete witness) or passed_samples
 * (with the sample count); the Jordan property alone admits a genuine finite
 * certificate via basis bilinearization and may return certified.
 */
enum class VerdictStatus { certified, passed_samples, certified_fail };

const char* verdict_name(VerdictStatus s);

struct PreservationVerdict {
    VerdictStatus status = VerdictStatus::passed_samples;
    std::size_t samples = 0;                    // matrices (or pairs) checked
    std::optional<ExactMatrix> witness;         // first failing input
    std::optional<ExactMatrix> witness_second;  // partner when the witness is a pair

    bool failed() const { return status == VerdictStatus::certified_fail; }
};

// deterministic corpus parameters for the sampled part
struct CorpusSpec {
    std::size_t random_count = 100;
    std::uint64_t seed = 0;
};

// basis matrices, one diagonal 0/1 representative per rank 0..n, then
// seeded random matrices cycling through all rank classes - in this order
std::vector<ExactMatrix> rank_corpus(std::size_t n, Field f, const CorpusSpec& spec);
// diagonal 0/1 idempotents of every rank, then random conjugated ones
std::vector<ExactMatrix> idempotent_corpus(std::size_t n, Field f, const CorpusSpec& spec);

// m*rank(a) = n*rank(phi(a)) over the rank corpus
PreservationVerdict preserves_normalized_rank(const MatLinearMap& map, const CorpusSpec& spec);
// |det(a)|^m = |det(phi(a))|^n (squared magnitudes over Qi) over the corpus
PreservationVerdict preserves_normalized_det(const MatLinearMap& map, const CorpusSpec& spec);
// certificate: phi(xy + yx) = phi(x)phi(y) + phi(y)phi(x) on all basis pairs
PreservationVerdict jordan_check(const MatLinearMap& map);
// sampled: phi(e)^2 = phi(e) over the idempotent corpus
PreservationVerdict maps_idempotents_to_idempotents(const MatLinearMap& map,
                                                    const CorpusSpec& spec);

enum class MapKind { hom, antihom, mixed };

const char* map_kind_name(MapKind k);

/*
 * Result of the homomorphism/antihomomorphism splitting of a unital Jordan
 * homomorphism: orthogonal idempotents e1 + e2 = I commuting with the image,
 * such that e1*phi is multiplicative and e2*phi antimultiplicative. The
 * conjugator u and factors x, y are filled by the recovery operations; the
 * failure pairs witness that phi itself is not (anti)multiplicative.
 */
struct DecompositionWitness {
    MapKind kind = MapKind::mixed;
    ExactMatrix e1, e2;
    std::optional<ExactMatrix> u;
    std::optional<ExactMatrix> x, y;
    std::optional<std::pair<ExactMatrix, ExactMatrix>> hom_fail, antihom_fail;
};

// thrown when the splitting idempotent is not unique; carries the affine
// solution set (particular + directions) instead of guessing
class AmbiguousSplitError : public Error {
public:
    AmbiguousSplitError(ExactMatrix particular, std::vector<ExactMatrix> directions)
        : Error(Errc::ambiguous_split,
                "splitting idempotent is not unique (" +
                    std::to_string(directions.size()) + " free directions)"),
          particular_(std::move(particular)), directions_(std::move(directions)) {}

    const ExactMatrix& particular() const { return particular_; }
    const std::vector<ExactMatrix>& directions() const { return directions_; }

private:
    ExactMatrix particular_;
    std::vector<ExactMatrix> directions_;
};

// split a unital certified-Jordan map; throws not_unital, not_jordan,
// AmbiguousSplitError, no_idempotent_solution
DecompositionWitness jr_decompose(const MatLinearMap& map);

// conjugator recovery for a unital Jordan map of pure kind with n = m:
// solves psi(e_ij)*u = u*e_ij (hom) or psi(e_ij)*u = u*e_ji (antihom),
// gauge-fixed so the first nonzero entry is 1; throws no_invertible_solution
ExactMatrix recover_inner(const MatLinearMap& map, MapKind kind);

enum class FrobeniusMode { rank, det };

// full form recovery phi(a) = x*a*y or x*a^t*y for bijective preservers;
// caller is responsible for the mode's preservation test having passed
DecompositionWitness frobenius_form(const MatLinearMap& map, FrobeniusMode mode);

/*
 * The rank-preserving unital Jordan map a |-> block-diag(a, ..., a, a^t)
 * with p - 1 plain copies: it is neither multiplicative nor
 * antimultiplicative, and the pair (e12, e21) witnesses both defects.
 */
struct CounterexampleResult {
    MatLinearMap map;
    std::pair<ExactMatrix, ExactMatrix> hom_fail;
    std::pair<ExactMatrix, ExactMatrix> antihom_fail;
};

CounterexampleResult counterexample_map(unsigned long p, std::size_t n, Field f);

} // namespace lomat
