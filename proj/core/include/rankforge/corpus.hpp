#ifndef RANKFORGE_CORPUS_HPP
#define RANKFORGE_CORPUS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "rankforge/code.hpp"
#include "rankforge/field.hpp"
#include "rankforge/linalg.hpp"

namespace rankforge {

/// Seeded deterministic randomness for corpus generation; identical seeds give
/// identical corpora on every platform.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t n) {
        // rejection sampling keeps the stream platform-independent
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

   private:
    std::mt19937_64 engine_;
};

/// Uniform matrix with entries in the F_q subfield.
MatrixFq random_matrix(const Field& spec, int rows, int cols, Rng& rng);

MatrixFq random_invertible(const Field& spec, int n, Rng& rng);

/// Uniformly chosen dim-dimensional linear code (random full-rank basis).
LinearMatrixCode random_linear_code(const Field& spec, int k, int m, int dim, Rng& rng);

/// Random F_{q^m}-linear vector code of the given dimension.
VectorCode random_vector_code(const Field& spec, int k, int dim, Rng& rng);

/// The equivalence transform C -> A C B (A, B invertible); preserves rank
/// weights, distances and MRD parameters.
LinearMatrixCode transformed_code(const MatrixFq& A, const LinearMatrixCode& C, const MatrixFq& B);

/// Every dim-dimensional linear code in F_q^{k x m}, canonical order.
std::vector<LinearMatrixCode> all_linear_codes(const Field& spec, int k, int m, int dim,
                                               std::uint64_t budget = kDefaultBudget);

struct MrdCorpus {
    std::vector<LinearMatrixCode> codes;
    bool exhaustive = false;  // which regime produced the corpus
};

/// Linear MRD codes with minimum distance d: exhaustive where the subspace
/// count permits, otherwise seeded A * Gabidulin * B transforms.
MrdCorpus mrd_corpus(const Field& spec, int k, int m, int d, std::size_t sample_count,
                     std::uint64_t seed, std::uint64_t budget = kDefaultBudget);

}  // namespace rankforge

#endif
