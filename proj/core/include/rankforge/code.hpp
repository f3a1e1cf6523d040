#ifndef RANKFORGE_CODE_HPP
#define RANKFORGE_CODE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "rankforge/bigint.hpp"
#include "rankforge/errors.hpp"
#include "rankforge/field.hpp"
#include "rankforge/linalg.hpp"

namespace rankforge {

/// Exact codeword counts by rank, W_0..W_k.
struct WeightDistribution {
    std::vector<Int> counts;

    int max_rank() const { return static_cast<int>(counts.size()) - 1; }
    Int total() const {
        Int t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }
    bool operator==(const WeightDistribution& o) const { return counts == o.counts; }
};

/// Exact pair counts by distance, normalized by |C|; D_0..D_k.
struct DistanceDistribution {
    std::vector<Rat> values;

    Rat total() const {
        Rat t = 0;
        for (const auto& v : values) t += v;
        return t;
    }
    bool operator==(const DistanceDistribution& o) const { return values == o.values; }
};

/// F_q-linear subspace of F_q^{k x m}, spanned by the stored basis matrices.
class LinearMatrixCode {
   public:
    /// Strict constructor: the given matrices must be F_q-independent.
    LinearMatrixCode(Field spec, int k, int m, std::vector<MatrixFq> basis);

    /// Span of arbitrary generators; keeps the canonical RREF basis.
    static LinearMatrixCode span(Field spec, int k, int m, const std::vector<MatrixFq>& generators);

    static LinearMatrixCode zero_code(Field spec, int k, int m);
    static LinearMatrixCode full_space(Field spec, int k, int m);

    const Field& field() const { return spec_; }
    int k() const { return k_; }
    int m() const { return m_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<MatrixFq>& basis() const { return basis_; }
    Int size() const;

    bool contains(const MatrixFq& M) const;
    /// Same span, regardless of the stored bases.
    bool operator==(const LinearMatrixCode& o) const;
    bool operator!=(const LinearMatrixCode& o) const { return !(*this == o); }

    /// RREF of the flattened basis; identical for equal codes.
    const std::vector<FqVec>& canonical_rows() const { return canon_; }

   private:
    LinearMatrixCode() = default;
    Field spec_;
    int k_ = 0, m_ = 0;
    std::vector<MatrixFq> basis_;
    std::vector<FqVec> canon_;
};

/// Arbitrary non-empty set of k x m matrices, stored sorted and deduplicated.
class GeneralCode {
   public:
    GeneralCode(Field spec, int k, int m, std::vector<MatrixFq> words);

    static GeneralCode from_linear(const LinearMatrixCode& C, std::uint64_t budget = kDefaultBudget);

    const Field& field() const { return spec_; }
    int k() const { return k_; }
    int m() const { return m_; }
    const std::vector<MatrixFq>& words() const { return words_; }
    std::uint64_t size() const { return words_.size(); }
    bool contains(const MatrixFq& M) const;
    bool operator==(const GeneralCode& o) const;

   private:
    Field spec_;
    int k_, m_;
    std::vector<MatrixFq> words_;
};

/// F_{q^m}-linear code of vectors in F_{q^m}^k; generator rows are independent
/// over the extension field.
class VectorCode {
   public:
    VectorCode(Field spec, int k, std::vector<FqVec> generator);

    static VectorCode zero_code(Field spec, int k);
    static VectorCode full_space(Field spec, int k);

    const Field& field() const { return spec_; }
    int length() const { return k_; }
    int dim() const { return static_cast<int>(gen_.size()); }
    const std::vector<FqVec>& generator() const { return gen_; }
    /// Cardinality (q^m)^dim.
    Int size() const;

    bool operator==(const VectorCode& o) const;
    bool operator!=(const VectorCode& o) const { return !(*this == o); }
    const std::vector<FqVec>& canonical_rows() const { return canon_; }

   private:
    Field spec_;
    int k_;
    std::vector<FqVec> gen_;
    std::vector<FqVec> canon_;
};

// -- metric ------------------------------------------------------------------

/// d(M, N) = rk(M - N).
int rank_distance(const MatrixFq& M, const MatrixFq& N);

/// Tr(M N^t) as a value of F_q; the bilinear form behind trace-duality.
std::uint64_t trace_product(const MatrixFq& M, const MatrixFq& N);

// -- duality -----------------------------------------------------------------

/// Trace-dual: all N with Tr(M N^t) = 0 for every codeword M.
LinearMatrixCode dual_code(const LinearMatrixCode& C);

/// Dual under the F_{q^m}-bilinear form sum_i v_i w_i.
VectorCode vector_dual(const VectorCode& C);

// -- enumeration -------------------------------------------------------------

/// Visits every codeword once, in lex order of the coefficient vectors over the
/// stored basis (first coefficient most significant, scalars ascending).
template <class Fn>
void for_each_codeword(const LinearMatrixCode& C, Fn&& fn, std::uint64_t budget = kDefaultBudget) {
    const Field& F = C.field();
    const int dim = C.dim();
    const Int total = int_pow(Int(F->q()), static_cast<std::uint64_t>(dim));
    if (total > Int(budget))
        throw resource_limit_error("codeword enumeration: " + total.str() + " words exceed budget " +
                                   std::to_string(budget));
    MatrixFq zero(F, C.k(), C.m());
    if (dim == 0) {
        fn(static_cast<const MatrixFq&>(zero));
        return;
    }
    const auto scalars = F->subfield_elements();
    std::vector<std::vector<MatrixFq>> mult;
    mult.reserve(dim);
    for (int j = 0; j < dim; ++j) {
        std::vector<MatrixFq> row;
        row.reserve(scalars.size());
        for (auto s : scalars) row.push_back(C.basis()[j].scaled(s));
        mult.push_back(std::move(row));
    }
    std::vector<std::size_t> idx(dim, 0);
    std::vector<MatrixFq> prefix(static_cast<std::size_t>(dim) + 1, zero);
    fn(static_cast<const MatrixFq&>(prefix[dim]));
    while (true) {
        int j = dim - 1;
        while (j >= 0 && idx[j] + 1 == scalars.size()) {
            idx[j] = 0;
            --j;
        }
        if (j < 0) break;
        ++idx[j];
        for (int t = j; t < dim; ++t) prefix[t + 1] = prefix[t] + mult[t][idx[t]];
        fn(static_cast<const MatrixFq&>(prefix[dim]));
    }
}

std::vector<MatrixFq> enumerate_codewords(const LinearMatrixCode& C,
                                          std::uint64_t budget = kDefaultBudget);

// -- distributions and distance ----------------------------------------------

int min_distance(const LinearMatrixCode& C, std::uint64_t budget = kDefaultBudget);
int min_distance(const GeneralCode& C, std::uint64_t budget = kDefaultBudget);

WeightDistribution weight_distribution(const LinearMatrixCode& C, std::uint64_t budget = kDefaultBudget);
WeightDistribution weight_distribution(const GeneralCode& C, std::uint64_t budget = kDefaultBudget);

/// Pair enumeration over C x C, exact rationals.
DistanceDistribution distance_distribution(const GeneralCode& C, std::uint64_t budget = kDefaultBudget);
/// For linear codes D_i = W_i; computed through the weight distribution.
DistanceDistribution distance_distribution(const LinearMatrixCode& C,
                                           std::uint64_t budget = kDefaultBudget);

// -- vector representation ----------------------------------------------------

/// dim_{F_q} of the span of the entries; independent of the expansion basis.
int vector_rank(const Field& spec, const FqVec& v);

int vector_rank_distance(const Field& spec, const FqVec& v, const FqVec& w);

/// k x m matrix whose i-th row is the coordinate vector of v_i over the basis.
MatrixFq gamma_expand(const Field& spec, const FqVec& v, const ExtensionBasis& basis);

/// Expansion of a whole code: an F_q-linear matrix code of dimension m * dim(C).
LinearMatrixCode gamma_expand(const VectorCode& C, const ExtensionBasis& basis);

// -- structured subcodes -------------------------------------------------------

/// F_q^{k x m}(U): all matrices whose column space lies inside U; dim = m dim(U).
LinearMatrixCode matrix_space_of(const Subspace& U, int m);

/// C(U) = C with column space restricted to U, computed as a linear intersection.
LinearMatrixCode restrict_columnspace(const LinearMatrixCode& C, const Subspace& U);

LinearMatrixCode code_sum(const LinearMatrixCode& A, const LinearMatrixCode& B);
LinearMatrixCode code_intersection(const LinearMatrixCode& A, const LinearMatrixCode& B);

/// The translate M + C as an explicit word set.
GeneralCode coset(const LinearMatrixCode& C, const MatrixFq& M,
                  std::uint64_t budget = kDefaultBudget);

}  // namespace rankforge

#endif
