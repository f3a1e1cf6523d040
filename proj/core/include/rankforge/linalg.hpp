#ifndef RANKFORGE_LINALG_HPP
#define RANKFORGE_LINALG_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "rankforge/bigint.hpp"
#include "rankforge/errors.hpp"
#include "rankforge/field.hpp"

namespace rankforge {

/// Row vector over F_q, entries as canonical field values.
using FqVec = std::vector<std::uint64_t>;

/// Dense k x m matrix with entries in the designated F_q subfield of its spec.
class MatrixFq {
   public:
    MatrixFq(Field spec, int rows, int cols);                    // zero matrix
    MatrixFq(Field spec, int rows, int cols, FqVec entries);     // row-major

    const Field& field() const { return spec_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint64_t at(int i, int j) const { return vals_[static_cast<std::size_t>(i) * cols_ + j]; }
    void set(int i, int j, std::uint64_t v);
    const FqVec& entries() const { return vals_; }

    MatrixFq operator+(const MatrixFq& o) const;
    MatrixFq operator-(const MatrixFq& o) const;
    MatrixFq operator-() const;
    MatrixFq scaled(std::uint64_t c) const;
    MatrixFq transposed() const;
    MatrixFq operator*(const MatrixFq& o) const;
    bool operator==(const MatrixFq& o) const;
    bool operator!=(const MatrixFq& o) const { return !(*this == o); }
    bool is_zero() const;

    static MatrixFq identity(Field spec, int n);
    /// Unit matrix E_{ij} (1-based would be ambiguous; i, j are 0-based here).
    static MatrixFq unit(Field spec, int rows, int cols, int i, int j);

   private:
    Field spec_;
    int rows_, cols_;
    FqVec vals_;
};

/// In-place reduced row echelon form; returns pivot column indices. Zero rows
/// are moved to the bottom but not removed.
std::vector<int> rref_in_place(const Field& spec, std::vector<FqVec>& rows);

int rank(const MatrixFq& M);

/// Subspace of F_q^k in canonical form: the RREF basis with no zero rows.
/// Equal subspaces compare equal entrywise, which makes this a map key.
class Subspace {
   public:
    /// Canonicalizes the span of the given generators.
    Subspace(Field spec, int ambient_dim, std::vector<FqVec> generators);

    static Subspace zero(Field spec, int ambient_dim);
    static Subspace full(Field spec, int ambient_dim);

    const Field& field() const { return spec_; }
    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<FqVec>& basis() const { return basis_; }

    bool contains(const FqVec& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    /// Total order: by dimension, then lexicographic on the flattened basis.
    bool operator<(const Subspace& o) const;

   private:
    Field spec_;
    int ambient_;
    std::vector<FqVec> basis_;
};

/// Column space of M, a subspace of F_q^k.
Subspace colsp(const MatrixFq& M);

/// Orthogonal complement under the standard inner product of F_q^k.
Subspace orthogonal_complement(const Subspace& U);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

/// All u-dimensional subspaces of F_q^k, each exactly once, sorted by the
/// canonical basis (lex on flattened RREF entries). Enumeration is by pivot
/// pattern, so no deduplication is ever needed.
std::vector<Subspace> enumerate_subspaces(const Field& spec, int k, int u,
                                          std::uint64_t budget = kDefaultBudget);

/// All u-dimensional subspaces of V.
std::vector<Subspace> subspaces_of(const Subspace& V, int u, std::uint64_t budget = kDefaultBudget);

/// Gaussian binomial coefficient; 0 outside 0 <= b <= a. Exact.
Int q_binomial(std::int64_t a, std::int64_t b, std::uint64_t q);

/// Number of subspaces of F_q^k of every dimension combined.
Int total_subspace_count(int k, std::uint64_t q);

/// Integer-valued function on the subspace lattice of F_q^k.
class LatticeFunction {
   public:
    LatticeFunction(Field spec, int ambient_dim) : spec_(std::move(spec)), ambient_(ambient_dim) {}

    const Field& field() const { return spec_; }
    int ambient_dim() const { return ambient_; }

    void set(const Subspace& U, Int value);
    const Int& at(const Subspace& U) const;  // throws incomplete_function_error
    bool defined_on(const Subspace& U) const { return values_.count(U) > 0; }
    const std::map<Subspace, Int>& values() const { return values_; }

   private:
    Field spec_;
    int ambient_;
    std::map<Subspace, Int> values_;
};

/// Moebius inversion on the subspace lattice:
///   f(V) = sum_{u=0}^{dim V} (-1)^(i-u) q^C(i-u,2) sum_{U <= V, dim U = u} g(U).
Int moebius_invert(const LatticeFunction& g, const Subspace& V,
                   std::uint64_t budget = kDefaultBudget);

}  // namespace rankforge

#endif
