#ifndef RANKFORGE_MRD_HPP
#define RANKFORGE_MRD_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rankforge/bigint.hpp"
#include "rankforge/code.hpp"
#include "rankforge/errors.hpp"
#include "rankforge/field.hpp"
#include "rankforge/linalg.hpp"

namespace rankforge {

/// p(x) = a_0 x + a_1 x^q + ... + a_s x^(q^s) with coefficients in F_{q^m}.
class LinearizedPolynomial {
   public:
    LinearizedPolynomial(Field spec, std::vector<std::uint64_t> coeffs);

    static LinearizedPolynomial zero(Field spec) { return {std::move(spec), {}}; }
    static LinearizedPolynomial x(Field spec) { return {std::move(spec), {1}}; }
    /// The monomial x^(q^j).
    static LinearizedPolynomial q_monomial(Field spec, int j);

    const Field& field() const { return spec_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// q-degree: largest i with a_i != 0; -1 for the zero polynomial.
    int q_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

    /// Evaluation sum_i a_i beta^(q^i); F_q-linear in beta.
    std::uint64_t eval(std::uint64_t beta) const;

    bool operator==(const LinearizedPolynomial& o) const;

   private:
    Field spec_;
    std::vector<std::uint64_t> coeffs_;  // trailing zeros stripped
};

/// Root set V(p) as an F_q-subspace of F_{q^m}, returned in coordinates over
/// the canonical polynomial basis; dim V(p) <= q_degree(p).
Subspace root_space(const LinearizedPolynomial& p, std::uint64_t budget = kDefaultBudget);

/// p_U = prod_{gamma in U} (x - gamma), expanded from the literal product; a
/// monic linearized polynomial of q-degree dim(U) with V(p_U) = U. U is given
/// in polynomial-basis coordinates, ambient dimension tower_m.
LinearizedPolynomial subspace_polynomial(const Subspace& U, std::uint64_t budget = kDefaultBudget);

/// Parameters of the evaluation-code construction: F_q-independent points
/// beta_1..beta_k and a design distance d.
struct GabidulinSpec {
    Field spec;
    int k;
    int d;
    std::vector<std::uint64_t> evaluation_points;

    /// Empty point list selects the first k polynomial-basis elements.
    GabidulinSpec(Field spec, int k, int d, std::vector<std::uint64_t> points = {});
};

/// ev_E(Lin_q(m, k-d)): generator rows ev_E(x^(q^j)), j = 0..k-d. The result
/// has dim k-d+1 over F_{q^m} and minimum rank distance exactly d.
VectorCode gabidulin_code(const GabidulinSpec& g);

/// q^(m(k-d+1)), the largest cardinality a code with minimum distance d can have.
Int singleton_bound(int k, int m, int d, std::uint64_t q);

struct MrdVerdict {
    bool mrd = false;
    std::optional<int> d;   // empty for singleton codes, where d is undefined
    Int size;
    std::optional<Int> bound;  // singleton bound at the computed d

    explicit operator bool() const { return mrd; }
};

MrdVerdict is_mrd(const LinearMatrixCode& C, std::uint64_t budget = kDefaultBudget);
MrdVerdict is_mrd(const GeneralCode& C, std::uint64_t budget = kDefaultBudget);

/// Closed-form weight distribution of any MRD code containing 0, from (k, m, d)
/// alone. Also the distance distribution of every MRD code with those parameters.
WeightDistribution mrd_weight_distribution(int k, int m, int d, std::uint64_t q);

/// Closed-form (d, W) for a linear code with d(C) + d(C-dual) = k + 1, from its
/// dimension alone. Requires dim not divisible by m.
std::pair<int, WeightDistribution> quasi_mrd_weights(int k, int m, int dim, std::uint64_t q);

}  // namespace rankforge

#endif
