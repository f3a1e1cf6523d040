#ifndef RANKFORGE_ANTICODE_HPP
#define RANKFORGE_ANTICODE_HPP

#include <cstdint>
#include <vector>

#include "rankforge/bigint.hpp"
#include "rankforge/code.hpp"
#include "rankforge/errors.hpp"

namespace rankforge {

/// The linear delta-anticode supported on the first delta rows; dim = m delta,
/// which meets the anticode bound q^(m delta).
LinearMatrixCode standard_anticode(Field spec, int k, int m, int delta);

/// All pairwise distances <= delta. For linear codes this reduces to the
/// maximum codeword rank.
bool is_anticode(const LinearMatrixCode& A, int delta, std::uint64_t budget = kDefaultBudget);
bool is_anticode(const GeneralCode& A, int delta, std::uint64_t budget = kDefaultBudget);

/// q^(m delta), the largest cardinality of a delta-anticode in F_q^{k x m}.
Int anticode_bound(int m, int delta, std::uint64_t q);

/// Whether A + C covers the whole ambient space. Linear inputs use the
/// dimension count; explicit word sets are enumerated.
bool check_cover(const LinearMatrixCode& A, const LinearMatrixCode& C);
bool check_cover(const GeneralCode& A, const GeneralCode& C, std::uint64_t budget = kDefaultBudget);

/// Intersection criterion for optimality: a linear code of dimension m delta is
/// an optimal delta-anticode iff it meets every nonzero linear MRD code with
/// d = delta + 1 trivially. The corpus approximates "every" (exhaustive at small
/// parameters, randomized transforms otherwise); delta = k is vacuously true.
bool criterion_optimal_anticode(const LinearMatrixCode& A, int delta,
                                const std::vector<LinearMatrixCode>& mrd_corpus);

}  // namespace rankforge

#endif
