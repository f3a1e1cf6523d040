#ifndef RANKFORGE_MACWILLIAMS_HPP
#define RANKFORGE_MACWILLIAMS_HPP

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "rankforge/bigint.hpp"
#include "rankforge/code.hpp"
#include "rankforge/errors.hpp"

namespace rankforge {

/// Ambient parameters of a code in F_q^{k x m} with k <= m, plus |C|.
struct CodeParams {
    std::uint64_t q;
    int k;
    int m;
    Int code_size;

    CodeParams(std::uint64_t q, int k, int m, Int code_size);

    static CodeParams for_linear(std::uint64_t q, int k, int m, int dim);
};

/// Data that determines a weight distribution through the recursion theorem.
struct RecursionInput {
    CodeParams params;
    int dim;      // dim(C), in [1, km-1]
    int d;        // minimum distance
    int d_perp;   // dual minimum distance
    int epsilon;  // 1 if C is MRD, 0 otherwise
    std::vector<Int> known;  // W_d .. W_{k - d_perp}; empty when k - d_perp < d
};

/// Set of diagonal positions (i, i), 1-based, to be forced to zero.
struct ZeroPattern {
    int k;
    int m;
    std::set<std::pair<int, int>> positions;

    ZeroPattern(int k, int m, std::set<std::pair<int, int>> positions);
};

/// Rank-metric MacWilliams transform: the weight distribution of the dual code.
///   W_i(C-dual) = 1/|C| sum_j W_j(C) sum_u (-1)^(i-u) q^(mu + C(i-u,2))
///                 qbin(k-u, k-i) qbin(k-j, u).
/// Throws inconsistent_input_error when the input is not realizable (output not
/// a nonnegative integer vector).
WeightDistribution macwilliams_transform(const WeightDistribution& W, const CodeParams& params);

/// Left side of the nu-form identity: sum_{i=0}^{k-nu} W_i qbin(k-i, nu).
Int binomial_moment(const WeightDistribution& W, int nu, const CodeParams& params);

/// Dual weights recovered by solving the triangular system of nu-identities.
/// Agrees exactly with macwilliams_transform on every valid input.
WeightDistribution dual_weights_from_moments(const WeightDistribution& W, const CodeParams& params);

/// Reconstructs the full weight distribution from (dim, d, d_perp, epsilon) and
/// the middle weights, then validates the q^dim checksum.
WeightDistribution weight_recursion(const RecursionInput& input);

/// Number of k x m matrices over F_q of rank r with zeros at all positions of
/// the pattern.
Int count_zero_diagonal(const ZeroPattern& pattern, std::uint64_t q, int r);

}  // namespace rankforge

#endif
