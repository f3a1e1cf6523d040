// Test-only brute-force oracles. These deliberately avoid the library's
// elimination/solver paths: rank is measured by counting the row span,
// duals by filtering the full ambient space, subspaces by span closure.
#ifndef RANKFORGE_TESTS_ORACLES_HPP
#define RANKFORGE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include <rankforge/code.hpp>
#include <rankforge/field.hpp>
#include <rankforge/linalg.hpp>

namespace oracles {

using rankforge::Field;
using rankforge::FieldSpec;
using rankforge::FqVec;
using rankforge::MatrixFq;

/// Rank as log_q of the number of vectors in the row span, found by
/// enumerating every F_q-combination of the rows.
inline int rank_by_span_count(const MatrixFq& M) {
    const Field& F = M.field();
    const auto scalars = F->subfield_elements();
    const int k = M.rows(), m = M.cols();
    std::set<FqVec> span;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        FqVec v(m, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < m; ++j)
                v[j] = F->add(v[j], F->mul(scalars[idx[i]], M.at(i, j)));
        span.insert(v);
        int t = k - 1;
        while (t >= 0 && idx[t] + 1 == scalars.size()) idx[t--] = 0;
        if (t < 0) break;
        ++idx[t];
    }
    int r = 0;
    std::size_t power = 1;
    while (power < span.size()) {
        power *= scalars.size();
        ++r;
    }
    return r;
}

/// Every matrix of F_q^{k x m}, by odometer over the entries.
inline std::vector<MatrixFq> all_matrices(const Field& F, int k, int m) {
    const auto scalars = F->subfield_elements();
    std::vector<MatrixFq> out;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k) * m, 0);
    while (true) {
        FqVec entries(idx.size());
        for (std::size_t t = 0; t < idx.size(); ++t) entries[t] = scalars[idx[t]];
        out.emplace_back(F, k, m, entries);
        int t = static_cast<int>(idx.size()) - 1;
        while (t >= 0 && idx[t] + 1 == scalars.size()) idx[t--] = 0;
        if (t < 0) break;
        ++idx[t];
    }
    return out;
}

inline std::uint64_t trace_form(const MatrixFq& A, const MatrixFq& B) {
    const Field& F = A.field();
    std::uint64_t acc = 0;
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) acc = F->add(acc, F->mul(A.at(i, j), B.at(i, j)));
    return acc;
}

/// Dual of a span by filtering the whole ambient space against the trace form.
inline std::vector<MatrixFq> dual_by_filter(const std::vector<MatrixFq>& basis, const Field& F, int k,
                                            int m) {
    std::vector<MatrixFq> out;
    for (const auto& N : all_matrices(F, k, m)) {
        bool orthogonal = true;
        for (const auto& B : basis)
            if (trace_form(B, N) != 0) {
                orthogonal = false;
                break;
            }
        if (orthogonal) out.push_back(N);
    }
    return out;
}

/// The span of a vector list as a sorted set of vectors (closure by brute force).
inline std::set<FqVec> span_closure(const Field& F, const std::vector<FqVec>& gens, int len) {
    const auto scalars = F->subfield_elements();
    std::set<FqVec> out;
    std::vector<std::size_t> idx(gens.size(), 0);
    while (true) {
        FqVec v(len, 0);
        for (std::size_t r = 0; r < gens.size(); ++r)
            for (int j = 0; j < len; ++j) v[j] = F->add(v[j], F->mul(scalars[idx[r]], gens[r][j]));
        out.insert(v);
        int t = static_cast<int>(gens.size()) - 1;
        while (t >= 0 && idx[t] + 1 == scalars.size()) idx[t--] = 0;
        if (t < 0) break;
        ++idx[t];
    }
    return out;
}

/// All vectors over the FULL field F_{q^m} (not just the designated subfield).
inline std::vector<FqVec> all_vectors_full_field(const Field& F, int len) {
    std::vector<FqVec> out;
    FqVec v(len, 0);
    while (true) {
        out.push_back(v);
        int t = len - 1;
        while (t >= 0 && v[t] + 1 == F->order()) v[t--] = 0;
        if (t < 0) break;
        ++v[t];
    }
    return out;
}

/// All vectors of F_q^len.
inline std::vector<FqVec> all_vectors(const Field& F, int len) {
    const auto scalars = F->subfield_elements();
    std::vector<FqVec> out;
    std::vector<std::size_t> idx(len, 0);
    while (true) {
        FqVec v(len);
        for (int j = 0; j < len; ++j) v[j] = scalars[idx[j]];
        out.push_back(v);
        int t = len - 1;
        while (t >= 0 && idx[t] + 1 == scalars.size()) idx[t--] = 0;
        if (t < 0) break;
        ++idx[t];
    }
    return out;
}

/// Distinct u-dimensional subspaces as vector sets, from spans of all u-tuples.
inline std::set<std::set<FqVec>> subspace_sets(const Field& F, int k, int u) {
    std::set<std::set<FqVec>> out;
    const auto vectors = all_vectors(F, k);
    std::vector<std::size_t> pick(u, 0);
    if (u == 0) {
        out.insert(span_closure(F, {}, k));
        return out;
    }
    while (true) {
        std::vector<FqVec> gens;
        for (auto i : pick) gens.push_back(vectors[i]);
        auto span = span_closure(F, gens, k);
        std::size_t expect = 1;
        for (int i = 0; i < u; ++i) expect *= F->q();
        if (span.size() == expect) out.insert(std::move(span));
        int t = u - 1;
        while (t >= 0 && pick[t] + 1 == vectors.size()) pick[t--] = 0;
        if (t < 0) break;
        ++pick[t];
    }
    return out;
}

}  // namespace oracles

#endif
