#include "rankforge/anticode.hpp"

#include <set>

namespace rankforge {

LinearMatrixCode standard_anticode(Field spec, int k, int m, int delta) {
    if (delta < 0 || delta > k) throw invalid_parameter_error("anticode: need 0 <= delta <= k");
    std::vector<MatrixFq> basis;
    for (int i = 0; i < delta; ++i)
        for (int j = 0; j < m; ++j) basis.push_back(MatrixFq::unit(spec, k, m, i, j));
    return LinearMatrixCode(std::move(spec), k, m, std::move(basis));
}

bool is_anticode(const LinearMatrixCode& A, int delta, std::uint64_t budget) {
    if (delta < 0) throw invalid_parameter_error("anticode: delta must be >= 0");
    // linear: pairwise distances are exactly the codeword ranks
    bool ok = true;
    for_each_codeword(A, [&](const MatrixFq& M) { ok = ok && rank(M) <= delta; }, budget);
    return ok;
}

bool is_anticode(const GeneralCode& A, int delta, std::uint64_t budget) {
    if (delta < 0) throw invalid_parameter_error("anticode: delta must be >= 0");
    const auto& words = A.words();
    check_budget(words.size() * words.size(), budget, "anticode pair enumeration");
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (rank_distance(words[i], words[j]) > delta) return false;
    return true;
}

Int anticode_bound(int m, int delta, std::uint64_t q) {
    if (delta < 0) throw invalid_parameter_error("anticode_bound: delta must be >= 0");
    if (m < 1 || q < 2) throw invalid_parameter_error("anticode_bound: bad parameters");
    return int_pow(Int(q), static_cast<std::uint64_t>(m) * delta);
}

bool check_cover(const LinearMatrixCode& A, const LinearMatrixCode& C) {
    return code_sum(A, C).dim() == A.k() * A.m();
}

bool check_cover(const GeneralCode& A, const GeneralCode& C, std::uint64_t budget) {
    require_same_spec(A.field(), C.field());
    if (A.k() != C.k() || A.m() != C.m()) throw invalid_parameter_error("cover: ambient mismatch");
    check_budget(A.size() * C.size(), budget, "cover sum enumeration");
    const Int ambient =
        int_pow(Int(A.field()->q()), static_cast<std::uint64_t>(A.k()) * A.m());
    if (Int(A.size()) * Int(C.size()) < ambient) return false;
    std::set<FqVec> sums;
    for (const auto& M : A.words())
        for (const auto& N : C.words()) sums.insert((M + N).entries());
    return Int(sums.size()) == ambient;
}

bool criterion_optimal_anticode(const LinearMatrixCode& A, int delta,
                                const std::vector<LinearMatrixCode>& mrd_corpus) {
    if (delta < 0 || delta > A.k())
        throw invalid_parameter_error("criterion: need 0 <= delta <= k");
    if (A.dim() != A.m() * delta)
        throw not_applicable_error("criterion: requires dim(A) = m * delta");
    if (delta == A.k()) return true;  // only the full space qualifies, no constraint
    for (const auto& C : mrd_corpus) {
        if (C.dim() == 0) continue;
        if (code_intersection(A, C).dim() != 0) return false;
    }
    return true;
}

}  // namespace rankforge
