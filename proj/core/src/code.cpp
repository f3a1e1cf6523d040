#include "rankforge/code.hpp"

#include <algorithm>

namespace rankforge {

namespace {

FqVec flatten(const MatrixFq& M) { return M.entries(); }

MatrixFq unflatten(const Field& spec, int k, int m, const FqVec& row) {
    return MatrixFq(spec, k, m, row);
}

void require_shape(const MatrixFq& M, const MatrixFq& N, const char* what) {
    require_same_spec(M.field(), N.field());
    if (M.rows() != N.rows() || M.cols() != N.cols())
        throw invalid_parameter_error(std::string(what) + ": shape mismatch");
}

// nullspace basis of a row list over the full field of the spec
std::vector<FqVec> nullspace_rows(const Field& spec, std::vector<FqVec> rows, int ncols) {
    rref_in_place(spec, rows);
    std::vector<int> pivot_of_row;
    std::vector<bool> is_pivot(ncols, false);
    for (const auto& row : rows) {
        for (int j = 0; j < ncols; ++j)
            if (row[j] != 0) {
                pivot_of_row.push_back(j);
                is_pivot[j] = true;
                break;
            }
    }
    std::vector<FqVec> out;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        FqVec w(ncols, 0);
        w[f] = 1;
        for (std::size_t r = 0; r < pivot_of_row.size(); ++r) w[pivot_of_row[r]] = spec->neg(rows[r][f]);
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace

LinearMatrixCode::LinearMatrixCode(Field spec, int k, int m, std::vector<MatrixFq> basis)
    : spec_(std::move(spec)), k_(k), m_(m), basis_(std::move(basis)) {
    if (k < 1 || m < 1) throw invalid_parameter_error("code: dimensions must be positive");
    std::vector<FqVec> rows;
    for (const auto& B : basis_) {
        require_same_spec(spec_, B.field());
        if (B.rows() != k || B.cols() != m) throw invalid_parameter_error("code: basis shape mismatch");
        rows.push_back(flatten(B));
    }
    if (static_cast<int>(basis_.size()) > k * m)
        throw invalid_parameter_error("code: more basis matrices than the ambient dimension");
    auto copy = rows;
    if (rref_in_place(spec_, copy).size() != basis_.size())
        throw invalid_parameter_error("code: basis matrices are F_q-dependent");
    copy.resize(basis_.size());
    canon_ = std::move(copy);
}

LinearMatrixCode LinearMatrixCode::span(Field spec, int k, int m,
                                        const std::vector<MatrixFq>& generators) {
    std::vector<FqVec> rows;
    for (const auto& G : generators) {
        require_same_spec(spec, G.field());
        if (G.rows() != k || G.cols() != m) throw invalid_parameter_error("code: generator shape mismatch");
        rows.push_back(flatten(G));
    }
    const std::size_t rank = rref_in_place(spec, rows).size();
    rows.resize(rank);
    std::vector<MatrixFq> basis;
    basis.reserve(rank);
    for (const auto& r : rows) basis.push_back(unflatten(spec, k, m, r));
    return LinearMatrixCode(std::move(spec), k, m, std::move(basis));
}

LinearMatrixCode LinearMatrixCode::zero_code(Field spec, int k, int m) {
    return LinearMatrixCode(std::move(spec), k, m, {});
}

LinearMatrixCode LinearMatrixCode::full_space(Field spec, int k, int m) {
    std::vector<MatrixFq> basis;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j) basis.push_back(MatrixFq::unit(spec, k, m, i, j));
    return LinearMatrixCode(std::move(spec), k, m, std::move(basis));
}

Int LinearMatrixCode::size() const {
    return int_pow(Int(spec_->q()), static_cast<std::uint64_t>(dim()));
}

bool LinearMatrixCode::contains(const MatrixFq& M) const {
    require_same_spec(spec_, M.field());
    if (M.rows() != k_ || M.cols() != m_) throw invalid_parameter_error("code: shape mismatch");
    FqVec w = flatten(M);
    const int n = k_ * m_;
    for (const auto& row : canon_) {
        int pivot = -1;
        for (int j = 0; j < n; ++j)
            if (row[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot < 0 || w[pivot] == 0) continue;
        const std::uint64_t f = w[pivot];
        for (int j = 0; j < n; ++j) w[j] = spec_->sub(w[j], spec_->mul(f, row[j]));
    }
    return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
}

bool LinearMatrixCode::operator==(const LinearMatrixCode& o) const {
    return spec_->same_as(*o.spec_) && k_ == o.k_ && m_ == o.m_ && canon_ == o.canon_;
}

GeneralCode::GeneralCode(Field spec, int k, int m, std::vector<MatrixFq> words)
    : spec_(std::move(spec)), k_(k), m_(m), words_(std::move(words)) {
    if (words_.empty()) throw invalid_parameter_error("code: a code must be non-empty");
    for (const auto& W : words_) {
        require_same_spec(spec_, W.field());
        if (W.rows() != k || W.cols() != m) throw invalid_parameter_error("code: word shape mismatch");
    }
    std::sort(words_.begin(), words_.end(),
              [](const MatrixFq& a, const MatrixFq& b) { return a.entries() < b.entries(); });
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

GeneralCode GeneralCode::from_linear(const LinearMatrixCode& C, std::uint64_t budget) {
    return GeneralCode(C.field(), C.k(), C.m(), enumerate_codewords(C, budget));
}

bool GeneralCode::contains(const MatrixFq& M) const {
    return std::binary_search(words_.begin(), words_.end(), M,
                              [](const MatrixFq& a, const MatrixFq& b) { return a.entries() < b.entries(); });
}

bool GeneralCode::operator==(const GeneralCode& o) const {
    return spec_->same_as(*o.spec_) && k_ == o.k_ && m_ == o.m_ && words_ == o.words_;
}

VectorCode::VectorCode(Field spec, int k, std::vector<FqVec> generator)
    : spec_(std::move(spec)), k_(k), gen_(std::move(generator)) {
    if (k < 1) throw invalid_parameter_error("vector code: length must be positive");
    for (const auto& row : gen_) {
        if (static_cast<int>(row.size()) != k)
            throw invalid_parameter_error("vector code: generator row length mismatch");
        for (auto v : row)
            if (v >= spec_->order()) throw invalid_parameter_error("vector code: value out of range");
    }
    if (static_cast<int>(gen_.size()) > k)
        throw invalid_parameter_error("vector code: more generators than the length");
    auto copy = gen_;
    if (rref_in_place(spec_, copy).size() != gen_.size())
        throw invalid_parameter_error("vector code: generator rows are dependent over F_{q^m}");
    copy.resize(gen_.size());
    canon_ = std::move(copy);
}

VectorCode VectorCode::zero_code(Field spec, int k) { return VectorCode(std::move(spec), k, {}); }

VectorCode VectorCode::full_space(Field spec, int k) {
    std::vector<FqVec> gen;
    for (int i = 0; i < k; ++i) {
        FqVec e(k, 0);
        e[i] = 1;
        gen.push_back(std::move(e));
    }
    return VectorCode(std::move(spec), k, std::move(gen));
}

Int VectorCode::size() const {
    return int_pow(Int(spec_->order()), static_cast<std::uint64_t>(dim()));
}

bool VectorCode::operator==(const VectorCode& o) const {
    return spec_->same_as(*o.spec_) && k_ == o.k_ && canon_ == o.canon_;
}

int rank_distance(const MatrixFq& M, const MatrixFq& N) {
    require_shape(M, N, "rank_distance");
    return rank(M - N);
}

std::uint64_t trace_product(const MatrixFq& M, const MatrixFq& N) {
    require_shape(M, N, "trace_product");
    // Tr(M N^t) = sum_ij M_ij N_ij
    const Field& F = M.field();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < M.entries().size(); ++i)
        acc = F->add(acc, F->mul(M.entries()[i], N.entries()[i]));
    return acc;
}

LinearMatrixCode dual_code(const LinearMatrixCode& C) {
    // the trace form on matrices is the standard inner product of flattenings
    std::vector<FqVec> rows;
    for (const auto& B : C.basis()) rows.push_back(B.entries());
    auto null_rows = nullspace_rows(C.field(), std::move(rows), C.k() * C.m());
    std::vector<MatrixFq> basis;
    basis.reserve(null_rows.size());
    for (const auto& r : null_rows) basis.push_back(unflatten(C.field(), C.k(), C.m(), r));
    return LinearMatrixCode::span(C.field(), C.k(), C.m(), basis);
}

VectorCode vector_dual(const VectorCode& C) {
    auto null_rows = nullspace_rows(C.field(), C.generator(), C.length());
    return VectorCode(C.field(), C.length(), std::move(null_rows));
}

std::vector<MatrixFq> enumerate_codewords(const LinearMatrixCode& C, std::uint64_t budget) {
    std::vector<MatrixFq> out;
    for_each_codeword(C, [&](const MatrixFq& M) { out.push_back(M); }, budget);
    return out;
}

int min_distance(const LinearMatrixCode& C, std::uint64_t budget) {
    if (C.dim() == 0) throw undefined_distance_error("min_distance: |C| < 2");
    int best = C.k() + 1;
    for_each_codeword(
        C,
        [&](const MatrixFq& M) {
            if (M.is_zero()) return;
            if (best > 1) best = std::min(best, rank(M));
        },
        budget);
    return best;
}

int min_distance(const GeneralCode& C, std::uint64_t budget) {
    const auto& words = C.words();
    if (words.size() < 2) throw undefined_distance_error("min_distance: |C| < 2");
    check_budget(words.size() * words.size(), budget, "min_distance pair enumeration");
    int best = C.k() + 1;
    for (std::size_t i = 0; i < words.size() && best > 1; ++i)
        for (std::size_t j = i + 1; j < words.size() && best > 1; ++j)
            best = std::min(best, rank_distance(words[i], words[j]));
    return best;
}

WeightDistribution weight_distribution(const LinearMatrixCode& C, std::uint64_t budget) {
    WeightDistribution W;
    W.counts.assign(C.k() + 1, 0);
    for_each_codeword(C, [&](const MatrixFq& M) { W.counts[rank(M)] += 1; }, budget);
    return W;
}

WeightDistribution weight_distribution(const GeneralCode& C, std::uint64_t budget) {
    check_budget(C.size(), budget, "weight distribution");
    WeightDistribution W;
    W.counts.assign(C.k() + 1, 0);
    for (const auto& M : C.words()) W.counts[rank(M)] += 1;
    return W;
}

DistanceDistribution distance_distribution(const GeneralCode& C, std::uint64_t budget) {
    const auto& words = C.words();
    check_budget(words.size() * words.size(), budget, "distance distribution pair enumeration");
    std::vector<Int> pairs(C.k() + 1, 0);
    for (std::size_t i = 0; i < words.size(); ++i) {
        pairs[0] += 1;  // (i, i)
        for (std::size_t j = i + 1; j < words.size(); ++j) pairs[rank_distance(words[i], words[j])] += 2;
    }
    DistanceDistribution D;
    const Int sz(words.size());
    for (const auto& c : pairs) D.values.emplace_back(Rat(c, sz));
    return D;
}

DistanceDistribution distance_distribution(const LinearMatrixCode& C, std::uint64_t budget) {
    // for linear codes every difference is attained |C| times: D_i = W_i
    auto W = weight_distribution(C, budget);
    DistanceDistribution D;
    for (const auto& c : W.counts) D.values.emplace_back(Rat(c));
    return D;
}

int vector_rank(const Field& spec, const FqVec& v) {
    return rank(gamma_expand(spec, v, ExtensionBasis::polynomial_basis(spec)));
}

int vector_rank_distance(const Field& spec, const FqVec& v, const FqVec& w) {
    if (v.size() != w.size()) throw invalid_parameter_error("vector distance: length mismatch");
    FqVec diff(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) diff[i] = spec->sub(v[i], w[i]);
    return vector_rank(spec, diff);
}

MatrixFq gamma_expand(const Field& spec, const FqVec& v, const ExtensionBasis& basis) {
    require_same_spec(spec, basis.field());
    const int k = static_cast<int>(v.size());
    const int m = static_cast<int>(basis.m());
    MatrixFq M(spec, k, m);
    for (int i = 0; i < k; ++i) {
        auto coords = basis.coordinates(v[i]);
        for (int j = 0; j < m; ++j) M.set(i, j, coords[j]);
    }
    return M;
}

LinearMatrixCode gamma_expand(const VectorCode& C, const ExtensionBasis& basis) {
    require_same_spec(C.field(), basis.field());
    const Field& F = C.field();
    const int m = static_cast<int>(basis.m());
    std::vector<MatrixFq> b;
    // gamma_j * row, expanded, for each generator row: an F_q-basis of the expansion
    for (const auto& row : C.generator())
        for (int j = 0; j < m; ++j) {
            FqVec scaled(row.size());
            for (std::size_t t = 0; t < row.size(); ++t) scaled[t] = F->mul(basis.element_value(j), row[t]);
            b.push_back(gamma_expand(F, scaled, basis));
        }
    return LinearMatrixCode(F, C.length(), m, std::move(b));
}

LinearMatrixCode matrix_space_of(const Subspace& U, int m) {
    const Field& F = U.field();
    const int k = U.ambient_dim();
    std::vector<MatrixFq> basis;
    for (const auto& u : U.basis())
        for (int j = 0; j < m; ++j) {
            MatrixFq M(F, k, m);
            for (int i = 0; i < k; ++i) M.set(i, j, u[i]);
            basis.push_back(std::move(M));
        }
    return LinearMatrixCode(F, k, m, std::move(basis));
}

LinearMatrixCode restrict_columnspace(const LinearMatrixCode& C, const Subspace& U) {
    require_same_spec(C.field(), U.field());
    if (U.ambient_dim() != C.k())
        throw invalid_parameter_error("restrict_columnspace: subspace must live in F_q^k");
    if (U.dim() == 0) return LinearMatrixCode::zero_code(C.field(), C.k(), C.m());
    return code_intersection(C, matrix_space_of(U, C.m()));
}

LinearMatrixCode code_sum(const LinearMatrixCode& A, const LinearMatrixCode& B) {
    require_same_spec(A.field(), B.field());
    if (A.k() != B.k() || A.m() != B.m()) throw invalid_parameter_error("code sum: ambient mismatch");
    std::vector<MatrixFq> gens = A.basis();
    gens.insert(gens.end(), B.basis().begin(), B.basis().end());
    return LinearMatrixCode::span(A.field(), A.k(), A.m(), gens);
}

LinearMatrixCode code_intersection(const LinearMatrixCode& A, const LinearMatrixCode& B) {
    require_same_spec(A.field(), B.field());
    if (A.k() != B.k() || A.m() != B.m())
        throw invalid_parameter_error("code intersection: ambient mismatch");
    return dual_code(code_sum(dual_code(A), dual_code(B)));
}

GeneralCode coset(const LinearMatrixCode& C, const MatrixFq& M, std::uint64_t budget) {
    require_same_spec(C.field(), M.field());
    std::vector<MatrixFq> words;
    for_each_codeword(C, [&](const MatrixFq& W) { words.push_back(M + W); }, budget);
    return GeneralCode(C.field(), C.k(), C.m(), std::move(words));
}

}  // namespace rankforge
