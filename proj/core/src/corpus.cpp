#include "rankforge/corpus.hpp"

#include "rankforge/mrd.hpp"

namespace rankforge {

MatrixFq random_matrix(const Field& spec, int rows, int cols, Rng& rng) {
    const auto scalars = spec->subfield_elements();
    MatrixFq M(spec, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M.set(i, j, scalars[rng.below(scalars.size())]);
    return M;
}

MatrixFq random_invertible(const Field& spec, int n, Rng& rng) {
    while (true) {
        MatrixFq M = random_matrix(spec, n, n, rng);
        if (rank(M) == n) return M;
    }
}

LinearMatrixCode random_linear_code(const Field& spec, int k, int m, int dim, Rng& rng) {
    if (dim < 0 || dim > k * m) throw invalid_parameter_error("random code: bad dimension");
    const auto scalars = spec->subfield_elements();
    while (true) {
        std::vector<FqVec> rows;
        for (int r = 0; r < dim; ++r) {
            FqVec row(static_cast<std::size_t>(k) * m);
            for (auto& v : row) v = scalars[rng.below(scalars.size())];
            rows.push_back(std::move(row));
        }
        auto copy = rows;
        if (rref_in_place(spec, copy).size() != static_cast<std::size_t>(dim)) continue;
        std::vector<MatrixFq> basis;
        for (const auto& row : rows) basis.emplace_back(spec, k, m, row);
        return LinearMatrixCode(spec, k, m, std::move(basis));
    }
}

VectorCode random_vector_code(const Field& spec, int k, int dim, Rng& rng) {
    if (dim < 0 || dim > k) throw invalid_parameter_error("random vector code: bad dimension");
    while (true) {
        std::vector<FqVec> rows;
        for (int r = 0; r < dim; ++r) {
            FqVec row(k);
            for (auto& v : row) v = rng.below(spec->order());
            rows.push_back(std::move(row));
        }
        auto copy = rows;
        if (rref_in_place(spec, copy).size() != static_cast<std::size_t>(dim)) continue;
        return VectorCode(spec, k, std::move(rows));
    }
}

LinearMatrixCode transformed_code(const MatrixFq& A, const LinearMatrixCode& C, const MatrixFq& B) {
    std::vector<MatrixFq> basis;
    basis.reserve(C.dim());
    for (const auto& M : C.basis()) basis.push_back(A * M * B);
    return LinearMatrixCode(C.field(), C.k(), C.m(), std::move(basis));
}

std::vector<LinearMatrixCode> all_linear_codes(const Field& spec, int k, int m, int dim,
                                               std::uint64_t budget) {
    std::vector<LinearMatrixCode> out;
    for (const auto& U : enumerate_subspaces(spec, k * m, dim, budget)) {
        std::vector<MatrixFq> basis;
        for (const auto& row : U.basis()) basis.emplace_back(spec, k, m, row);
        out.emplace_back(spec, k, m, std::move(basis));
    }
    return out;
}

MrdCorpus mrd_corpus(const Field& spec, int k, int m, int d, std::size_t sample_count,
                     std::uint64_t seed, std::uint64_t budget) {
    MrdCorpus corpus;
    const int dim = m * (k - d + 1);
    const Int ambient = int_pow(Int(spec->q()), static_cast<std::uint64_t>(k) * m);
    const Int candidates = q_binomial(k * m, dim, spec->q());
    if (ambient <= Int(std::uint64_t{1} << 16) && candidates <= Int(100000)) {
        corpus.exhaustive = true;
        for (auto& C : all_linear_codes(spec, k, m, dim, budget)) {
            const auto v = is_mrd(C, budget);
            if (v.mrd && v.d && *v.d == d) corpus.codes.push_back(std::move(C));
        }
        return corpus;
    }
    corpus.exhaustive = false;
    Rng rng(seed);
    // build the seed code over a tower F_q <= F_{q^m}, then carry the expansion
    // into the caller's spec through the subfield isomorphism (entrywise field
    // isomorphisms preserve ranks, so MRD parameters survive)
    const auto tower = FieldSpec::make_tower(spec->q(), m);
    const auto iso = subfield_isomorphism(tower, spec);
    const auto gab = gamma_expand(gabidulin_code(GabidulinSpec(tower, k, d)),
                                  ExtensionBasis::polynomial_basis(tower));
    std::vector<MatrixFq> basis;
    for (const auto& M : gab.basis()) {
        FqVec vals;
        vals.reserve(M.entries().size());
        for (auto v : M.entries()) vals.push_back(iso.at(v));
        basis.emplace_back(spec, k, m, std::move(vals));
    }
    const LinearMatrixCode seed_code(spec, k, m, std::move(basis));
    for (std::size_t i = 0; i < sample_count; ++i) {
        auto A = random_invertible(spec, k, rng);
        auto B = random_invertible(spec, m, rng);
        corpus.codes.push_back(transformed_code(A, seed_code, B));
    }
    return corpus;
}

}  // namespace rankforge
