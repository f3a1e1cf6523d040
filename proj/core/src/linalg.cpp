#include "rankforge/linalg.hpp"

#include <algorithm>

namespace rankforge {

namespace {

void require_entry(const Field& spec, std::uint64_t v, const char* where) {
    if (v >= spec->order()) throw invalid_parameter_error(std::string(where) + ": value out of range");
    if (!spec->in_subfield(v))
        throw invalid_parameter_error(std::string(where) + ": entry not in the F_q subfield");
}

}  // namespace

MatrixFq::MatrixFq(Field spec, int rows, int cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols), vals_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 1 || cols < 1) throw invalid_parameter_error("matrix: dimensions must be positive");
}

MatrixFq::MatrixFq(Field spec, int rows, int cols, FqVec entries)
    : spec_(std::move(spec)), rows_(rows), cols_(cols), vals_(std::move(entries)) {
    if (rows < 1 || cols < 1) throw invalid_parameter_error("matrix: dimensions must be positive");
    if (vals_.size() != static_cast<std::size_t>(rows) * cols)
        throw invalid_parameter_error("matrix: entry count does not match dimensions");
    for (auto v : vals_) require_entry(spec_, v, "matrix");
}

void MatrixFq::set(int i, int j, std::uint64_t v) {
    require_entry(spec_, v, "matrix");
    vals_[static_cast<std::size_t>(i) * cols_ + j] = v;
}

MatrixFq MatrixFq::operator+(const MatrixFq& o) const {
    require_same_spec(spec_, o.spec_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw invalid_parameter_error("matrix add: shape mismatch");
    MatrixFq r(spec_, rows_, cols_);
    for (std::size_t i = 0; i < vals_.size(); ++i) r.vals_[i] = spec_->add(vals_[i], o.vals_[i]);
    return r;
}

MatrixFq MatrixFq::operator-(const MatrixFq& o) const { return *this + (-o); }

MatrixFq MatrixFq::operator-() const {
    MatrixFq r(spec_, rows_, cols_);
    for (std::size_t i = 0; i < vals_.size(); ++i) r.vals_[i] = spec_->neg(vals_[i]);
    return r;
}

MatrixFq MatrixFq::scaled(std::uint64_t c) const {
    require_entry(spec_, c, "matrix scale");
    MatrixFq r(spec_, rows_, cols_);
    for (std::size_t i = 0; i < vals_.size(); ++i) r.vals_[i] = spec_->mul(c, vals_[i]);
    return r;
}

MatrixFq MatrixFq::transposed() const {
    MatrixFq r(spec_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.vals_[static_cast<std::size_t>(j) * rows_ + i] = at(i, j);
    return r;
}

MatrixFq MatrixFq::operator*(const MatrixFq& o) const {
    require_same_spec(spec_, o.spec_);
    if (cols_ != o.rows_) throw invalid_parameter_error("matrix mul: shape mismatch");
    MatrixFq r(spec_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int l = 0; l < cols_; ++l) {
            const std::uint64_t a = at(i, l);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                auto& cell = r.vals_[static_cast<std::size_t>(i) * o.cols_ + j];
                cell = spec_->add(cell, spec_->mul(a, o.at(l, j)));
            }
        }
    return r;
}

bool MatrixFq::operator==(const MatrixFq& o) const {
    return spec_->same_as(*o.spec_) && rows_ == o.rows_ && cols_ == o.cols_ && vals_ == o.vals_;
}

bool MatrixFq::is_zero() const {
    return std::all_of(vals_.begin(), vals_.end(), [](std::uint64_t v) { return v == 0; });
}

MatrixFq MatrixFq::identity(Field spec, int n) {
    MatrixFq r(std::move(spec), n, n);
    for (int i = 0; i < n; ++i) r.set(i, i, 1);
    return r;
}

MatrixFq MatrixFq::unit(Field spec, int rows, int cols, int i, int j) {
    MatrixFq r(std::move(spec), rows, cols);
    r.set(i, j, 1);
    return r;
}

std::vector<int> rref_in_place(const Field& spec, std::vector<FqVec>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const std::uint64_t s = spec->inv(rows[r][c]);
        for (std::size_t j = c; j < ncols; ++j) rows[r][j] = spec->mul(s, rows[r][j]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const std::uint64_t f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                rows[i][j] = spec->sub(rows[i][j], spec->mul(f, rows[r][j]));
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(const MatrixFq& M) {
    std::vector<FqVec> rows;
    rows.reserve(M.rows());
    for (int i = 0; i < M.rows(); ++i) {
        FqVec row(M.cols());
        for (int j = 0; j < M.cols(); ++j) row[j] = M.at(i, j);
        rows.push_back(std::move(row));
    }
    return static_cast<int>(rref_in_place(M.field(), rows).size());
}

Subspace::Subspace(Field spec, int ambient_dim, std::vector<FqVec> generators)
    : spec_(std::move(spec)), ambient_(ambient_dim) {
    if (ambient_dim < 1) throw invalid_parameter_error("subspace: ambient dimension must be positive");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != ambient_dim)
            throw invalid_parameter_error("subspace: generator length mismatch");
        for (auto v : g) require_entry(spec_, v, "subspace");
    }
    const std::size_t rank = rref_in_place(spec_, generators).size();
    generators.resize(rank);
    basis_ = std::move(generators);
}

Subspace Subspace::zero(Field spec, int ambient_dim) { return {std::move(spec), ambient_dim, {}}; }

Subspace Subspace::full(Field spec, int ambient_dim) {
    std::vector<FqVec> gens;
    for (int i = 0; i < ambient_dim; ++i) {
        FqVec e(ambient_dim, 0);
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    return {std::move(spec), ambient_dim, std::move(gens)};
}

bool Subspace::contains(const FqVec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw invalid_parameter_error("subspace: length mismatch");
    FqVec w = v;
    for (const auto& row : basis_) {
        int pivot = -1;
        for (int j = 0; j < ambient_; ++j)
            if (row[j] != 0) {
                pivot = j;
                break;
            }
        if (pivot < 0 || w[pivot] == 0) continue;
        const std::uint64_t f = w[pivot];
        for (int j = 0; j < ambient_; ++j) w[j] = spec_->sub(w[j], spec_->mul(f, row[j]));
    }
    return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& row : other.basis_)
        if (!contains(row)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return spec_->same_as(*o.spec_) && ambient_ == o.ambient_ && basis_ == o.basis_;
}

bool Subspace::operator<(const Subspace& o) const {
    if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
    if (basis_.size() != o.basis_.size()) return basis_.size() < o.basis_.size();
    return basis_ < o.basis_;
}

Subspace colsp(const MatrixFq& M) {
    std::vector<FqVec> cols;
    for (int j = 0; j < M.cols(); ++j) {
        FqVec col(M.rows());
        for (int i = 0; i < M.rows(); ++i) col[i] = M.at(i, j);
        cols.push_back(std::move(col));
    }
    return {M.field(), M.rows(), std::move(cols)};
}

Subspace orthogonal_complement(const Subspace& U) {
    const Field& F = U.field();
    const int k = U.ambient_dim();
    // basis is already RREF; read pivot/free columns straight off it
    std::vector<int> pivot_of_row;
    std::vector<bool> is_pivot(k, false);
    for (const auto& row : U.basis())
        for (int j = 0; j < k; ++j)
            if (row[j] != 0) {
                pivot_of_row.push_back(j);
                is_pivot[j] = true;
                break;
            }
    std::vector<FqVec> gens;
    for (int f = 0; f < k; ++f) {
        if (is_pivot[f]) continue;
        FqVec w(k, 0);
        w[f] = 1;
        for (std::size_t r = 0; r < pivot_of_row.size(); ++r) w[pivot_of_row[r]] = F->neg(U.basis()[r][f]);
        gens.push_back(std::move(w));
    }
    return {F, k, std::move(gens)};
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    require_same_spec(a.field(), b.field());
    if (a.ambient_dim() != b.ambient_dim()) throw invalid_parameter_error("subspace sum: ambient mismatch");
    std::vector<FqVec> gens = a.basis();
    gens.insert(gens.end(), b.basis().begin(), b.basis().end());
    return {a.field(), a.ambient_dim(), std::move(gens)};
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
    return orthogonal_complement(subspace_sum(orthogonal_complement(a), orthogonal_complement(b)));
}

std::vector<Subspace> enumerate_subspaces(const Field& spec, int k, int u, std::uint64_t budget) {
    if (u < 0 || u > k) throw invalid_parameter_error("enumerate_subspaces: need 0 <= u <= k");
    const Int count = q_binomial(k, u, spec->q());
    if (count > Int(budget))
        throw resource_limit_error("enumerate_subspaces: " + count.str() + " subspaces exceed budget " +
                                   std::to_string(budget));
    std::vector<Subspace> out;
    if (u == 0) {
        out.push_back(Subspace::zero(spec, k));
        return out;
    }
    const auto scalars = spec->subfield_elements();
    // one RREF per (pivot pattern, free-entry filling); each subspace appears once
    std::vector<int> pivots(u);
    for (int i = 0; i < u; ++i) pivots[i] = i;
    while (true) {
        std::vector<std::pair<int, int>> free_pos;  // (row, col), col right of the row's pivot
        for (int i = 0; i < u; ++i)
            for (int j = pivots[i] + 1; j < k; ++j)
                if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
                    free_pos.emplace_back(i, j);
        std::vector<std::size_t> fill(free_pos.size(), 0);
        while (true) {
            std::vector<FqVec> rows(u, FqVec(k, 0));
            for (int i = 0; i < u; ++i) rows[i][pivots[i]] = 1;
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                rows[free_pos[t].first][free_pos[t].second] = scalars[fill[t]];
            out.emplace_back(spec, k, std::move(rows));
            std::size_t carry = free_pos.size();
            while (carry > 0 && ++fill[carry - 1] == scalars.size()) fill[--carry] = 0;
            if (carry == 0) break;
        }
        // next pivot combination
        int i = u - 1;
        while (i >= 0 && pivots[i] == k - u + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < u; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    std::sort(out.begin(), out.end(),
              [](const Subspace& x, const Subspace& y) { return x.basis() < y.basis(); });
    return out;
}

std::vector<Subspace> subspaces_of(const Subspace& V, int u, std::uint64_t budget) {
    const int i = V.dim();
    if (u < 0 || u > i) return {};
    if (u == 0) return {Subspace::zero(V.field(), V.ambient_dim())};
    std::vector<Subspace> out;
    for (const auto& small : enumerate_subspaces(V.field(), i, u, budget)) {
        // map coefficient rows through V's basis
        std::vector<FqVec> gens;
        for (const auto& coeffs : small.basis()) {
            FqVec row(V.ambient_dim(), 0);
            for (int t = 0; t < i; ++t) {
                if (coeffs[t] == 0) continue;
                for (int j = 0; j < V.ambient_dim(); ++j)
                    row[j] = V.field()->add(row[j], V.field()->mul(coeffs[t], V.basis()[t][j]));
            }
            gens.push_back(std::move(row));
        }
        out.emplace_back(V.field(), V.ambient_dim(), std::move(gens));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int q_binomial(std::int64_t a, std::int64_t b, std::uint64_t q) {
    if (q < 2) throw invalid_parameter_error("q_binomial: q must be >= 2");
    if (b < 0 || b > a) return 0;
    Int r = 1;
    const Int Q(q);
    for (std::int64_t i = 1; i <= b; ++i) {
        Int num = int_pow(Q, static_cast<std::uint64_t>(a - b + i)) - 1;
        Int den = int_pow(Q, static_cast<std::uint64_t>(i)) - 1;
        r *= num;
        r /= den;  // partial products are q-binomials, division is exact
    }
    return r;
}

Int total_subspace_count(int k, std::uint64_t q) {
    Int total = 0;
    for (int u = 0; u <= k; ++u) total += q_binomial(k, u, q);
    return total;
}

void LatticeFunction::set(const Subspace& U, Int value) {
    if (U.ambient_dim() != ambient_) throw invalid_parameter_error("lattice function: ambient mismatch");
    values_[U] = std::move(value);
}

const Int& LatticeFunction::at(const Subspace& U) const {
    auto it = values_.find(U);
    if (it == values_.end())
        throw incomplete_function_error("lattice function: value missing for a required subspace");
    return it->second;
}

Int moebius_invert(const LatticeFunction& g, const Subspace& V, std::uint64_t budget) {
    const int i = V.dim();
    const Int Q(V.field()->q());
    Int f = 0;
    for (int u = 0; u <= i; ++u) {
        Int layer = 0;
        for (const auto& U : subspaces_of(V, u, budget)) layer += g.at(U);
        const std::int64_t e2 = static_cast<std::int64_t>(i - u) * (i - u - 1) / 2;
        Int coeff = int_pow(Q, static_cast<std::uint64_t>(e2));
        if ((i - u) % 2 != 0) coeff = -coeff;
        f += coeff * layer;
    }
    return f;
}

}  // namespace rankforge
