#include "rankforge/mrd.hpp"

#include <algorithm>

namespace rankforge {

namespace {

std::int64_t c2(std::int64_t n) { return n * (n - 1) / 2; }

void require_params(int k, int m, int d, std::uint64_t q) {
    if (q < 2) throw invalid_parameter_error("mrd: q must be >= 2");
    if (!(1 <= d && d <= k && k <= m))
        throw invalid_parameter_error("mrd: parameters must satisfy 1 <= d <= k <= m");
}

MrdVerdict verdict_from(Int size, int d, int k, int m, std::uint64_t q) {
    MrdVerdict v;
    v.size = std::move(size);
    v.d = d;
    v.bound = singleton_bound(k, m, d, q);
    v.mrd = (v.size == *v.bound);
    return v;
}

}  // namespace

LinearizedPolynomial::LinearizedPolynomial(Field spec, std::vector<std::uint64_t> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_)
        if (c >= spec_->order()) throw invalid_parameter_error("lin poly: coefficient out of range");
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

LinearizedPolynomial LinearizedPolynomial::q_monomial(Field spec, int j) {
    if (j < 0) throw invalid_parameter_error("lin poly: negative q-degree");
    std::vector<std::uint64_t> c(j + 1, 0);
    c[j] = 1;
    return {std::move(spec), std::move(c)};
}

std::uint64_t LinearizedPolynomial::eval(std::uint64_t beta) const {
    if (beta >= spec_->order()) throw invalid_parameter_error("lin poly: argument out of range");
    std::uint64_t acc = 0, power = beta;  // beta^(q^i)
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) power = spec_->frobenius_q(power);
        acc = spec_->add(acc, spec_->mul(coeffs_[i], power));
    }
    return acc;
}

bool LinearizedPolynomial::operator==(const LinearizedPolynomial& o) const {
    return spec_->same_as(*o.spec_) && coeffs_ == o.coeffs_;
}

Subspace root_space(const LinearizedPolynomial& p, std::uint64_t budget) {
    if (p.is_zero())
        throw invalid_parameter_error("root_space: zero polynomial, every element is a root");
    const Field& F = p.field();
    check_budget(F->order(), budget, "root_space field scan");
    const auto basis = ExtensionBasis::polynomial_basis(F);
    std::vector<FqVec> roots;
    for (std::uint64_t v = 0; v < F->order(); ++v)
        if (p.eval(v) == 0) roots.push_back(basis.coordinates(v));
    return {F, static_cast<int>(F->tower_m()), std::move(roots)};
}

LinearizedPolynomial subspace_polynomial(const Subspace& U, std::uint64_t budget) {
    const Field& F = U.field();
    const int m = static_cast<int>(F->tower_m());
    if (U.ambient_dim() != m)
        throw invalid_parameter_error("subspace_polynomial: subspace must live in F_q^m coordinates");
    const auto basis = ExtensionBasis::polynomial_basis(F);
    const auto scalars = F->subfield_elements();
    const int t = U.dim();
    Int count = int_pow(Int(F->q()), static_cast<std::uint64_t>(t));
    if (count > Int(budget)) throw resource_limit_error("subspace_polynomial: subspace too large");

    // materialize U as field elements
    std::vector<std::uint64_t> gamma;
    for (const auto& row : U.basis()) gamma.push_back(basis.combine(row));
    std::vector<std::uint64_t> elems;
    elems.reserve(static_cast<std::size_t>(1) << t);
    std::vector<std::size_t> idx(t, 0);
    while (true) {
        std::uint64_t acc = 0;
        for (int r = 0; r < t; ++r) acc = F->add(acc, F->mul(scalars[idx[r]], gamma[r]));
        elems.push_back(acc);
        int j = t - 1;
        while (j >= 0 && idx[j] + 1 == scalars.size()) idx[j--] = 0;
        if (j < 0) break;
        ++idx[j];
    }

    // literal product prod (x - gamma) as an ordinary polynomial over F_{q^m}
    std::vector<std::uint64_t> poly{1};  // constant 1, degree 0
    for (auto g : elems) {
        std::vector<std::uint64_t> next(poly.size() + 1, 0);
        const std::uint64_t ng = F->neg(g);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = F->add(next[i + 1], poly[i]);
            next[i] = F->add(next[i], F->mul(ng, poly[i]));
        }
        poly = std::move(next);
    }

    // only q-power monomials may survive
    std::vector<std::uint64_t> coeffs(t + 1, 0);
    std::uint64_t qpow = 1;
    std::size_t next_q = 0;
    for (std::size_t deg = 0; deg < poly.size(); ++deg) {
        if (next_q <= static_cast<std::size_t>(t) && deg == qpow) {
            coeffs[next_q] = poly[deg];
            ++next_q;
            qpow *= F->q();
        } else if (poly[deg] != 0) {
            throw inconsistent_input_error("subspace_polynomial: product is not linearized (internal)");
        }
    }
    return {F, std::move(coeffs)};
}

GabidulinSpec::GabidulinSpec(Field spec_, int k_, int d_, std::vector<std::uint64_t> points)
    : spec(std::move(spec_)), k(k_), d(d_), evaluation_points(std::move(points)) {
    const int m = static_cast<int>(spec->tower_m());
    if (!(1 <= d && d <= k && k <= m))
        throw invalid_parameter_error("gabidulin: parameters must satisfy 1 <= d <= k <= m");
    if (evaluation_points.empty())
        for (int i = 0; i < k; ++i) evaluation_points.push_back(spec->poly_basis_element(i));
    if (static_cast<int>(evaluation_points.size()) != k)
        throw invalid_parameter_error("gabidulin: expected k evaluation points");
    const auto basis = ExtensionBasis::polynomial_basis(spec);
    std::vector<FqVec> coords;
    for (auto v : evaluation_points) {
        if (v >= spec->order()) throw invalid_parameter_error("gabidulin: point out of range");
        coords.push_back(basis.coordinates(v));
    }
    if (static_cast<int>(rref_in_place(spec, coords).size()) != k)
        throw invalid_parameter_error("gabidulin: evaluation points are F_q-dependent");
}

VectorCode gabidulin_code(const GabidulinSpec& g) {
    std::vector<FqVec> gen;
    for (int j = 0; j <= g.k - g.d; ++j) {
        const auto mono = LinearizedPolynomial::q_monomial(g.spec, j);
        FqVec row(g.k);
        for (int i = 0; i < g.k; ++i) row[i] = mono.eval(g.evaluation_points[i]);
        gen.push_back(std::move(row));
    }
    return {g.spec, g.k, std::move(gen)};
}

Int singleton_bound(int k, int m, int d, std::uint64_t q) {
    require_params(k, m, d, q);
    return int_pow(Int(q), static_cast<std::uint64_t>(m) * (k - d + 1));
}

MrdVerdict is_mrd(const LinearMatrixCode& C, std::uint64_t budget) {
    if (C.dim() == 0) {
        MrdVerdict v;
        v.mrd = true;  // singleton codes are MRD by definition; d is undefined
        v.size = 1;
        return v;
    }
    return verdict_from(C.size(), min_distance(C, budget), C.k(), C.m(), C.field()->q());
}

MrdVerdict is_mrd(const GeneralCode& C, std::uint64_t budget) {
    if (C.size() == 1) {
        MrdVerdict v;
        v.mrd = true;
        v.size = 1;
        return v;
    }
    return verdict_from(Int(C.size()), min_distance(C, budget), C.k(), C.m(), C.field()->q());
}

WeightDistribution mrd_weight_distribution(int k, int m, int d, std::uint64_t q) {
    require_params(k, m, d, q);
    const Int Q(q);
    WeightDistribution W;
    W.counts.assign(k + 1, 0);
    W.counts[0] = 1;
    for (int i = d; i <= k; ++i) {
        const Int outer = q_binomial(k, i, q);
        Int acc = 0;
        for (int u = 0; u <= i; ++u) {
            Int b = q_binomial(i, u, q);
            if (b == 0) continue;
            std::uint64_t e = static_cast<std::uint64_t>(c2(i - u));
            if (u >= d) e += static_cast<std::uint64_t>(m) * (u - d + 1);
            Int term = int_pow(Q, e) * b;
            if ((i - u) % 2 != 0) term = -term;
            acc += term;
        }
        W.counts[i] = outer * acc;
    }
    return W;
}

std::pair<int, WeightDistribution> quasi_mrd_weights(int k, int m, int dim, std::uint64_t q) {
    if (q < 2) throw invalid_parameter_error("quasi_mrd: q must be >= 2");
    if (!(1 <= k && k <= m)) throw invalid_parameter_error("quasi_mrd: need 1 <= k <= m");
    if (dim < 1 || dim > k * m - 1) throw invalid_parameter_error("quasi_mrd: need 1 <= dim <= km-1");
    if (dim % m == 0)
        throw not_applicable_error("quasi_mrd: dim(C) = 0 mod m contradicts d + d_perp = k + 1");
    const int d = k - (dim + m - 1) / m + 1;
    const Int Q(q);
    WeightDistribution W;
    W.counts.assign(k + 1, 0);
    W.counts[0] = 1;
    for (int i = d; i <= k; ++i) {
        Rat acc = 0;
        for (int u = 0; u <= i - d; ++u) {
            Int b = q_binomial(i, u, q);
            if (b == 0) continue;
            const std::int64_t e =
                static_cast<std::int64_t>(dim) - static_cast<std::int64_t>(m) * (k + u - i);
            Rat term = Rat(int_pow(Q, static_cast<std::uint64_t>(c2(u))) * b) * (rat_pow(Q, e) - Rat(1));
            if (u % 2 != 0) term = -term;
            acc += term;
        }
        Rat w = Rat(q_binomial(k, i, q)) * acc;
        if (!is_integral(w))
            throw inconsistent_input_error("quasi_mrd: W_" + std::to_string(i) + " is not an integer");
        W.counts[i] = to_integer(w);
    }
    Int total = W.total();
    const Int expected = int_pow(Q, static_cast<std::uint64_t>(dim));
    if (total != expected)
        throw inconsistent_input_error("quasi_mrd: checksum failed, sum " + total.str() +
                                       " != q^dim = " + expected.str());
    return {d, std::move(W)};
}

}  // namespace rankforge
