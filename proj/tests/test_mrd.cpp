#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rankforge/corpus.hpp>
#include <rankforge/mrd.hpp>

#include "oracles.hpp"

using namespace rankforge;

namespace {
const Field F4 = FieldSpec::make(2, 2, {}, 1);    // q=2, m=2
const Field F16 = FieldSpec::make(2, 4, {}, 1);   // q=2, m=4
const Field F2 = FieldSpec::make(2, 1);
}  // namespace

TEST_CASE("linearized polynomial evaluation") {
    auto id = LinearizedPolynomial::x(F16);
    for (std::uint64_t b = 0; b < 16; ++b) CHECK(id.eval(b) == b);
    CHECK(LinearizedPolynomial::zero(F16).eval(7) == 0);
    CHECK(LinearizedPolynomial::zero(F16).q_degree() == -1);
    // trailing zeros are stripped
    CHECK(LinearizedPolynomial(F16, {1, 0, 0}).q_degree() == 0);
}

TEST_CASE("linearized polynomials are F_q-linear maps") {
    Rng rng(53);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::uint64_t> coeffs(1 + rng.below(4));
        for (auto& c : coeffs) c = rng.below(16);
        LinearizedPolynomial p(F16, coeffs);
        for (auto a : F16->subfield_elements())
            for (int s = 0; s < 5; ++s) {
                const std::uint64_t beta = rng.below(16), gamma = rng.below(16);
                const std::uint64_t lhs = p.eval(F16->add(F16->mul(a, beta), gamma));
                const std::uint64_t rhs = F16->add(F16->mul(a, p.eval(beta)), p.eval(gamma));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("root spaces") {
    CHECK(root_space(LinearizedPolynomial::x(F4)).dim() == 0);
    // x^q - x on F_4 vanishes exactly on F_2
    LinearizedPolynomial frob_minus_id(F4, {1, 1});  // x + x^2 in characteristic 2
    auto V = root_space(frob_minus_id);
    CHECK(V.dim() == 1);
    auto basis = ExtensionBasis::polynomial_basis(F4);
    CHECK(V.contains(basis.coordinates(1)));
    CHECK_THROWS_AS(root_space(LinearizedPolynomial::zero(F4)), invalid_parameter_error);

    Rng rng(59);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::uint64_t> coeffs(1 + rng.below(4));
        for (auto& c : coeffs) c = rng.below(16);
        LinearizedPolynomial p(F16, coeffs);
        if (p.is_zero()) continue;
        CHECK(root_space(p).dim() <= p.q_degree());
    }
}

TEST_CASE("subspace polynomials") {
    auto pz = subspace_polynomial(Subspace::zero(F4, 2));
    CHECK(pz.coeffs() == std::vector<std::uint64_t>{1});  // p(x) = x
    Subspace prime_subfield(F4, 2, {{1, 0}});
    auto p2 = subspace_polynomial(prime_subfield);
    CHECK(p2.coeffs() == std::vector<std::uint64_t>{1, 1});  // x + x^q = x^2 + x
    // V(p_U) = U for every subspace of F_16 over F_2 up to dimension 2
    for (int u = 0; u <= 2; ++u)
        for (const auto& U : enumerate_subspaces(F16, 4, u)) {
            auto pU = subspace_polynomial(U);
            CHECK(pU.q_degree() == u);
            CHECK(root_space(pU) == U);
        }
}

TEST_CASE("gabidulin codes: small parameter checks") {
    // q=2, m=2, k=2, d=2: one generator row, 4 words, all nonzero of rank 2
    auto C = gabidulin_code(GabidulinSpec(F4, 2, 2));
    CHECK(C.dim() == 1);
    CHECK(C.size() == 4);
    int nonzero = 0;
    for (const auto& v : oracles::all_vectors_full_field(F4, 1)) {
        FqVec word{F4->mul(v[0], C.generator()[0][0]), F4->mul(v[0], C.generator()[0][1])};
        if (word[0] || word[1]) {
            ++nonzero;
            CHECK(vector_rank(F4, word) == 2);
        }
    }
    CHECK(nonzero == 3);
    auto W = weight_distribution(gamma_expand(C, ExtensionBasis::polynomial_basis(F4)));
    CHECK(W.counts == std::vector<Int>{1, 0, 3});

    // q=2, m=4, k=4, d=4: dimension 1, 16 words, nonzero words of rank 4
    auto C4 = gabidulin_code(GabidulinSpec(F16, 4, 4));
    CHECK(C4.dim() == 1);
    auto W4 = weight_distribution(gamma_expand(C4, ExtensionBasis::polynomial_basis(F16)));
    CHECK(W4.counts == std::vector<Int>{1, 0, 0, 0, 15});

    // d=1 gives the whole space
    auto Cfull = gabidulin_code(GabidulinSpec(F4, 2, 1));
    CHECK(Cfull == VectorCode::full_space(F4, 2));
}

TEST_CASE("gabidulin validates its evaluation points") {
    CHECK_THROWS_AS(GabidulinSpec(F16, 2, 1, {1, 1}), invalid_parameter_error);
    CHECK_THROWS_AS(GabidulinSpec(F16, 2, 1, {0, 1}), invalid_parameter_error);
    CHECK_THROWS_AS(GabidulinSpec(F4, 3, 1), invalid_parameter_error);  // k > m
    CHECK_NOTHROW(GabidulinSpec(F16, 2, 1, {3, 7}));
}

TEST_CASE("singleton bound") {
    CHECK(singleton_bound(2, 3, 1, 2) == 64);       // q^{mk}
    CHECK(singleton_bound(2, 3, 2, 2) == 8);
    CHECK(singleton_bound(3, 3, 3, 5) == 125);      // q^m
    CHECK_THROWS_AS(singleton_bound(3, 2, 1, 2), invalid_parameter_error);
}

TEST_CASE("is_mrd") {
    CHECK(is_mrd(LinearMatrixCode::zero_code(F2, 2, 2)).mrd);  // singleton, d undefined
    CHECK_FALSE(is_mrd(LinearMatrixCode::zero_code(F2, 2, 2)).d.has_value());
    auto bad = LinearMatrixCode::span(F2, 2, 2, {MatrixFq(F2, 2, 2, {1, 0, 0, 0})});
    auto v = is_mrd(bad);
    CHECK_FALSE(v.mrd);
    CHECK(*v.d == 1);
    CHECK(v.size == 2);
    CHECK(*v.bound == 16);
    GeneralCode single(F2, 2, 2, {MatrixFq(F2, 2, 2, {1, 1, 0, 0})});
    CHECK(is_mrd(single).mrd);
}

TEST_CASE("gabidulin expansions are MRD on a small grid") {
    for (std::uint64_t q : {2, 3}) {
        const int mmax = q == 2 ? 4 : 3;
        for (int m = 1; m <= mmax; ++m) {
            auto spec = FieldSpec::make_tower(q, m);
            auto basis = ExtensionBasis::polynomial_basis(spec);
            for (int k = 1; k <= m; ++k)
                for (int d = 1; d <= k; ++d) {
                    auto C = gabidulin_code(GabidulinSpec(spec, k, d));
                    CHECK(C.dim() == k - d + 1);
                    auto M = gamma_expand(C, basis);
                    if (M.dim() > 0) CHECK(min_distance(M) == d);
                    CHECK(is_mrd(M).mrd);
                }
        }
    }
}

TEST_CASE("mrd weight distribution formula") {
    CHECK(mrd_weight_distribution(2, 2, 2, 2).counts == std::vector<Int>{1, 0, 3});
    // d=1 gives the rank census of the full matrix space: (1, 9, 6) at q=2, k=m=2
    std::vector<Int> byrank(3, 0);
    for (const auto& M : oracles::all_matrices(F2, 2, 2)) byrank[oracles::rank_by_span_count(M)] += 1;
    CHECK(mrd_weight_distribution(2, 2, 1, 2).counts == byrank);
    // checksum and positivity of W_{d+l} across the formula grid
    for (std::uint64_t q : {2, 3})
        for (int m = 1; m <= 4; ++m)
            for (int k = 1; k <= m; ++k)
                for (int d = 1; d <= k; ++d) {
                    auto W = mrd_weight_distribution(k, m, d, q);
                    CHECK(W.total() == singleton_bound(k, m, d, q));
                    for (int l = 0; l + d <= k; ++l) CHECK(W.counts[d + l] > 0);
                }
}

TEST_CASE("mrd distance distribution: a coset of a gabidulin expansion") {
    // translating an MRD code preserves its distance distribution, which the
    // formula predicts from (k, m, d) alone
    auto spec = FieldSpec::make_tower(2, 3);
    auto M = gamma_expand(gabidulin_code(GabidulinSpec(spec, 3, 2)),
                          ExtensionBasis::polynomial_basis(spec));
    MatrixFq shift(spec, 3, 3);
    shift.set(0, 0, 1);
    shift.set(2, 1, 1);
    auto translated = coset(M, shift);
    auto D = distance_distribution(translated);
    auto predicted = mrd_weight_distribution(3, 3, 2, 2);
    REQUIRE(D.values.size() == predicted.counts.size());
    for (std::size_t i = 0; i < D.values.size(); ++i) CHECK(D.values[i] == Rat(predicted.counts[i]));
    CHECK(is_mrd(translated).mrd);
}

TEST_CASE("quasi-MRD closed form") {
    auto [d1, W1] = quasi_mrd_weights(2, 2, 1, 2);
    CHECK(d1 == 2);
    CHECK(W1.counts == std::vector<Int>{1, 0, 1});
    auto [d3, W3] = quasi_mrd_weights(2, 2, 3, 2);
    CHECK(d3 == 1);
    CHECK(W3.total() == 8);
    CHECK_THROWS_AS(quasi_mrd_weights(2, 2, 2, 2), not_applicable_error);
    CHECK_THROWS_AS(quasi_mrd_weights(3, 3, 6, 2), not_applicable_error);
}

TEST_CASE("dual of an MRD expansion is MRD with the complementary distance") {
    auto spec = FieldSpec::make_tower(2, 3);
    auto basis = ExtensionBasis::polynomial_basis(spec);
    for (int d = 2; d <= 3; ++d) {
        auto M = gamma_expand(gabidulin_code(GabidulinSpec(spec, 3, d)), basis);
        auto D = dual_code(M);
        auto v = is_mrd(D);
        CHECK(v.mrd);
        CHECK(*v.d == 3 - d + 2);
    }
}

TEST_CASE("MRD characterization d + d_perp = k + 2 on the 2x2 lattice") {
    for (int dim = 1; dim <= 3; ++dim)
        for (const auto& C : all_linear_codes(F2, 2, 2, dim)) {
            auto D = dual_code(C);
            const bool mrd_c = is_mrd(C).mrd;
            const bool mrd_d = is_mrd(D).mrd;
            const bool sum_rule = min_distance(C) + min_distance(D) == 2 + 2;
            CHECK(mrd_c == mrd_d);
            CHECK(mrd_c == sum_rule);
        }
}

TEST_CASE("MRD characterization on random 3x3 codes") {
    Rng rng(73);
    auto F3 = FieldSpec::make(3, 1);
    for (int t = 0; t < 30; ++t) {
        auto C = random_linear_code(F3, 3, 3, 1 + static_cast<int>(rng.below(8)), rng);
        auto D = dual_code(C);
        const bool mrd_c = is_mrd(C).mrd;
        CHECK(mrd_c == is_mrd(D).mrd);
        CHECK(mrd_c == (min_distance(C) + min_distance(D) == 3 + 2));
    }
}
