#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rankforge/corpus.hpp>
#include <rankforge/mrd.hpp>
#include <rankforge/serialize.hpp>

using namespace rankforge;

TEST_CASE("field spec round trip") {
    auto spec = FieldSpec::make(3, 2, {2, 2, 1}, 1);
    auto parsed = field_from_json(field_to_json(spec));
    CHECK(parsed->same_as(*spec));
    CHECK(field_to_json(parsed) == field_to_json(spec));
    CHECK_THROWS_AS(field_from_json(Json{{"p", 2}}), invalid_parameter_error);
    CHECK_THROWS_AS(field_from_json(Json{{"p", 2}, {"degree", 2}, {"modulus", {1, 0, 1}}}),
                    invalid_parameter_error);  // reducible
}

TEST_CASE("matrix round trip validates entries") {
    auto F3 = FieldSpec::make(3, 1);
    MatrixFq M(F3, 2, 3, {0, 1, 2, 2, 1, 0});
    CHECK(matrix_from_json(F3, matrix_to_json(M)) == M);
    Json bad = matrix_to_json(M);
    bad["entries"][0] = 7;
    CHECK_THROWS_AS(matrix_from_json(F3, bad), invalid_parameter_error);
}

TEST_CASE("code files re-parse to equal codes, all three representations") {
    Rng rng(71);
    auto F3 = FieldSpec::make(3, 1);
    auto linear = random_linear_code(F3, 2, 3, 3, rng);
    auto loaded = code_from_json(code_to_json(linear));
    REQUIRE(std::holds_alternative<LinearMatrixCode>(loaded));
    CHECK(std::get<LinearMatrixCode>(loaded) == linear);
    // the stored basis is preserved verbatim, so the bytes round-trip too
    CHECK(code_to_json(std::get<LinearMatrixCode>(loaded)) == code_to_json(linear));

    GeneralCode words(F3, 2, 2,
                      {MatrixFq(F3, 2, 2, {1, 2, 0, 1}), MatrixFq(F3, 2, 2), MatrixFq(F3, 2, 2, {0, 0, 1, 1})});
    auto loaded_set = code_from_json(code_to_json(words));
    REQUIRE(std::holds_alternative<GeneralCode>(loaded_set));
    CHECK(std::get<GeneralCode>(loaded_set) == words);
    CHECK(code_to_json(std::get<GeneralCode>(loaded_set)) == code_to_json(words));

    auto tower = FieldSpec::make_tower(2, 3);
    auto vec = gabidulin_code(GabidulinSpec(tower, 3, 2));
    auto loaded_vec = code_from_json(code_to_json(vec));
    REQUIRE(std::holds_alternative<VectorCode>(loaded_vec));
    CHECK(std::get<VectorCode>(loaded_vec) == vec);
    CHECK(code_to_json(std::get<VectorCode>(loaded_vec)) == code_to_json(vec));
}

TEST_CASE("code file validation") {
    auto tower = FieldSpec::make_tower(2, 3);
    Json j = code_to_json(VectorCode::full_space(tower, 2));
    j["m"] = 2;  // must equal the tower degree
    CHECK_THROWS_AS(code_from_json(j), invalid_parameter_error);
    j["m"] = 3;
    j["representation"] = "mystery";
    CHECK_THROWS_AS(code_from_json(j), invalid_parameter_error);
}

TEST_CASE("weights serialize as decimal strings") {
    WeightDistribution W{{Int(1), Int("18446744073709551616"), Int(0)}};  // > 2^64
    Json j = weights_to_json(W);
    CHECK(j == Json::array({"1", "18446744073709551616", "0"}));
    CHECK(weights_from_json(j) == W);
    DistanceDistribution D{{Rat(1), Rat(3, 2)}};
    CHECK(distances_to_json(D) == Json::array({"1", "3/2"}));
}
