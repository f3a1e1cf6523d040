#include "rankforge/serialize.hpp"

#include <fstream>

namespace rankforge {

namespace {

Json rational_to_json(const Rat& r) {
    return Json(r.str());  // "a" or "a/b"
}

std::uint64_t field_value(const Json& j, const Field& spec, const char* what) {
    if (!j.is_number_unsigned() && !j.is_number_integer())
        throw invalid_parameter_error(std::string(what) + ": expected an integer element value");
    const auto v = j.get<std::int64_t>();
    if (v < 0 || static_cast<std::uint64_t>(v) >= spec->order())
        throw invalid_parameter_error(std::string(what) + ": element value out of range");
    return static_cast<std::uint64_t>(v);
}

}  // namespace

Json field_to_json(const Field& spec) {
    Json j;
    j["p"] = spec->p();
    j["degree"] = spec->degree();
    j["modulus"] = spec->modulus();
    j["sub_degree"] = spec->sub_degree();
    return j;
}

Field field_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("degree"))
        throw invalid_parameter_error("field: expected {p, degree, modulus, sub_degree}");
    PrimePoly modulus;
    if (j.contains("modulus")) modulus = j.at("modulus").get<PrimePoly>();
    std::uint32_t sub = j.value("sub_degree", 0u);
    return FieldSpec::make(j.at("p").get<std::uint32_t>(), j.at("degree").get<std::uint32_t>(),
                           std::move(modulus), sub);
}

Json matrix_to_json(const MatrixFq& M) {
    Json j;
    j["rows"] = M.rows();
    j["cols"] = M.cols();
    j["entries"] = M.entries();
    return j;
}

MatrixFq matrix_from_json(const Field& spec, const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw invalid_parameter_error("matrix: expected {rows, cols, entries}");
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    FqVec entries;
    for (const auto& e : j.at("entries")) entries.push_back(field_value(e, spec, "matrix"));
    return MatrixFq(spec, rows, cols, std::move(entries));
}

namespace {

Json code_header(const Field& spec, int k, int m, const char* representation) {
    Json j;
    j["field"] = field_to_json(spec);
    j["k"] = k;
    j["m"] = m;
    j["representation"] = representation;
    return j;
}

}  // namespace

Json code_to_json(const LinearMatrixCode& C) {
    Json j = code_header(C.field(), C.k(), C.m(), "matrix-linear");
    Json basis = Json::array();
    for (const auto& B : C.basis()) basis.push_back(matrix_to_json(B));
    j["basis"] = std::move(basis);
    return j;
}

Json code_to_json(const GeneralCode& C) {
    Json j = code_header(C.field(), C.k(), C.m(), "matrix-set");
    Json words = Json::array();
    for (const auto& W : C.words()) words.push_back(matrix_to_json(W));
    j["words"] = std::move(words);
    return j;
}

Json code_to_json(const VectorCode& C) {
    Json j = code_header(C.field(), C.length(), C.field()->tower_m(), "vector");
    Json gen = Json::array();
    for (const auto& row : C.generator()) gen.push_back(row);
    j["generator"] = std::move(gen);
    return j;
}

AnyCode code_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("representation"))
        throw invalid_parameter_error("code file: expected {field, k, m, representation, ...}");
    Field spec = field_from_json(j.at("field"));
    const int k = j.at("k").get<int>();
    const int m = j.at("m").get<int>();
    const std::string rep = j.at("representation").get<std::string>();
    if (rep == "matrix-linear") {
        std::vector<MatrixFq> basis;
        for (const auto& b : j.value("basis", Json::array())) basis.push_back(matrix_from_json(spec, b));
        return LinearMatrixCode(spec, k, m, std::move(basis));
    }
    if (rep == "matrix-set") {
        std::vector<MatrixFq> words;
        for (const auto& w : j.at("words")) words.push_back(matrix_from_json(spec, w));
        return GeneralCode(spec, k, m, std::move(words));
    }
    if (rep == "vector") {
        if (m != static_cast<int>(spec->tower_m()))
            throw invalid_parameter_error("code file: m must equal the field's tower degree");
        std::vector<FqVec> gen;
        for (const auto& row : j.value("generator", Json::array())) {
            FqVec r;
            for (const auto& e : row) r.push_back(field_value(e, spec, "vector code"));
            gen.push_back(std::move(r));
        }
        return VectorCode(spec, k, std::move(gen));
    }
    throw invalid_parameter_error("code file: unknown representation '" + rep + "'");
}

Json weights_to_json(const WeightDistribution& W) {
    Json arr = Json::array();
    for (const auto& c : W.counts) arr.push_back(c.str());
    return arr;
}

WeightDistribution weights_from_json(const Json& j) {
    WeightDistribution W;
    for (const auto& e : j) {
        if (e.is_string())
            W.counts.emplace_back(e.get<std::string>());
        else
            W.counts.emplace_back(e.get<std::int64_t>());
    }
    return W;
}

Json distances_to_json(const DistanceDistribution& D) {
    Json arr = Json::array();
    for (const auto& v : D.values) arr.push_back(rational_to_json(v));
    return arr;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_parameter_error("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw invalid_parameter_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace rankforge
