#ifndef RANKFORGE_SERIALIZE_HPP
#define RANKFORGE_SERIALIZE_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "rankforge/code.hpp"
#include "rankforge/field.hpp"

namespace rankforge {

using Json = nlohmann::ordered_json;

Json field_to_json(const Field& spec);
Field field_from_json(const Json& j);

Json matrix_to_json(const MatrixFq& M);
MatrixFq matrix_from_json(const Field& spec, const Json& j);

/// Code files: {"field": ..., "k": ..., "m": ..., "representation":
/// "matrix-linear" | "matrix-set" | "vector", "basis"/"words"/"generator": ...}.
Json code_to_json(const LinearMatrixCode& C);
Json code_to_json(const GeneralCode& C);
Json code_to_json(const VectorCode& C);

using AnyCode = std::variant<LinearMatrixCode, GeneralCode, VectorCode>;
AnyCode code_from_json(const Json& j);

/// Counts as decimal strings; values may exceed any native width.
Json weights_to_json(const WeightDistribution& W);
WeightDistribution weights_from_json(const Json& j);
Json distances_to_json(const DistanceDistribution& D);

Json load_json_file(const std::string& path);

}  // namespace rankforge

#endif
