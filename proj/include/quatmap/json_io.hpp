#pragma once

#include <stdexcept>

#include <json.hpp>

#include "quatmap/complex_map.hpp"
#include "quatmap/expansion.hpp"

namespace quatmap {

/// Raised by the validated parsers on wrong shape, non-numeric entries or
/// non-finite values; the message names the offending element.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// nlohmann ADL hooks. Wire formats:
//   Quaternion   [w, x, y, z]
//   RealMatrix4  {"matrix": [[4 numbers] x 4]}
//   Expansion    {"E": [4], "I": [4], "J": [4], "K": [4]}
//   ComplexPair  {"a": [re, im], "b": [re, im]}
void to_json(nlohmann::json& j, const Quaternion& q);
void to_json(nlohmann::json& j, const RealMatrix4& f);
void to_json(nlohmann::json& j, const Expansion& e);
void to_json(nlohmann::json& j, const ComplexPair& p);

Quaternion parse_quaternion(const nlohmann::json& j);
RealMatrix4 parse_matrix4(const nlohmann::json& j);
Expansion parse_expansion(const nlohmann::json& j);

}  // namespace quatmap
