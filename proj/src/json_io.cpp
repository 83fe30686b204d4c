#include "quatmap/json_io.hpp"

#include <cmath>
#include <string>

namespace quatmap {

namespace {

nlohmann::json quaternion_array(const Quaternion& q) {
    return nlohmann::json::array({q.w, q.x, q.y, q.z});
}

double finite_number(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number())
        throw ParseError(where + " is not a number");
    const double value = j.get<double>();
    if (!std::isfinite(value))
        throw ParseError(where + " is not finite");
    return value;
}

}  // namespace

void to_json(nlohmann::json& j, const Quaternion& q) { j = quaternion_array(q); }

void to_json(nlohmann::json& j, const RealMatrix4& f) {
    auto rows = nlohmann::json::array();
    for (const auto& row : f.m)
        rows.push_back(nlohmann::json::array({row[0], row[1], row[2], row[3]}));
    j = nlohmann::json{{"matrix", rows}};
}

void to_json(nlohmann::json& j, const Expansion& e) {
    j = nlohmann::json{{"E", quaternion_array(e.a0)},
                       {"I", quaternion_array(e.a1)},
                       {"J", quaternion_array(e.a2)},
                       {"K", quaternion_array(e.a3)}};
}

void to_json(nlohmann::json& j, const ComplexPair& p) {
    j = nlohmann::json{{"a", {p.a.real(), p.a.imag()}},
                       {"b", {p.b.real(), p.b.imag()}}};
}

Quaternion parse_quaternion(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4)
        throw ParseError("quaternion must be an array of 4 numbers");
    Quaternion q;
    for (std::size_t m = 0; m < 4; ++m)
        set_component(q, m,
                      finite_number(j[m], "quaternion component " + std::to_string(m)));
    return q;
}

RealMatrix4 parse_matrix4(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("matrix"))
        throw ParseError("input must be an object with a \"matrix\" key");
    const auto& rows = j.at("matrix");
    if (!rows.is_array() || rows.size() != 4)
        throw ParseError("\"matrix\" must be an array of 4 rows");
    RealMatrix4 f;
    for (std::size_t r = 0; r < 4; ++r) {
        const auto& row = rows[r];
        if (!row.is_array() || row.size() != 4)
            throw ParseError("matrix row " + std::to_string(r) +
                             " must have 4 entries");
        for (std::size_t c = 0; c < 4; ++c)
            f.m[r][c] = finite_number(row[c], "matrix entry (" + std::to_string(r) +
                                                  "," + std::to_string(c) + ")");
    }
    return f;
}

Expansion parse_expansion(const nlohmann::json& j) {
    if (!j.is_object())
        throw ParseError("expansion must be an object with keys E, I, J, K");
    Expansion e;
    const char* keys[4] = {"E", "I", "J", "K"};
    for (std::size_t m = 0; m < 4; ++m) {
        if (!j.contains(keys[m]))
            throw ParseError(std::string("expansion is missing key \"") + keys[m] +
                             "\"");
        e.coefficient(m) = parse_quaternion(j.at(keys[m]));
    }
    return e;
}

}  // namespace quatmap
