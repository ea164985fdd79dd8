#pragma once

#include <array>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cuspcert/group.hpp"
#include "cuspcert/psl2.hpp"
#include "cuspcert/zpoly.hpp"

namespace cuspcert::report {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "cuspcert";
inline constexpr std::string_view kToolVersion = "0.1.0";

std::string sha256_hex(std::string_view data);

// Integers that may exceed 64 bits are written as decimal strings.
Json big(const BigInt& v);
Json coeffs(const ZPoly& f);
// Row-major [[a11, a12], [a21, a22]]; prime-field entries as integers,
// extension-field entries as coefficient lists.
Json matrix(const ProjMat2& m);
// Sorted ids plus the generators recorded at construction, as matrices.
Json subgroup(const FiniteGroup& g, const Subgroup& h);

// Parses [[a, b], [c, d]] of integers; throws ParseError.
std::array<long long, 4> parse_int_matrix(const nlohmann::json& j);

// Stable serialization: two-space indent and a trailing newline.
std::string serialize(const Json& j);

}  // namespace cuspcert::report
