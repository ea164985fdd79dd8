#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cuspcert/manifold_spec.hpp"

namespace cuspcert::testing {

inline std::string data_path(const std::string& name) { return std::string(CUSPCERT_DATA_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const std::string& spec_text() {
  static const std::string text = read_text(data_path("k11n116.json"));
  return text;
}

inline const ManifoldSpec& knot_spec() {
  static const ManifoldSpec spec = parse_spec(spec_text());
  return spec;
}

inline std::mt19937_64 seeded(std::uint64_t salt) { return std::mt19937_64(0x9e3779b97f4a7c15ULL ^ salt); }

// Ascending coefficients of the polynomial as printed alongside the volume.
inline ZPoly printed_trace_polynomial() { return ZPoly{1, 1, 0, -3, 0, 4, -1, -2, 1}; }

}  // namespace cuspcert::testing
