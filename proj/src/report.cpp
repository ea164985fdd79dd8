#include "cuspcert/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include "cuspcert/error.hpp"

namespace cuspcert::report {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 computation failed");
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

Json big(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json coeffs(const ZPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(big(c));
  return out;
}

namespace {

Json entry(const FiniteField& f, FiniteField::Code c) {
  if (f.degree() == 1) return c;
  Json v = Json::array();
  for (auto x : f.coeffs(c)) v.push_back(x);
  return v;
}

}  // namespace

Json matrix(const ProjMat2& m) {
  const auto& f = *m.field();
  return Json::array({Json::array({entry(f, m[0]), entry(f, m[1])}), Json::array({entry(f, m[2]), entry(f, m[3])})});
}

Json subgroup(const FiniteGroup& g, const Subgroup& h) {
  Json gens = Json::array();
  for (auto x : h.generators()) gens.push_back(matrix(g.element(x)));
  return Json{{"order", h.order()}, {"ids", h.ids()}, {"generators", gens}};
}

std::array<long long, 4> parse_int_matrix(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() || j[1].size() != 2)
    throw ParseError("expected a 2x2 integer matrix, got " + j.dump());
  std::array<long long, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& x = j[i / 2][i % 2];
    if (!x.is_number_integer()) throw ParseError("matrix entry is not an integer: " + x.dump());
    out[i] = x.get<long long>();
  }
  return out;
}

std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cuspcert::report
