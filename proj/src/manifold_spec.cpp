#include "cuspcert/manifold_spec.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cuspcert {

using nlohmann::json;

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_)
    if (!std::isalpha(static_cast<unsigned char>(c))) throw ParseError("word '" + letters_ + "' contains a non-letter");
}

Word Word::inverse() const {
  std::string r(letters_.rbegin(), letters_.rend());
  for (auto& c : r) c = static_cast<char>(c ^ 0x20);
  return Word(std::move(r));
}

std::string_view to_string(WordOrder order) {
  return order == WordOrder::kLeftToRight ? "left-to-right" : "right-to-left";
}

bool OrderMat2::is_scalar(long c) const {
  const auto& f = e[0].modulus_ptr();
  return e[0] == order_reduce(ZPoly{c}, f) && e[1].is_zero() && e[2].is_zero() && e[3] == order_reduce(ZPoly{c}, f);
}

OrderMat2 OrderMat2::identity(const std::shared_ptr<const ZPoly>& f) {
  return {{OrderElement::one(f), OrderElement::zero(f), OrderElement::zero(f), OrderElement::one(f)}};
}

OrderMat2 operator*(const OrderMat2& a, const OrderMat2& b) {
  return {{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3], a.e[2] * b.e[0] + a.e[3] * b.e[2],
           a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
}

namespace {

BigInt parse_coefficient(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer literal '" + j.get<std::string>() + "'");
    return v;
  }
  throw ParseError("coefficient must be an integer or a decimal string, got " + j.dump());
}

ZPoly parse_poly(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient list, got " + j.dump());
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(parse_coefficient(x));
  return ZPoly(std::move(c));
}

Word parse_word(const json& j, const std::map<char, OrderMat2>& gens) {
  if (!j.is_string()) throw ParseError("word must be a string, got " + j.dump());
  Word w(j.get<std::string>());
  for (char c : w.letters()) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (!gens.contains(lower)) throw ParseError("word '" + w.letters() + "' uses unknown generator '" + lower + "'");
  }
  return w;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

ManifoldSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("spec is not valid JSON: ") + e.what());
  }
  ManifoldSpec spec;
  spec.name = require(doc, "name").get<std::string>();
  auto f = parse_poly(require(require(doc, "field"), "min_poly"));
  if (!f.is_monic() || f.degree() < 1) throw DomainError("min_poly must be monic of positive degree");
  spec.min_poly = std::make_shared<const ZPoly>(std::move(f));

  const auto& gens = require(doc, "generators");
  if (!gens.is_object()) throw ParseError("generators must be an object");
  for (const auto& [name, m] : gens.items()) {
    if (name.size() != 1 || !std::islower(static_cast<unsigned char>(name[0])))
      throw ParseError("generator name '" + name + "' must be a single lowercase letter");
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 || !m[1].is_array() || m[1].size() != 2)
      throw ParseError("generator '" + name + "' must be a 2x2 matrix");
    auto entry = [&](int r, int c) { return order_reduce(parse_poly(m[r][c]), spec.min_poly); };
    spec.generators.emplace(name[0], OrderMat2{{entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)}});
  }
  if (doc.contains("relators"))
    for (const auto& r : doc.at("relators")) spec.relators.push_back(parse_word(r, spec.generators));
  if (doc.contains("peripherals"))
    for (const auto& p : doc.at("peripherals"))
      spec.peripherals.push_back({parse_word(require(p, "meridian"), spec.generators),
                                  parse_word(require(p, "longitude"), spec.generators)});
  if (doc.contains("metadata"))
    for (const auto& [k, v] : doc.at("metadata").items()) spec.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
  return spec;
}

ManifoldSpec load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

OrderMat2 evaluate_word(const ManifoldSpec& spec, const Word& w, WordOrder order) {
  return evaluate_word(
      w, spec.generators, OrderMat2::identity(spec.min_poly), [](const OrderMat2& a, const OrderMat2& b) { return a * b; },
      [](const OrderMat2& m) { return m.adjugate(); }, order);
}

bool PresentationCertificate::determinants_ok() const {
  return std::all_of(determinants.begin(), determinants.end(), [](const auto& d) { return d.is_one; });
}

bool PresentationCertificate::relators_ok() const {
  return std::all_of(relators.begin(), relators.end(), [](const auto& r) { return r.sign != 0; });
}

namespace {

std::vector<RelatorCheck> check_relators(const ManifoldSpec& spec, WordOrder order) {
  std::vector<RelatorCheck> out;
  for (const auto& w : spec.relators) {
    const OrderMat2 m = evaluate_word(spec, w, order);
    const int sign = m.is_scalar(1) ? 1 : (m.is_scalar(-1) ? -1 : 0);
    out.push_back({w, sign});
  }
  return out;
}

}  // namespace

PresentationCertificate verify_presentation_exact(const ManifoldSpec& spec) {
  PresentationCertificate cert;
  const auto one = OrderElement::one(spec.min_poly);
  for (const auto& [name, m] : spec.generators) {
    auto det = m.det();
    const bool is_one = det == one;
    cert.determinants.push_back({name, std::move(det), is_one});
  }
  cert.relators = check_relators(spec, WordOrder::kLeftToRight);
  const bool all_fail = !cert.relators.empty() &&
                        std::none_of(cert.relators.begin(), cert.relators.end(), [](const auto& r) { return r.sign != 0; });
  if (all_fail) {
    auto rtl = check_relators(spec, WordOrder::kRightToLeft);
    if (std::all_of(rtl.begin(), rtl.end(), [](const auto& r) { return r.sign != 0; })) {
      cert.order = WordOrder::kRightToLeft;
      cert.relators = std::move(rtl);
    }
  }
  return cert;
}

}  // namespace cuspcert
