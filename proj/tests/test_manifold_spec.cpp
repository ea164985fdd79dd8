#include <gtest/gtest.h>

#include "cuspcert/error.hpp"
#include "cuspcert/manifold_spec.hpp"
#include "test_support.hpp"

namespace cuspcert {
namespace {

Word random_word(std::mt19937_64& rng, std::size_t len) {
  static constexpr char kLetters[] = "abcABC";
  std::uniform_int_distribution<int> pick(0, 5);
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s.push_back(kLetters[pick(rng)]);
  return Word(s);
}

TEST(Word, InverseReversesAndSwapsCase) {
  EXPECT_EQ(Word("aaCbA").inverse().letters(), "aBcAA");
  EXPECT_EQ(Word("").inverse().letters(), "");
  EXPECT_THROW(Word("ab1"), ParseError);
}

TEST(Word, EvaluationProperties) {
  const auto& spec = testing::knot_spec();
  const auto id = OrderMat2::identity(spec.min_poly);
  auto rng = testing::seeded(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Word u = random_word(rng, 1 + trial % 6), v = random_word(rng, 1 + trial % 4);
    EXPECT_EQ(evaluate_word(spec, u + u.inverse()), id);
    EXPECT_EQ(evaluate_word(spec, u + v), evaluate_word(spec, u) * evaluate_word(spec, v));
    EXPECT_EQ(evaluate_word(spec, u, WordOrder::kRightToLeft),
              evaluate_word(spec, Word(std::string(u.letters().rbegin(), u.letters().rend()))));
  }
}

TEST(Presentation, DeterminantsAreExactlyOne) {
  const auto cert = verify_presentation_exact(testing::knot_spec());
  ASSERT_EQ(cert.determinants.size(), 3u);
  for (const auto& d : cert.determinants) {
    EXPECT_TRUE(d.is_one) << d.name;
    EXPECT_EQ(d.det.rep(), ZPoly{1});
  }
}

TEST(Presentation, RelatorsEvaluateToIdentity) {
  const auto cert = verify_presentation_exact(testing::knot_spec());
  EXPECT_EQ(cert.order, WordOrder::kLeftToRight);
  ASSERT_EQ(cert.relators.size(), 2u);
  for (const auto& r : cert.relators) EXPECT_EQ(std::abs(r.sign), 1) << r.word.letters();
  EXPECT_TRUE(cert.ok());
}

TEST(Presentation, FailsModuloThePrintedPolynomial) {
  auto doc = nlohmann::json::parse(testing::spec_text());
  doc["field"]["min_poly"] = {1, 1, 0, -3, 0, 4, -1, -2, 1};
  const auto cert = verify_presentation_exact(parse_spec(doc.dump()));
  EXPECT_FALSE(cert.determinants_ok());
  EXPECT_FALSE(cert.relators_ok());
}

TEST(Presentation, PeripheralWordsCommute) {
  const auto& spec = testing::knot_spec();
  const auto& pp = spec.peripherals.front();
  EXPECT_EQ(evaluate_word(spec, pp.meridian + pp.longitude), evaluate_word(spec, pp.longitude + pp.meridian));
}

TEST(SpecParsing, RejectsMalformedInput) {
  EXPECT_THROW((void)parse_spec("{"), ParseError);
  EXPECT_THROW((void)parse_spec(R"({"name":"x"})"), ParseError);
  auto doc = nlohmann::json::parse(testing::spec_text());
  auto bad_word = doc;
  bad_word["relators"] = {"abd"};
  EXPECT_THROW((void)parse_spec(bad_word.dump()), ParseError);
  auto non_monic = doc;
  non_monic["field"]["min_poly"] = {1, 2};
  EXPECT_THROW((void)parse_spec(non_monic.dump()), DomainError);
  auto bad_name = doc;
  bad_name["generators"]["Ab"] = doc["generators"]["a"];
  EXPECT_THROW((void)parse_spec(bad_name.dump()), ParseError);
}

TEST(SpecParsing, AcceptsDecimalStringCoefficients) {
  auto doc = nlohmann::json::parse(testing::spec_text());
  doc["generators"]["a"][1][1] = {"0"};
  doc["field"]["min_poly"][0] = "1";
  const auto spec = parse_spec(doc.dump());
  EXPECT_EQ(spec.generators.at('a'), testing::knot_spec().generators.at('a'));
}

TEST(SpecParsing, MissingImageIsDomainError) {
  std::map<char, int> images{{'a', 1}};
  EXPECT_THROW((void)evaluate_word(Word("ab"), images, 0, std::plus<>{}, std::negate<>{}), DomainError);
}

}  // namespace
}  // namespace cuspcert
