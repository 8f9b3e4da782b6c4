#include "qkdv/format.hpp"

#include "qkdv/parser.hpp"
#include "qkdv/random.hpp"

#include <gtest/gtest.h>

using namespace qkdv;

namespace {

const DiffPoly v = DiffPoly::v(0);
const DiffPoly v1 = DiffPoly::v(1);
const DiffPoly v2 = DiffPoly::v(2);
const Coefficient s = Coefficient::s_power(1);
const Coefficient hbar = Coefficient::hbar_power(1);

Coefficient q(long a, long b) { return Coefficient(ratio(a, b)); }

void expect_error_at(const std::string& text, int line, int column, int rank = 1) {
  try {
    parse(text, rank);
    ADD_FAILURE() << "no error for " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << text << ": " << e.what();
    EXPECT_EQ(e.column(), column) << text << ": " << e.what();
  }
}

}  // namespace

TEST(Parser, Examples) {
  EXPECT_EQ(parse("v0^3/6 + hbar*v2/12"), q(1, 6) * pow(v, 3) + q(1, 12) * hbar * v2);
  EXPECT_EQ(parse("1"), DiffPoly::constant(1));
  EXPECT_EQ(parse("(v0 + s*v1)^2"), v * v + Coefficient(2) * s * v * v1 + hbar * v1 * v1);
}

TEST(Parser, Precedence) {
  // ^ binds tighter than unary minus and *, and - is left-associative
  EXPECT_EQ(parse("-v0^2"), -(v * v));
  EXPECT_EQ(parse("2*v0^2"), Coefficient(2) * v * v);
  EXPECT_EQ(parse("v0 - v1 - v2"), v - v1 - v2);
  EXPECT_EQ(parse("1/2/3"), DiffPoly::constant(q(1, 6)));
  EXPECT_EQ(parse("hbar"), parse("s^2"));
  EXPECT_EQ(parse("v0^0"), DiffPoly::constant(1));
  EXPECT_EQ(parse("  v0\n  * v1 "), v * v1);
}

TEST(Parser, RankTwoSymbols) {
  const DiffPoly p = parse("v1,0 * v2,3 - 1/2*v2,0", 2);
  EXPECT_EQ(p, DiffPoly::variable(1, 0, 2) * DiffPoly::variable(2, 3, 2) -
                   q(1, 2) * DiffPoly::variable(2, 0, 2));
  EXPECT_THROW(parse("v3,0", 2), ParseError);
  EXPECT_THROW(parse("v1", 2), ParseError);
}

TEST(Parser, ErrorPositions) {
  expect_error_at("v0 + ", 1, 6);
  expect_error_at("v0 ^ -1", 1, 6);
  expect_error_at("v0^(1/2)", 1, 4);
  expect_error_at("v0 +\n  q", 2, 3);
  expect_error_at("v0 $ v1", 1, 4);
  expect_error_at("(v0 + v1", 1, 9);
  expect_error_at("v0 / v1", 1, 4);
  expect_error_at("1.5 * v0", 1, 1);
  expect_error_at("v0 v1", 1, 4);
}

TEST(Parser, RejectsBadExponents) {
  EXPECT_THROW(parse("v0^-2"), ParseError);
  EXPECT_THROW(parse("v0^v1"), ParseError);
  EXPECT_THROW(parse("v0^1.5"), ParseError);
  EXPECT_THROW(parse("1/0"), ParseError);
}

TEST(Format, CanonicalText) {
  EXPECT_EQ(to_text(q(1, 6) * pow(v, 3) + q(1, 12) * hbar * v2), "1/6 * v0^3 + 1/12 * s^2 * v2");
  EXPECT_EQ(to_text(DiffPoly()), "0");
  EXPECT_EQ(to_text(DiffPoly::variable(2, 1, 2)), "1 * v2,1");
}

TEST(Format, RoundTripOnRandomPolynomials) {
  Rng rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const int rank = i % 4 == 3 ? 2 : 1;
    const DiffPoly p = random_diffpoly(rng, {.rank = rank, .max_weight = 7, .max_terms = 6, .min_weight = 0});
    const std::string text = to_text(p);
    ASSERT_EQ(parse(text, rank), p) << text;
    ASSERT_EQ(to_text(parse(text, rank)), text);
  }
}

TEST(Format, JsonRoundTrip) {
  Rng rng(2025);
  for (int i = 0; i < 200; ++i) {
    const int rank = i % 2 == 0 ? 1 : 3;
    const DiffPoly p = random_diffpoly(rng, {.rank = rank});
    ASSERT_EQ(diffpoly_from_json(to_json(p), rank), p) << p;
    ASSERT_EQ(diffpoly_from_json(nlohmann::json::parse(to_json(p).dump()), rank), p);
  }
}

TEST(Format, JsonBigIntegersAreStrings) {
  Integer big = 1;
  for (int i = 0; i < 30; ++i) {
    big *= 1000;
  }
  const DiffPoly p = Coefficient(Rational(big)) * v;
  const nlohmann::json j = to_json(p);
  EXPECT_TRUE(j[0]["coeff"]["num"].is_string());
  EXPECT_TRUE(j[0]["coeff"]["den"].is_number_integer());
  EXPECT_EQ(diffpoly_from_json(j), p);
}

TEST(Format, JsonRejectsMalformedInput) {
  EXPECT_THROW(diffpoly_from_json(nlohmann::json::parse(R"([{"coeff": {"num": 1}}])")), std::exception);
  EXPECT_THROW(diffpoly_from_json(nlohmann::json::parse(R"({"x": 1})")), std::exception);
}
