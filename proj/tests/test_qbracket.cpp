#include "qkdv/format.hpp"
#include "qkdv/fock.hpp"
#include "qkdv/parser.hpp"
#include "qkdv/qbracket.hpp"

#include <gtest/gtest.h>

using namespace qkdv;

TEST(ModeAction, Examples) {
  EXPECT_TRUE(mode_action_closed(DiffPoly::v(0), 0, DiffPoly::v(0)).is_zero());
  EXPECT_EQ(mode_action_closed(DiffPoly::v(0), 1, DiffPoly::v(0)), parse("hbar"));
  EXPECT_THROW(mode_action_closed(DiffPoly::v(0), -1, DiffPoly::v(0)), std::invalid_argument);
}

TEST(ModeAction, MatchesFockOnFixedPairs) {
  const DiffPoly f = parse("v0^3/6 + hbar*v2/12");
  const DiffPoly g = parse("v0^2*v1 + v3");
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(mode_action_closed(f, n, g), phi_inv(nth_product(phi(f), n, phi(g)))) << "n=" << n;
  }
}

TEST(QuantumBracket, ClassicalDensitiesDoNotCommute) {
  const LocalFunctional h2(parse("v0^3/6"));
  const LocalFunctional h3(parse("v0^4/24"));
  const DiffPoly expected =
      parse("hbar/4*v0^4*v1 + hbar^2/12*(3*v0*v1*v2 + v0^2*v3) + hbar^3/720*v5");
  EXPECT_EQ(quantum_bracket(h2, h3).representative(), expected);
  EXPECT_FALSE(quantum_bracket(h2, h3).is_zero());
}

TEST(Hat, Examples) {
  EXPECT_EQ(hat_apply(parse("v0^2/2"), 1, DiffPoly::v(0)), parse("hbar*v0"));
  EXPECT_TRUE(hat_apply(parse("v0^3 + v1"), 2, DiffPoly::constant(1)).is_zero());
}

TEST(DOperator, Examples) {
  EXPECT_EQ(D_apply(DiffPoly::v(0)), parse("v0^2"));
  EXPECT_EQ(D_apply(parse("v0^2/2")), parse("v0^3 + hbar*v2/2"));
  EXPECT_TRUE(D_apply(DiffPoly::constant(7)).is_zero());
}
