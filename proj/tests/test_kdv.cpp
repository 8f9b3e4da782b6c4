#include "qkdv/format.hpp"
#include "qkdv/kdv.hpp"
#include "qkdv/parser.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace qkdv;

namespace {

const char* const kDisplayed[] = {
    "v0",
    "v0^2/2",
    "v0^3/6 + hbar*v2/12",
    "v0^4/24 + hbar/24*(v1^2 + 2*v0*v2)",
    "v0^5/120 + hbar/24*(v0*v1^2 + v0^2*v2) + hbar^2/360*v4",
    "v0^6/720 + hbar/72*(3/2*v0^2*v1^2 + v0^3*v2) + hbar^2/360*(v0*v4 + 2*v1*v3 + 3/2*v2^2)",
};

FockState b() { return FockState::generator(); }

}  // namespace

TEST(Trees, Counts) {
  EXPECT_EQ(enumerate_trees(1).size(), 1u);
  EXPECT_EQ(enumerate_trees(3).size(), 2u);
  EXPECT_EQ(enumerate_trees(4).size(), 6u);
  EXPECT_EQ(enumerate_trees(6).size(), 120u);
  EXPECT_THROW(enumerate_trees(0), std::invalid_argument);
}

TEST(Trees, SmallShapes) {
  const auto bt3 = enumerate_trees(3);
  EXPECT_EQ(bt3[0].to_string(), "((1 2) 3)");
  EXPECT_EQ(bt3[1].to_string(), "(1 (2 3))");
  std::vector<std::string> bt4;
  for (const auto& t : enumerate_trees(4)) {
    bt4.push_back(t.to_string());
  }
  const std::vector<std::string> expected{"(((1 2) 3) 4)", "((1 (2 3)) 4)", "((1 2) (3 4))",
                                          "((1 2) (3 4))", "(1 ((2 3) 4))", "(1 (2 (3 4)))"};
  EXPECT_EQ(bt4, expected);
  for (const auto& t : enumerate_trees(5)) {
    EXPECT_EQ(t.leaf_count(), 5);
  }
}

TEST(Trees, States) {
  EXPECT_EQ(tree_state(LabeledBinaryTree::leaf(1)), b());
  const auto bt3 = enumerate_trees(3);
  EXPECT_EQ(tree_state(bt3[0]), normal_prod(normal_prod(b(), b()), b()));
  EXPECT_EQ(tree_state(bt3[1]), normal_prod(b(), normal_prod(b(), b())));
}

TEST(Trees, ZThreeAndFour) {
  const Coefficient hbar = Coefficient::s_power(2);
  const FockState b3 = normal_prod(b(), normal_prod(b(), b()));
  EXPECT_EQ(Z_n(3), b3 + hbar * Coefficient(Rational(1, 2)) * translate(b(), 2));
  const FockState b4 = normal_prod(b(), b3);
  const FockState tb = translate(b());
  EXPECT_EQ(Z_n(4), b4 + hbar * normal_prod(tb, tb) + Coefficient(2) * hbar * normal_prod(b(), translate(b(), 2)));
}

TEST(Trees, ZRecursion) {
  std::vector<FockState> z{FockState(), b()};
  for (int n = 2; n <= 6; ++n) {
    FockState acc;
    for (int i = 1; i < n; ++i) {
      acc += normal_prod(z[i], z[n - i]);
    }
    acc *= Coefficient(Rational(1, n - 1));
    EXPECT_EQ(Z_n(n), acc) << n;
    z.push_back(acc);
  }
}

TEST(Hamiltonians, DisplayedDensities) {
  for (int n = 0; n <= 5; ++n) {
    const DiffPoly expected = parse(kDisplayed[n]);
    EXPECT_EQ(h_weylD(n).density, expected) << n;
    EXPECT_EQ(h_recursion(n).density, expected) << n;
    EXPECT_EQ(h_gk(n).density, expected) << n;
    EXPECT_EQ(h_schur(n).density, expected) << n;
    EXPECT_EQ(h_trees(n).density, expected) << n;
  }
}

TEST(Hamiltonians, TreeGuard) {
  EXPECT_THROW(h_trees(kTreeRouteMaxN + 1), std::invalid_argument);
  EXPECT_THROW(h_weylD(-1), std::invalid_argument);
}

TEST(Hamiltonians, GSequence) {
  EXPECT_EQ(g_seq(0), DiffPoly::v(0));
  EXPECT_EQ(g_seq(1), parse("(v0^2 + s*v1)/2"));
  EXPECT_EQ(g_seq(2), parse("v0^3/6 + s*v0*v1/2 + s^2*v2/6"));
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(g_seq(n, false), schur({n + 1}, false));
    EXPECT_EQ(g_seq(n), schur({n + 1}));
  }
}

TEST(Hamiltonians, Commute) {
  EXPECT_TRUE(commute_check(1, 2));
  EXPECT_TRUE(commute_check(3, 3));
  EXPECT_TRUE(commute_check(2, 5));
}

TEST(Hamiltonians, Spectrum) {
  const SpectrumResult empty = spectrum(3, {});
  EXPECT_TRUE(empty.eigenvalue.is_zero());
  EXPECT_TRUE(empty.verified);
  const SpectrumResult one = spectrum(1, {1});
  EXPECT_EQ(one.eigenvalue, Coefficient::s_power(2));
  EXPECT_TRUE(one.verified);
  EXPECT_TRUE(spectrum(3, {2, 1, 1}).verified);
}
