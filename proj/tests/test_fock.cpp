#include "qkdv/format.hpp"
#include "qkdv/fock.hpp"
#include "qkdv/parser.hpp"

#include <gtest/gtest.h>

using namespace qkdv;

namespace {

const Coefficient kHbar = Coefficient::s_power(2);

FockState b(int k = 0) { return FockState::term(FockMonomial({Var{1, k}}), 1); }

}  // namespace

TEST(Fock, PhiOfGenerators) {
  EXPECT_EQ(phi(DiffPoly::v(0)), b(0));
  EXPECT_EQ(phi(DiffPoly::v(1)), b(1));
  EXPECT_EQ(phi(parse("v0^2")), FockState::term(FockMonomial({Var{1, 0}, Var{1, 0}}), 1));
  EXPECT_EQ(phi(DiffPoly::v(3)), 6 * b(3));
}

TEST(Fock, PhiInverseRoundTrip) {
  const DiffPoly p = parse("v0^3/6 + hbar*v2/12 - 3*v1*v4^2 + s*v0");
  EXPECT_EQ(phi_inv(phi(p)), p);
}

TEST(Fock, ModeExamples) {
  const EtaMatrix eta = EtaMatrix::identity(1);
  EXPECT_TRUE(apply_mode(1, 0, b(0) + b(2), eta).is_zero());
  EXPECT_EQ(apply_mode(1, 1, b(0), eta), kHbar * FockState::vacuum());
  EXPECT_EQ(apply_mode(1, 2, b(1), eta), Coefficient(2) * kHbar * FockState::vacuum());
}

TEST(Fock, TranslateExamples) {
  EXPECT_TRUE(translate(FockState::vacuum()).is_zero());
  EXPECT_EQ(translate(b(0)), b(1));
  EXPECT_EQ(translate(b(1)), 2 * b(2));
}

TEST(Fock, TranslateMatchesDerivative) {
  const DiffPoly p = parse("v0^2*v1 + 5*v3 - s^2*v0*v2");
  EXPECT_EQ(translate(phi(p)), phi(d_dx(p)));
}

TEST(Fock, VacuumProducts) {
  const FockState a = b(0) * Coefficient(3) + phi(parse("v0*v1"));
  EXPECT_EQ(nth_product(a, -1, FockState::vacuum()), a);
  EXPECT_EQ(nth_product(FockState::vacuum(), -1, a), a);
  EXPECT_TRUE(nth_product(FockState::vacuum(), 0, a).is_zero());
}

TEST(Fock, GeneratorProducts) {
  EXPECT_EQ(nth_product(b(0), 1, b(0)), kHbar * FockState::vacuum());
  EXPECT_EQ(normal_prod(b(0), b(0)), phi(parse("v0^2")));
}

TEST(Fock, ClassicalPartOfNormalProduct) {
  const DiffPoly p = phi_inv(nth_product(phi(parse("v0^2")), -1, phi(DiffPoly::v(0))));
  EXPECT_EQ(classical_limit(p), parse("v0^3"));
}

TEST(Fock, QuasiAssociativityExample) {
  const FockState bb = normal_prod(b(0), b(0));
  const FockState lhs = normal_prod(bb, b(0)) - normal_prod(b(0), bb);
  EXPECT_EQ(lhs, kHbar * translate(b(0), 2));
}

TEST(Fock, LambdaBracketExamples) {
  LambdaPoly expected;
  expected.add(1, kHbar * FockState::vacuum());
  EXPECT_EQ(lambda_bracket(b(0), b(0)), expected);
  EXPECT_TRUE(lambda_bracket(b(0) + phi(parse("v0*v1")), FockState::vacuum()).is_zero());
  LambdaPoly expected2;
  expected2.add(1, Coefficient(2) * kHbar * b(0));
  EXPECT_EQ(lambda_bracket(b(0), normal_prod(b(0), b(0))), expected2);
}
