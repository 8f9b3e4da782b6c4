#include "qkdv/format.hpp"

#include "qkdv/diffpoly.hpp"
#include "qkdv/functional.hpp"
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

}  // namespace

TEST(Coefficient, IsCanonical) {
  Coefficient c = s + Coefficient(2);
  c -= s;
  EXPECT_TRUE(c.is_constant());
  EXPECT_EQ(c, Coefficient(2));
  EXPECT_EQ(c.terms().size(), 1u);
  Coefficient z = hbar - hbar;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(s * s, hbar);
  EXPECT_EQ(q(2, 4), q(1, 2));
}

TEST(Monomial, WeightAndDegree) {
  const Monomial m({{Var{1, 2}, 1}, {Var{1, 0}, 2}, {Var{1, 0}, 1}});
  EXPECT_EQ(m.exponent(Var{1, 0}), 3);
  EXPECT_EQ(m.weight(), 3 + 3);
  EXPECT_EQ(m.differential_degree(), 2);
  EXPECT_EQ(m.total_degree(), 4);
  EXPECT_EQ(m.factors().size(), 2u);
  EXPECT_TRUE(Monomial({{Var{1, 0}, 0}}).is_one());
}

TEST(DiffPoly, NoZeroCoefficientsStored) {
  DiffPoly p = v * v + v1;
  p -= v1;
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(DiffPoly, DerivativeExamples) {
  EXPECT_EQ(d_dx(v), v1);
  EXPECT_TRUE(d_dx(DiffPoly::constant(1)).is_zero());
  EXPECT_EQ(d_dx(v * v1), v1 * v1 + v * v2);
  EXPECT_EQ(d_dx(v, 3), DiffPoly::v(3));
}

TEST(DiffPoly, PartialExamples) {
  EXPECT_EQ(partial(v * v, 1, 0), Coefficient(2) * v);
  EXPECT_TRUE(partial(v2, 1, 1).is_zero());
  EXPECT_EQ(partial(v * v2, 1, 2), v);
}

TEST(DiffPoly, VariationalDerivativeExamples) {
  EXPECT_EQ(variational_derivative(q(1, 6) * pow(v, 3)), q(1, 2) * v * v);
  EXPECT_EQ(variational_derivative(v * v2), Coefficient(2) * v2);
  // (v1)^2 gives -2 v2
  EXPECT_EQ(variational_derivative(v1 * v1), Coefficient(-2) * v2);
}

TEST(DiffPoly, VariationalDerivativeKillsTotalDerivatives) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const DiffPoly p = random_diffpoly(rng, {.max_weight = 7});
    EXPECT_TRUE(variational_derivative(d_dx(p)).is_zero()) << p;
  }
}

TEST(DiffPoly, LeibnizOnRandomPairs) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const DiffPoly a = random_diffpoly(rng);
    const DiffPoly b = random_diffpoly(rng);
    EXPECT_EQ(d_dx(a * b), d_dx(a) * b + a * d_dx(b));
  }
}

TEST(DiffPoly, RankTwoVariables) {
  const DiffPoly u = DiffPoly::variable(1, 0, 2);
  const DiffPoly w = DiffPoly::variable(2, 0, 2);
  const DiffPoly p = u * d_dx(w);
  EXPECT_EQ(partial(p, 2, 1), u);
  EXPECT_TRUE(partial(p, 2, 0).is_zero());
  EXPECT_EQ(variational_derivative(p, 2), -d_dx(u));
  EXPECT_EQ(variational_derivative(p, 1), d_dx(w));
}

TEST(Functional, EqualityExamples) {
  EXPECT_TRUE(functional_eq(LocalFunctional(v * v1), LocalFunctional(DiffPoly())));
  EXPECT_FALSE(functional_eq(LocalFunctional(v * v), LocalFunctional(DiffPoly())));
  EXPECT_TRUE(functional_eq(LocalFunctional(v1 * v1), LocalFunctional(-(v * v2))));
  // a constant is not a total derivative
  EXPECT_FALSE(LocalFunctional(DiffPoly::constant(3)).is_zero());
}

TEST(Functional, EqualityIsCompatibleWithLinearStructure) {
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const DiffPoly a = random_diffpoly(rng);
    const DiffPoly b = random_diffpoly(rng);
    const LocalFunctional fa(a);
    const LocalFunctional fa2(a + d_dx(b));
    EXPECT_TRUE(functional_eq(fa, fa2));
    EXPECT_TRUE(functional_eq(fa2, fa));
    const Coefficient c = random_coefficient(rng, true);
    EXPECT_TRUE(functional_eq(c * fa, c * fa2));
    EXPECT_TRUE(functional_eq(fa + LocalFunctional(b), fa2 + LocalFunctional(b)));
  }
}

TEST(EtaMatrix, RejectsBadInput) {
  EXPECT_THROW(EtaMatrix({{1, 2}, {3, 4}}), std::invalid_argument);
  EXPECT_THROW(EtaMatrix({{1, 1}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(EtaMatrix({{1, 0}}), std::invalid_argument);
  EXPECT_NO_THROW(EtaMatrix({{0, 1}, {1, 0}}));
  EXPECT_EQ(EtaMatrix({{0, 1}, {1, 0}}).determinant(), -1);
}

TEST(ClassicalPoisson, Examples) {
  const LocalFunctional F(q(1, 2) * v * v);
  const LocalFunctional G(q(1, 6) * pow(v, 3));
  const LocalFunctional B = classical_poisson(F, G);
  // dF = v, dG = v^2/2, so the density is v * (v v1) = v^2 v1
  EXPECT_EQ(B.representative(), v * v * v1);
  EXPECT_TRUE(B.is_zero());
  EXPECT_TRUE(classical_poisson(G, G).is_zero());
  // int v^2 and int v1^2 do not commute
  const LocalFunctional K(v1 * v1);
  EXPECT_FALSE(classical_poisson(LocalFunctional(pow(v, 3)), K).is_zero());
}

TEST(ClassicalPoisson, RankTwoWithOffDiagonalEta) {
  const DiffPoly u = DiffPoly::variable(1, 0, 2);
  const DiffPoly w = DiffPoly::variable(2, 0, 2);
  const EtaMatrix eta({{0, 1}, {1, 0}});
  // {int u, int w^2/2} = int 1 * eta^{12} * d_x(w) = int w1, a total derivative
  const LocalFunctional B = classical_poisson(LocalFunctional(u), LocalFunctional(q(1, 2) * w * w), eta);
  EXPECT_EQ(B.representative(), d_dx(w));
  EXPECT_TRUE(B.is_zero());
  // {int u w, int u^2 w} has density w * d_x(u^2) + u * d_x(2 u w) in the off-diagonal metric
  const LocalFunctional C = classical_poisson(LocalFunctional(u * w), LocalFunctional(u * u * w), eta);
  EXPECT_EQ(C.representative(), w * d_dx(u * u) + u * d_dx(Coefficient(2) * u * w));
}

TEST(Gradings, Examples) {
  const DiffPoly h2 = q(1, 6) * pow(v, 3) + q(1, 12) * hbar * v2;
  const auto w = weight_components(h2);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w.begin()->first, 3);
  const auto d = degree_components(h2);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.begin()->first, 0);

  EXPECT_EQ(weight_components(v).begin()->first, 1);
  EXPECT_EQ(degree_components(v).begin()->first, 0);
  EXPECT_EQ(weight_components(s * v1).begin()->first, 2);
  EXPECT_EQ(degree_components(s * v1).begin()->first, 0);

  const auto mixed = degree_components(v + v1);
  ASSERT_EQ(mixed.size(), 2u);
  EXPECT_EQ(mixed.at(0), v);
  EXPECT_EQ(mixed.at(1), v1);
}

TEST(Gradings, ComponentsSumBack) {
  Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    const DiffPoly p = random_diffpoly(rng);
    DiffPoly sum_w;
    for (const auto& [k, c] : weight_components(p)) {
      sum_w += c;
    }
    DiffPoly sum_d;
    for (const auto& [k, c] : degree_components(p)) {
      sum_d += c;
    }
    EXPECT_EQ(sum_w, p);
    EXPECT_EQ(sum_d, p);
  }
}

TEST(RestoreGrading, Examples) {
  EXPECT_EQ(restore_grading(q(1, 2) * v * v + q(1, 2) * v1), q(1, 2) * v * v + q(1, 2) * s * v1);
  EXPECT_EQ(restore_grading(v), v);
  EXPECT_EQ(restore_grading(v2), hbar * v2);
}

TEST(RestoreGrading, InvertsSOneOnDegreeZero) {
  Rng rng(15);
  for (int i = 0; i < 50; ++i) {
    // build a degree-zero element by attaching s^d to each monomial
    const DiffPoly raw = random_diffpoly(rng, {.quantum = false});
    DiffPoly p;
    for (const auto& [m, c] : raw.terms()) {
      p.add_term(m, Coefficient::s_power(static_cast<unsigned>(m.differential_degree())) * c);
    }
    EXPECT_EQ(restore_grading(at_s_one(p)), p);
  }
}

TEST(SCoefficient, SplitsByPower) {
  const DiffPoly p = v + s * v1 + Coefficient(3) * hbar * v2;
  EXPECT_EQ(classical_limit(p), v);
  EXPECT_EQ(s_coefficient(p, 1), v1);
  EXPECT_EQ(s_coefficient(p, 2), Coefficient(3) * v2);
  EXPECT_TRUE(s_coefficient(p, 3).is_zero());
  EXPECT_EQ(at_s_one(p), v + v1 + Coefficient(3) * v2);
}
