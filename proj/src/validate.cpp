#include "qkdv/validate.hpp"

#include "qkdv/format.hpp"
#include "qkdv/kdv.hpp"
#include "qkdv/qbracket.hpp"
#include "qkdv/random.hpp"

#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qkdv {

namespace {

using Trial = std::optional<std::string>;
using TwoLambda = std::map<std::pair<int, int>, FockState>;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t name_hash(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h = (h ^ c) * 1099511628211ULL;
  }
  return h;
}

std::string show(const FockState& a) { return to_text(phi_inv(a)); }

Trial fail(const std::string& what) { return what; }

void add_to(TwoLambda& m, int p, int q, const FockState& s) {
  if (s.is_zero()) {
    return;
  }
  auto [it, inserted] = m.try_emplace({p, q}, s.rank());
  it->second += s;
  if (it->second.is_zero()) {
    m.erase(it);
  }
}

bool same(TwoLambda a, const TwoLambda& b) {
  for (const auto& [k, s] : b) {
    add_to(a, k.first, k.second, -s);
  }
  return a.empty();
}

RandomPolyOptions state_options(int max_weight = 6, int max_terms = 3) {
  RandomPolyOptions o;
  o.max_weight = max_weight;
  o.max_terms = max_terms;
  return o;
}

// ------------------------------------------------------------------ fock

std::vector<PropertyCheck> fock_checks() {
  std::vector<PropertyCheck> out;
  out.push_back({"phi-inverse", [](Rng& rng) -> Trial {
                   RandomPolyOptions o = state_options();
                   o.min_weight = 0;
                   const DiffPoly p = random_diffpoly(rng, o);
                   if (phi_inv(phi(p)) != p) return fail(to_text(p));
                   const FockState a = random_state(rng, o);
                   if (phi(phi_inv(a)) != a) return fail(show(a));
                   return std::nullopt;
                 }});
  out.push_back({"translation", [](Rng& rng) -> Trial {
                   const DiffPoly p = random_diffpoly(rng, state_options());
                   if (phi(d_dx(p)) != translate(phi(p))) return fail(to_text(p));
                   return std::nullopt;
                 }});
  out.push_back({"sesquilinearity", [](Rng& rng) -> Trial {
                   const FockState a = random_state(rng, state_options());
                   const FockState b = random_state(rng, state_options());
                   const LambdaPoly ab = lambda_bracket(a, b);
                   const LambdaPoly ta = lambda_bracket(translate(a), b);
                   const LambdaPoly tb = lambda_bracket(a, translate(b));
                   LambdaPoly lhs1 = ta;
                   LambdaPoly rhs2;
                   for (const auto& [n, s] : ab.coefficients()) {
                     lhs1.add(n + 1, s);
                     rhs2.add(n, translate(s));
                     rhs2.add(n + 1, s);
                   }
                   if (!lhs1.is_zero()) return fail("[Ta_l b] != -l[a_l b] for a=" + show(a) + ", b=" + show(b));
                   if (tb != rhs2) return fail("[a_l Tb] != (T+l)[a_l b] for a=" + show(a) + ", b=" + show(b));
                   return std::nullopt;
                 }});
  out.push_back({"skewsymmetry", [](Rng& rng) -> Trial {
                   const FockState a = random_state(rng, state_options());
                   const FockState b = random_state(rng, state_options());
                   const LambdaPoly ab = lambda_bracket(a, b);
                   LambdaPoly rhs;
                   // -(-l-T)^n c_n = -(-1)^n sum_j C(n,j) l^j T^{n-j} c_n
                   for (const auto& [n, s] : ab.coefficients()) {
                     for (int j = 0; j <= n; ++j) {
                       Rational c(binomial(n, j));
                       if (n % 2 == 0) c = -c;
                       rhs.add(j, translate(s, n - j) * Coefficient(c));
                     }
                   }
                   if (lambda_bracket(b, a) != rhs) return fail("a=" + show(a) + ", b=" + show(b));
                   return std::nullopt;
                 }});
  out.push_back({"jacobi", [](Rng& rng) -> Trial {
                   const FockState a = random_state(rng, state_options(5));
                   const FockState b = random_state(rng, state_options(5));
                   const FockState c = random_state(rng, state_options(5));
                   // [a_l [b_m c]] - [b_m [a_l c]] = [[a_l b]_{l+m} c], keyed by (l-power, m-power).
                   TwoLambda lhs;
                   for (const auto& [q, s] : lambda_bracket(b, c).coefficients()) {
                     for (const auto& [p, t] : lambda_bracket(a, s).coefficients()) add_to(lhs, p, q, t);
                   }
                   for (const auto& [p, s] : lambda_bracket(a, c).coefficients()) {
                     for (const auto& [q, t] : lambda_bracket(b, s).coefficients()) add_to(lhs, p, q, -t);
                   }
                   TwoLambda rhs;
                   for (const auto& [n, s] : lambda_bracket(a, b).coefficients()) {
                     for (const auto& [r, t] : lambda_bracket(s, c).coefficients()) {
                       for (int q = 0; q <= r; ++q) {
                         add_to(rhs, n + r - q, q, t * Coefficient(Rational(binomial(r, q))));
                       }
                     }
                   }
                   if (!same(lhs, rhs)) return fail("a=" + show(a) + ", b=" + show(b) + ", c=" + show(c));
                   return std::nullopt;
                 }});
  out.push_back({"quasi-commutativity", [](Rng& rng) -> Trial {
                   const FockState a = random_state(rng, state_options());
                   const FockState b = random_state(rng, state_options());
                   FockState rhs;
                   for (const auto& [n, s] : lambda_bracket(a, b).coefficients()) {
                     Rational c(1, n + 1);
                     if (n % 2 == 1) c = -c;
                     rhs += translate(s, n + 1) * Coefficient(c);
                   }
                   if (normal_prod(a, b) - normal_prod(b, a) != rhs) return fail("a=" + show(a) + ", b=" + show(b));
                   return std::nullopt;
                 }});
  out.push_back({"quasi-associativity", [](Rng& rng) -> Trial {
                   const FockState a = random_state(rng, state_options(4));
                   const FockState b = random_state(rng, state_options(4));
                   const FockState c = random_state(rng, state_options(4));
                   const FockState lhs = normal_prod(normal_prod(a, b), c) - normal_prod(a, normal_prod(b, c));
                   FockState rhs;
                   for (int n = 0;; ++n) {
                     const FockState bc = nth_product(b, n, c);
                     const FockState ac = nth_product(a, n, c);
                     if (bc.is_zero() && ac.is_zero() && n > b.max_weight() + c.max_weight() + a.max_weight()) break;
                     const Coefficient w(Rational(Integer(1), factorial(n + 1)));
                     rhs += normal_prod(translate(a, n + 1) * w, bc);
                     rhs += normal_prod(translate(b, n + 1) * w, ac);
                   }
                   if (lhs != rhs) return fail("a=" + show(a) + ", b=" + show(b) + ", c=" + show(c));
                   return std::nullopt;
                 }});
  out.push_back({"wick", [](Rng& rng) -> Trial {
                   const FockState a = random_state(rng, state_options(5));
                   const FockState b = random_state(rng, state_options(5));
                   const FockState c = random_state(rng, state_options(5));
                   // [a_l :bc:] = :[a_l b]c: + :b[a_l c]: + int_0^l [[a_l b]_m c] dm
                   LambdaPoly rhs;
                   for (const auto& [n, s] : lambda_bracket(a, b).coefficients()) {
                     rhs.add(n, normal_prod(s, c));
                     for (const auto& [r, t] : lambda_bracket(s, c).coefficients()) {
                       rhs.add(n + r + 1, t * Coefficient(Rational(1, r + 1)));
                     }
                   }
                   for (const auto& [n, s] : lambda_bracket(a, c).coefficients()) rhs.add(n, normal_prod(b, s));
                   if (lambda_bracket(a, normal_prod(b, c)) != rhs)
                     return fail("a=" + show(a) + ", b=" + show(b) + ", c=" + show(c));
                   return std::nullopt;
                 }});
  out.push_back({"commutator-formula", [](Rng& rng) -> Trial {
                   const FockState a = random_state(rng, state_options(4));
                   const FockState b = random_state(rng, state_options(4));
                   const FockState c = random_state(rng, state_options(4));
                   const int m = rng.uniform(-3, 3);
                   const int n = rng.uniform(-3, 3);
                   const FockState lhs = nth_product(a, m, nth_product(b, n, c)) - nth_product(b, n, nth_product(a, m, c));
                   FockState rhs;
                   const int top = a.max_weight() + b.max_weight();
                   for (int i = 0; i <= top; ++i) {
                     const Integer coef = binomial(m, i);
                     if (coef != 0) rhs += nth_product(nth_product(a, i, b), m + n - i, c) * Coefficient(Rational(coef));
                   }
                   if (lhs != rhs) {
                     return fail("m=" + std::to_string(m) + ", n=" + std::to_string(n) + ", a=" + show(a) +
                                 ", b=" + show(b) + ", c=" + show(c));
                   }
                   return std::nullopt;
                 }});
  return out;
}

// --------------------------------------------------------------- bracket

RandomPolyOptions classical_options(int max_weight) {
  RandomPolyOptions o;
  o.max_weight = max_weight;
  o.max_terms = 1;
  o.quantum = false;
  o.min_weight = 2;
  return o;
}

std::vector<PropertyCheck> bracket_checks() {
  std::vector<PropertyCheck> out;
  out.push_back({"leibniz", [](Rng& rng) -> Trial {
                   RandomPolyOptions o = state_options();
                   o.rank = rng.uniform(1, 2);
                   o.min_weight = 0;
                   const DiffPoly p = random_diffpoly(rng, o);
                   const DiffPoly q = random_diffpoly(rng, o);
                   if (d_dx(p * q) != d_dx(p) * q + p * d_dx(q)) return fail(to_text(p) + " ; " + to_text(q));
                   return std::nullopt;
                 }});
  out.push_back({"euler-kills-derivatives", [](Rng& rng) -> Trial {
                   RandomPolyOptions o = state_options();
                   o.rank = rng.uniform(1, 2);
                   const DiffPoly p = random_diffpoly(rng, o);
                   for (int alpha = 1; alpha <= o.rank; ++alpha) {
                     if (!variational_derivative(d_dx(p), alpha).is_zero()) return fail(to_text(p));
                   }
                   return std::nullopt;
                 }});
  out.push_back({"functional-equality", [](Rng& rng) -> Trial {
                   const LocalFunctional f(random_diffpoly(rng, state_options()));
                   const LocalFunctional h(random_diffpoly(rng, state_options()));
                   const LocalFunctional g(f.representative() + d_dx(random_diffpoly(rng, state_options())));
                   const LocalFunctional k(g.representative() + d_dx(random_diffpoly(rng, state_options())));
                   const Coefficient c = random_coefficient(rng, true);
                   const bool ok = functional_eq(f, f) && functional_eq(f, g) && functional_eq(g, f) &&
                                   functional_eq(f, k) && functional_eq(f + h, g + h) &&
                                   functional_eq(c * f, c * g) &&
                                   functional_eq(f, k + h) == functional_eq(h, LocalFunctional(DiffPoly(1))) &&
                                   !functional_eq(f, f + LocalFunctional(DiffPoly::constant(1)));
                   if (!ok) return fail(to_text(f.representative()) + " ; " + to_text(h.representative()));
                   return std::nullopt;
                 }});
  out.push_back({"gradings", [](Rng& rng) -> Trial {
                   RandomPolyOptions o = state_options();
                   o.homogeneous = true;
                   o.quantum = false;
                   const DiffPoly p = random_diffpoly(rng, o);
                   const DiffPoly q = random_diffpoly(rng, o);
                   const auto wp = weight_components(p);
                   const auto wq = weight_components(q);
                   const auto wpq = weight_components(p * q);
                   if (wp.size() != 1 || wq.size() != 1 || wpq.size() != 1 ||
                       wpq.begin()->first != wp.begin()->first + wq.begin()->first) {
                     return fail("weight not additive: " + to_text(p) + " ; " + to_text(q));
                   }
                   for (const auto& [d, part] : degree_components(p)) {
                     const auto dd = degree_components(d_dx(part));
                     const auto wd = weight_components(d_dx(part));
                     const auto wpart = weight_components(part);
                     if (!dd.empty() && (dd.size() != 1 || dd.begin()->first != d + 1 || wd.size() != 1 ||
                                         wd.begin()->first != wpart.begin()->first + 1)) {
                       return fail("d/dx grading shift: " + to_text(part));
                     }
                   }
                   const DiffPoly sp = p * Coefficient::s_power(1);
                   const auto ds = degree_components(sp);
                   const auto dp = degree_components(p);
                   if (ds.empty() || ds.begin()->first != dp.begin()->first - 1) return fail("s-degree: " + to_text(p));
                   return std::nullopt;
                 }});
  out.push_back({"classical-antisymmetry", [](Rng& rng) -> Trial {
                   const LocalFunctional f(random_diffpoly(rng, classical_options(6)));
                   const LocalFunctional g(random_diffpoly(rng, classical_options(6)));
                   if (!(classical_poisson(f, g) + classical_poisson(g, f)).is_zero() ||
                       !classical_poisson(f, f).is_zero()) {
                     return fail(to_text(f.representative()) + " ; " + to_text(g.representative()));
                   }
                   return std::nullopt;
                 }});
  out.push_back({"classical-jacobi", [](Rng& rng) -> Trial {
                   const LocalFunctional f(random_diffpoly(rng, classical_options(6)));
                   const LocalFunctional g(random_diffpoly(rng, classical_options(6)));
                   const LocalFunctional h(random_diffpoly(rng, classical_options(6)));
                   const LocalFunctional j = classical_poisson(f, classical_poisson(g, h)) +
                                             classical_poisson(g, classical_poisson(h, f)) +
                                             classical_poisson(h, classical_poisson(f, g));
                   if (!j.is_zero()) {
                     return fail(to_text(f.representative()) + " ; " + to_text(g.representative()) + " ; " +
                                 to_text(h.representative()));
                   }
                   return std::nullopt;
                 }});
  out.push_back({"oracle-rank1", [](Rng& rng) -> Trial {
                   const DiffPoly f = random_diffpoly(rng, state_options());
                   const DiffPoly g = random_diffpoly(rng, state_options());
                   for (int n = 0; n <= 4; ++n) {
                     if (mode_action_closed(f, n, g) != phi_inv(nth_product(phi(f), n, phi(g)))) {
                       return fail("n=" + std::to_string(n) + ", f=" + to_text(f) + ", g=" + to_text(g));
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"oracle-rank2", [](Rng& rng) -> Trial {
                   const EtaMatrix eta = random_eta(rng, 2);
                   RandomPolyOptions o = state_options(5);
                   o.rank = 2;
                   const DiffPoly f = random_diffpoly(rng, o);
                   const DiffPoly g = random_diffpoly(rng, o);
                   for (int n = 0; n <= 4; ++n) {
                     if (mode_action_closed(f, n, g, eta) != phi_inv(nth_product(phi(f), n, phi(g), eta))) {
                       return fail("n=" + std::to_string(n) + ", f=" + to_text(f) + ", g=" + to_text(g));
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"quantum-antisymmetry", [](Rng& rng) -> Trial {
                   const LocalFunctional f(random_diffpoly(rng, state_options(5)));
                   const LocalFunctional g(random_diffpoly(rng, state_options(5)));
                   if (!(quantum_bracket(f, g) + quantum_bracket(g, f)).is_zero() || !quantum_bracket(f, f).is_zero()) {
                     return fail(to_text(f.representative()) + " ; " + to_text(g.representative()));
                   }
                   return std::nullopt;
                 }});
  out.push_back({"quantum-jacobi", [](Rng& rng) -> Trial {
                   const LocalFunctional f(random_diffpoly(rng, state_options(5, 2)));
                   const LocalFunctional g(random_diffpoly(rng, state_options(5, 2)));
                   const LocalFunctional h(random_diffpoly(rng, state_options(5, 2)));
                   const LocalFunctional j = quantum_bracket(f, quantum_bracket(g, h)) +
                                             quantum_bracket(g, quantum_bracket(h, f)) +
                                             quantum_bracket(h, quantum_bracket(f, g));
                   if (!j.is_zero()) {
                     return fail(to_text(f.representative()) + " ; " + to_text(g.representative()) + " ; " +
                                 to_text(h.representative()));
                   }
                   return std::nullopt;
                 }});
  out.push_back({"classical-limit", [](Rng& rng) -> Trial {
                   RandomPolyOptions o = state_options(6);
                   o.quantum = false;
                   const LocalFunctional f(random_diffpoly(rng, o));
                   const LocalFunctional g(random_diffpoly(rng, o));
                   const DiffPoly q = quantum_bracket(f, g).representative();
                   if (!functional_eq(LocalFunctional(s_coefficient(q, 2)), classical_poisson(f, g)) ||
                       !LocalFunctional(s_coefficient(q, 0)).is_zero()) {
                     return fail(to_text(f.representative()) + " ; " + to_text(g.representative()));
                   }
                   return std::nullopt;
                 }});
  out.push_back({"hat-operator", [](Rng& rng) -> Trial {
                   const DiffPoly f = random_diffpoly(rng, state_options(5));
                   const DiffPoly g = random_diffpoly(rng, state_options(6));
                   const int n = rng.uniform(0, 4);
                   if (hat_apply(f, n, g) != mode_action_closed(f, n, g)) {
                     return fail("n=" + std::to_string(n) + ", f=" + to_text(f) + ", g=" + to_text(g));
                   }
                   return std::nullopt;
                 }});
  out.push_back({"hat-weight", [](Rng& rng) -> Trial {
                   RandomPolyOptions o = state_options(5);
                   o.homogeneous = true;
                   const DiffPoly f = random_diffpoly(rng, o);
                   const DiffPoly g = random_diffpoly(rng, o);
                   const int n = rng.uniform(0, 4);
                   const DiffPoly r = hat_apply(f, n, g);
                   const int expected = f.max_weight() + g.max_weight() - n - 1;
                   const auto parts = weight_components(r);
                   if (!r.is_zero() && (parts.size() != 1 || parts.begin()->first != expected)) {
                     return fail("n=" + std::to_string(n) + ", f=" + to_text(f) + ", g=" + to_text(g));
                   }
                   return std::nullopt;
                 }});
  out.push_back({"d-operator", [](Rng& rng) -> Trial {
                   const DiffPoly h2 = h_weylD(2).density;
                   const DiffPoly p = random_diffpoly(rng, state_options(6));
                   // Each contraction of phi(h_2)_{(1)} carries hbar, so the graded
                   // identity is 2 hat = hbar D; at hbar = 1 it reads D = 2 hat.
                   const DiffPoly two_hat = hat_apply(h2, 1, p) * Coefficient(2);
                   if (two_hat != D_apply(p) * Coefficient::s_power(2)) return fail(to_text(p));
                   if (at_s_one(two_hat) != at_s_one(D_apply(p))) return fail("at hbar = 1: " + to_text(p));
                   return std::nullopt;
                 }});
  return out;
}

// ----------------------------------------------------------------- schur

RandomPolyOptions schur_options() {
  RandomPolyOptions o;
  o.max_weight = 6;
  o.max_terms = 3;
  o.quantum = false;
  o.min_weight = 0;
  return o;
}

std::vector<PropertyCheck> schur_checks() {
  std::vector<PropertyCheck> out;
  out.push_back({"b-relations", [](Rng& rng) -> Trial {
                   const DiffPoly p = random_diffpoly(rng, schur_options());
                   for (int m = -4; m <= 4; ++m) {
                     for (int n = -4; n <= 4; ++n) {
                       const std::string where = "m=" + std::to_string(m) + ", n=" + std::to_string(n) + ", p=" + to_text(p);
                       if (!(B_apply(m, B_apply(n, p)) + B_apply(n - 1, B_apply(m + 1, p))).is_zero())
                         return fail("B_m B_n + B_{n-1} B_{m+1} at " + where);
                       if (!(Bstar_apply(m, Bstar_apply(n, p)) + Bstar_apply(n + 1, Bstar_apply(m - 1, p))).is_zero())
                         return fail("B*_m B*_n + B*_{n+1} B*_{m-1} at " + where);
                       DiffPoly mixed = B_apply(m, Bstar_apply(n, p)) + Bstar_apply(n - 1, B_apply(m - 1, p));
                       if (m == n) mixed -= p;
                       if (!mixed.is_zero()) return fail("B_m B*_n + B*_{n-1} B_{m-1} at " + where);
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"p-commutator", [](Rng& rng) -> Trial {
                   const DiffPoly p = random_diffpoly(rng, schur_options());
                   for (int n = 0; n <= 3; ++n) {
                     for (int m = n + 1; m <= 3; ++m) {
                       const DiffPoly c = P_apply(n, -n, P_apply(m, -m, p)) - P_apply(m, -m, P_apply(n, -n, p));
                       if (!c.is_zero()) {
                         return fail("n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", p=" + to_text(p));
                       }
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"p-alternative", [](Rng& rng) -> Trial {
                   const DiffPoly p = random_diffpoly(rng, schur_options());
                   for (int k = 0; k <= kPAltMaxK; ++k) {
                     for (int m = -3; m <= 3; ++m) {
                       if (P_apply(k, m, p) != P_alt_apply(k, m, p)) {
                         return fail("k=" + std::to_string(k) + ", m=" + std::to_string(m) + ", p=" + to_text(p));
                       }
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"hl-action", [](Rng& rng) -> Trial {
                   IntVector lambda;
                   int budget = 6;
                   const int len = rng.uniform(0, 3);
                   for (int i = 0; i < len; ++i) {
                     const int x = rng.uniform(-std::min(2, budget), std::min(4, budget));
                     lambda.push_back(x);
                     budget -= std::abs(x);
                   }
                   const int k = rng.uniform(0, 3);
                   const int m = rng.uniform(-3, 3);
                   if (evaluate(P_on_HL(k, m, lambda)) != P_apply(k, m, hall_littlewood(lambda))) {
                     return fail("k=" + std::to_string(k) + ", m=" + std::to_string(m) + ", lambda=" + to_string(lambda));
                   }
                   return std::nullopt;
                 }});
  out.push_back({"eigenvalue", [](Rng& rng) -> Trial {
                   const int n = rng.uniform(0, 4);
                   const IntVector lambda = random_partition(rng, 7);
                   if (!spectrum(n, lambda).verified) return fail("n=" + std::to_string(n) + ", lambda=" + to_string(lambda));
                   return std::nullopt;
                 }});
  out.push_back({"sury-identity",
                 [](Rng&) -> Trial {
                   for (int n = 0; n <= 12; ++n) {
                     for (int m = 0; m <= 12; ++m) {
                       Rational lhs = 0;
                       for (int k = 0; k <= n; ++k) {
                         const Rational t = ratio(binomial(n, k), m + k + 1);
                         lhs += k % 2 == 0 ? t : Rational(-t);
                       }
                       if (lhs != ratio(1, (n + m + 1) * binomial(n + m, m))) {
                         return fail("n=" + std::to_string(n) + ", m=" + std::to_string(m));
                       }
                     }
                   }
                   return std::nullopt;
                 },
                 true});
  return out;
}

// ------------------------------------------------------------------- kdv

std::vector<PropertyCheck> kdv_checks() {
  std::vector<PropertyCheck> out;
  out.push_back({"routes", [](Rng& rng) -> Trial {
                   const int n = rng.uniform(0, 12);
                   const DiffPoly h = h_weylD(n).density;
                   std::vector<Route> routes{Route::Recursion, Route::Gk, Route::Schur};
                   if (n <= kTreeRouteMaxN) routes.push_back(Route::Trees);
                   for (Route r : routes) {
                     if (hamiltonian(n, r).density != h) return fail("n=" + std::to_string(n) + ", route " + route_name(r));
                   }
                   return std::nullopt;
                 }});
  out.push_back({"classical-limit", [](Rng& rng) -> Trial {
                   const int n = rng.uniform(0, 12);
                   const DiffPoly expected = pow(DiffPoly::v(0), n + 1) * Coefficient(Rational(Integer(1), factorial(n + 1)));
                   if (classical_limit(h_weylD(n).density) != expected) return fail("n=" + std::to_string(n));
                   return std::nullopt;
                 }});
  out.push_back({"homogeneity", [](Rng& rng) -> Trial {
                   const int n = rng.uniform(0, 12);
                   const DiffPoly h = h_weylD(n).density;
                   const auto w = weight_components(h);
                   const auto d = degree_components(h);
                   if (w.size() != 1 || w.begin()->first != n + 1 || d.size() != 1 || d.begin()->first != 0) {
                     return fail("grading of h_" + std::to_string(n));
                   }
                   for (const auto& [mono, c] : h.terms()) {
                     for (const auto& [k, r] : c.terms()) {
                       if (k % 2 != 0) return fail("odd s-power in h_" + std::to_string(n));
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"involution", [](Rng& rng) -> Trial {
                   const int n = rng.uniform(0, 4);
                   const int m = rng.uniform(n + 1, 10 - n);
                   if (!commute_check(n, m)) return fail("n=" + std::to_string(n) + ", m=" + std::to_string(m));
                   return std::nullopt;
                 }});
  out.push_back({"structure", [](Rng& rng) -> Trial {
                   const int n = rng.uniform(0, 4);
                   const int m = rng.uniform(0, 4);
                   const DiffPoly r = phi_inv(nth_product(phi(h_weylD(n).density), 0, phi(h_weylD(m).density)));
                   const DiffPoly delta = variational_derivative(r);
                   for (const auto& [mono, c] : delta.terms()) {
                     if (!mono.is_one()) return fail("n=" + std::to_string(n) + ", m=" + std::to_string(m));
                   }
                   return std::nullopt;
                 }});
  out.push_back({"z-recursion",
                 [](Rng&) -> Trial {
                   std::vector<FockState> z{FockState(), FockState::generator()};
                   for (int n = 2; n <= kTreeRouteMaxN; ++n) {
                     FockState acc;
                     for (int i = 1; i < n; ++i) acc += normal_prod(z[i], z[n - i]);
                     acc *= Coefficient(Rational(1, n - 1));
                     if (Z_n(n) != acc) return fail("n=" + std::to_string(n));
                     z.push_back(std::move(acc));
                   }
                   return std::nullopt;
                 },
                 true});
  return out;
}

}  // namespace

bool SuiteReport::ok() const {
  for (const auto& c : checks) {
    if (!c.ok()) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> suite_names() { return {"fock", "bracket", "schur", "kdv"}; }

std::vector<PropertyCheck> suite_checks(std::string_view suite) {
  if (suite == "fock") return fock_checks();
  if (suite == "bracket") return bracket_checks();
  if (suite == "schur") return schur_checks();
  if (suite == "kdv") return kdv_checks();
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

CheckResult run_check(const PropertyCheck& check, std::uint64_t seed, int cases) {
  CheckResult res;
  res.name = check.name;
  Rng rng(splitmix(seed ^ name_hash(check.name)));
  const int runs = check.exhaustive ? 1 : cases;
  for (int i = 0; i < runs; ++i) {
    ++res.cases;
    std::optional<std::string> failure;
    try {
      failure = check.trial(rng);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      if (res.failures == 0) {
        res.first_failure = "case " + std::to_string(i) + ": " + *failure;
      }
      ++res.failures;
    }
  }
  return res;
}

std::vector<SuiteReport> run_suites(std::string_view suite, std::uint64_t seed, int cases) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    suite_checks(suite);
    names.emplace_back(suite);
  }
  std::vector<SuiteReport> out;
  for (const auto& name : names) {
    SuiteReport rep;
    rep.suite = name;
    rep.seed = seed;
    rep.cases = cases;
    for (const auto& check : suite_checks(name)) {
      rep.checks.push_back(run_check(check, seed, cases));
    }
    out.push_back(std::move(rep));
  }
  return out;
}

std::string format_report(const SuiteReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << " (seed " << report.seed << ", cases " << report.cases << ")\n";
  for (const auto& c : report.checks) {
    os << "  " << (c.ok() ? "ok  " : "FAIL") << " " << c.name << " " << (c.cases - c.failures) << "/" << c.cases
       << "\n";
    if (!c.first_failure.empty()) {
      os << "       first failure: " << c.first_failure << "\n";
    }
  }
  os << "  result: " << (report.ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace qkdv
