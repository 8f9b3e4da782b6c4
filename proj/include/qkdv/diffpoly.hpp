#pragma once

#include "qkdv/coefficient.hpp"

#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace qkdv {

/// The jet variable v^{alpha,(order)}; alpha is 1-based.
struct Var {
  int alpha = 1;
  int order = 0;
  auto operator<=>(const Var&) const = default;
};

/// Commutative monomial in jet variables. Factors are strictly sorted by
/// variable and carry positive exponents.
class Monomial {
 public:
  using Factor = std::pair<Var, int>;

  Monomial() = default;
  /// Sorts, merges repeated variables and drops non-positive exponents.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(Var v, int exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int exponent(Var v) const;

  /// Sum of exponent * (order + 1).
  int weight() const { return weight_; }
  /// Sum of exponent * order.
  int differential_degree() const;
  /// Sum of exponents.
  int total_degree() const;
  int max_order() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Lowers the exponent of v by one; the caller guarantees exponent(v) > 0.
  Monomial without_one(Var v) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  /// Conformal weight first, then lexicographic on factors (lower variable
  /// first, higher exponent first). Only storage and printing depend on it.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
  int weight_ = 0;
};

/// Sparse differential polynomial of rank N with Q[s] coefficients.
class DiffPoly {
 public:
  using TermMap = std::map<Monomial, Coefficient>;

  explicit DiffPoly(int rank = 1);
  DiffPoly(int rank, TermMap terms);

  static DiffPoly constant(const Coefficient& c, int rank = 1);
  static DiffPoly variable(int alpha, int order, int rank);
  /// Rank-one generator v^{(order)}.
  static DiffPoly v(int order = 0) { return variable(1, order, 1); }
  static DiffPoly term(const Monomial& m, const Coefficient& c, int rank = 1);

  int rank() const { return rank_; }
  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coefficient coefficient(const Monomial& m) const;
  Coefficient constant_term() const { return coefficient(Monomial{}); }

  /// Largest derivative order present; -1 when there are no variables.
  int max_order() const;
  /// Largest total degree of a monomial (0 for constants, -1 for zero).
  int degree() const;
  int max_weight() const;
  /// Distinct variables appearing, sorted.
  std::vector<Var> variables() const;

  /// Accumulates c * m into this polynomial.
  void add_term(const Monomial& m, const Coefficient& c);

  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const Coefficient& c);

  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator-(DiffPoly a) { return a *= Coefficient(-1); }
  friend DiffPoly operator*(DiffPoly a, const Coefficient& c) { return a *= c; }
  friend DiffPoly operator*(const Coefficient& c, DiffPoly a) { return a *= c; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend bool operator==(const DiffPoly& a, const DiffPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  int rank_ = 1;
  TermMap terms_;
};

DiffPoly pow(const DiffPoly& p, unsigned e);

/// Total x-derivative: v^{alpha,(k)} -> v^{alpha,(k+1)}, extended by Leibniz.
DiffPoly d_dx(const DiffPoly& p);
DiffPoly d_dx(const DiffPoly& p, int times);

/// Formal partial derivative with respect to v^{alpha,(order)}.
DiffPoly partial(const DiffPoly& p, Var v);
inline DiffPoly partial(const DiffPoly& p, int alpha, int order) { return partial(p, Var{alpha, order}); }

/// Euler operator sum_k (-d/dx)^k d/dv^{alpha,(k)}.
DiffPoly variational_derivative(const DiffPoly& p, int alpha = 1);

/// Homogeneous components under conformal weight (v^{(k)} has weight k+1, s weight 0).
std::map<int, DiffPoly> weight_components(const DiffPoly& p);
/// Homogeneous components under differential degree (v^{(k)} has degree k, s degree -1).
std::map<int, DiffPoly> degree_components(const DiffPoly& p);

/// Evaluates s = 1.
DiffPoly at_s_one(const DiffPoly& p);
/// Multiplies each monomial of differential degree d by s^d. Applied to the
/// s = 1 image of a degree-zero element this recovers the element.
DiffPoly restore_grading(const DiffPoly& p);
/// The s-free polynomial multiplying s^k.
DiffPoly s_coefficient(const DiffPoly& p, unsigned k);
/// Sets s = 0.
inline DiffPoly classical_limit(const DiffPoly& p) { return s_coefficient(p, 0); }

}  // namespace qkdv
