#pragma once

#include "qkdv/diffpoly.hpp"
#include "qkdv/functional.hpp"

#include <map>
#include <string>
#include <vector>

namespace qkdv {

/// Product of creators b^{alpha}_{(-k-1)} applied to the vacuum. Each factor
/// is stored as Var{alpha, k}; factors commute, so they are kept sorted.
class FockMonomial {
 public:
  FockMonomial() = default;
  explicit FockMonomial(std::vector<Var> factors);

  const std::vector<Var>& factors() const { return factors_; }
  bool is_vacuum() const { return factors_.empty(); }
  int weight() const { return weight_; }

  friend FockMonomial operator*(const FockMonomial& a, const FockMonomial& b);
  friend bool operator==(const FockMonomial& a, const FockMonomial& b) { return a.factors_ == b.factors_; }
  friend bool operator<(const FockMonomial& a, const FockMonomial& b);

 private:
  std::vector<Var> factors_;
  int weight_ = 0;
};

/// Finite Q[s]-linear combination of Fock monomials.
class FockState {
 public:
  using TermMap = std::map<FockMonomial, Coefficient>;

  explicit FockState(int rank = 1) : rank_(rank) {}
  static FockState vacuum(int rank = 1);
  /// b^{alpha} = b^{alpha}_{(-1)}|0>.
  static FockState generator(int alpha = 1, int rank = 1);
  static FockState term(const FockMonomial& m, const Coefficient& c, int rank = 1);

  int rank() const { return rank_; }
  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  /// Largest conformal weight present; -1 for the zero state.
  int max_weight() const;

  void add_term(const FockMonomial& m, const Coefficient& c);

  FockState& operator+=(const FockState& o);
  FockState& operator-=(const FockState& o);
  FockState& operator*=(const Coefficient& c);
  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  friend FockState operator-(FockState a) { return a *= Coefficient(-1); }
  friend FockState operator*(const Coefficient& c, FockState a) { return a *= c; }
  friend FockState operator*(FockState a, const Coefficient& c) { return a *= c; }
  friend bool operator==(const FockState& a, const FockState& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  int rank_ = 1;
  TermMap terms_;
};

/// Polynomial in lambda with state coefficients: entry n holds the
/// coefficient of lambda^n (not divided by n!).
class LambdaPoly {
 public:
  explicit LambdaPoly(int rank = 1) : rank_(rank) {}

  int rank() const { return rank_; }
  const std::map<int, FockState>& coefficients() const& { return coeffs_; }
  std::map<int, FockState> coefficients() && { return std::move(coeffs_); }
  FockState coefficient(int n) const;
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  void add(int power, const FockState& s);

  LambdaPoly& operator+=(const LambdaPoly& o);
  LambdaPoly& operator-=(const LambdaPoly& o);
  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator*(const Coefficient& c, const LambdaPoly& a);
  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) {
    return a.rank_ == b.rank_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int rank_ = 1;
  std::map<int, FockState> coeffs_;
};

/// v^{a1,(k1)}...v^{an,(kn)} -> k1!...kn! b^{a1}_{(-k1-1)}...b^{an}_{(-kn-1)}|0>.
FockState phi(const DiffPoly& p);
DiffPoly phi_inv(const FockState& a);

/// Action of the single mode b^{alpha}_{(n)}.
FockState apply_mode(int alpha, int n, const FockState& a, const EtaMatrix& eta);

/// Translation operator T; T|0> = 0 and [T, b_{(n)}] = -n b_{(n-1)}.
FockState translate(const FockState& a);
FockState translate(const FockState& a, int times);

/// a_{(m)} b for any integer m, from the normal-ordered mode expansion of Y(a, z).
FockState nth_product(const FockState& a, int m, const FockState& b, const EtaMatrix& eta);
FockState nth_product(const FockState& a, int m, const FockState& b);

/// :ab: = a_{(-1)} b.
FockState normal_prod(const FockState& a, const FockState& b, const EtaMatrix& eta);
FockState normal_prod(const FockState& a, const FockState& b);

/// [a_lambda b] = sum_{n >= 0} lambda^n / n! a_{(n)} b.
LambdaPoly lambda_bracket(const FockState& a, const FockState& b, const EtaMatrix& eta);
LambdaPoly lambda_bracket(const FockState& a, const FockState& b);

/// Debug form mirroring the creator notation, e.g. "1/2 * s^2 * b(-1) b(-3)|0>".
std::string to_text(const FockState& a);

}  // namespace qkdv
