#pragma once

#include "qkdv/rational.hpp"

#include <utility>
#include <vector>

namespace qkdv {

/// Element of Q[s], where s is the half quantization parameter (hbar = s^2).
///
/// Stored as a sorted list of (s-exponent, nonzero rational). The zero
/// coefficient is the empty list.
class Coefficient {
 public:
  using Term = std::pair<unsigned, Rational>;

  Coefficient() = default;
  Coefficient(const Rational& r);  // NOLINT: implicit embedding of Q
  Coefficient(long n) : Coefficient(Rational(n)) {}  // NOLINT
  Coefficient(int n) : Coefficient(Rational(n)) {}   // NOLINT

  static Coefficient s_power(unsigned k, const Rational& c = 1);
  static Coefficient hbar_power(unsigned k, const Rational& c = 1) { return s_power(2 * k, c); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  /// Highest s-exponent present; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.back().first); }
  int lowest_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().first); }

  /// Coefficient of s^k (zero when absent).
  Rational at(unsigned k) const;
  Rational at_s_one() const;

  const std::vector<Term>& terms() const { return terms_; }

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Rational& r);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator-(Coefficient a) { return a *= Rational(-1); }
  friend Coefficient operator*(Coefficient a, const Rational& r) { return a *= r; }
  friend Coefficient operator*(const Rational& r, Coefficient a) { return a *= r; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.terms_ == b.terms_; }

  /// Multiplies by s^k.
  Coefficient shifted(unsigned k) const;

 private:
  std::vector<Term> terms_;
};

}  // namespace qkdv
