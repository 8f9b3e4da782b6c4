#pragma once

#include "qkdv/diffpoly.hpp"

#include <vector>

namespace qkdv {

/// Constant symmetric nondegenerate N x N matrix eta^{alpha beta}.
class EtaMatrix {
 public:
  /// Throws std::invalid_argument if the matrix is not square, not
  /// symmetric, or singular.
  explicit EtaMatrix(std::vector<std::vector<Rational>> entries);
  static EtaMatrix identity(int rank);

  int rank() const { return static_cast<int>(entries_.size()); }
  /// 1-based indices, matching Var::alpha.
  const Rational& operator()(int alpha, int beta) const { return entries_[alpha - 1][beta - 1]; }
  Rational determinant() const;
  const std::vector<std::vector<Rational>>& entries() const { return entries_; }

 private:
  std::vector<std::vector<Rational>> entries_;
};

/// A class of differential polynomials modulo total x-derivatives.
class LocalFunctional {
 public:
  explicit LocalFunctional(DiffPoly representative) : rep_(std::move(representative)) {}
  const DiffPoly& representative() const { return rep_; }
  int rank() const { return rep_.rank(); }

  /// True iff every variational derivative vanishes and the constant term is zero.
  bool is_zero() const;

  friend LocalFunctional operator+(const LocalFunctional& a, const LocalFunctional& b) {
    return LocalFunctional(a.rep_ + b.rep_);
  }
  friend LocalFunctional operator-(const LocalFunctional& a, const LocalFunctional& b) {
    return LocalFunctional(a.rep_ - b.rep_);
  }
  friend LocalFunctional operator*(const Coefficient& c, const LocalFunctional& a) {
    return LocalFunctional(c * a.rep_);
  }

 private:
  DiffPoly rep_;
};

bool functional_eq(const LocalFunctional& f, const LocalFunctional& g);

/// {F, G} = int dF/dv^alpha eta^{alpha beta} d/dx dG/dv^beta.
LocalFunctional classical_poisson(const LocalFunctional& f, const LocalFunctional& g, const EtaMatrix& eta);
LocalFunctional classical_poisson(const LocalFunctional& f, const LocalFunctional& g);

}  // namespace qkdv
