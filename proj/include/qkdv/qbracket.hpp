#pragma once

#include "qkdv/functional.hpp"

#include <map>
#include <vector>

namespace qkdv {

/// phi^{-1}(phi(f)_{(n)} phi(g)) for n >= 0, evaluated as a finite sum of
/// products of m-fold partial derivatives. Throws std::invalid_argument for
/// n < 0; negative modes live in the Fock engine.
DiffPoly mode_action_closed(const DiffPoly& f, int n, const DiffPoly& g, const EtaMatrix& eta);
DiffPoly mode_action_closed(const DiffPoly& f, int n, const DiffPoly& g);

/// [F, G] = phi^{-1}(phi(G)_{(0)} phi(F)).
LocalFunctional quantum_bracket(const LocalFunctional& f, const LocalFunctional& g, const EtaMatrix& eta);
LocalFunctional quantum_bracket(const LocalFunctional& f, const LocalFunctional& g);

/// The rank-one operator phi^{-1} o phi(f)_{(n)} o phi, written as a
/// differential operator sum_S c_S(x) d^{|S|}/dv^{(s_1)}...dv^{(s_m)}.
/// Terms are materialized for derivative orders s_i <= max_order, which is
/// enough to act on any polynomial whose variables stay within that order.
class HatOperator {
 public:
  HatOperator(const DiffPoly& f, int n, int max_order);

  int max_order() const { return max_order_; }
  /// Key: nondecreasing derivative orders (s_1, ..., s_m).
  const std::map<std::vector<int>, DiffPoly>& terms() const { return terms_; }

  /// Throws std::invalid_argument if p involves orders above max_order().
  DiffPoly apply(const DiffPoly& p) const;

 private:
  int max_order_;
  std::map<std::vector<int>, DiffPoly> terms_;
};

DiffPoly hat_apply(const DiffPoly& f, int n, const DiffPoly& g);

/// The rank-one second-order operator
///   sum (s+t+1)!/(s!t!) v^{(s)} v^{(t)} d/dv^{(s+t)}
///   + hbar sum (s+1)!(t+1)!/(s+t+2)! v^{(s+t+2)} d^2/dv^{(s)}dv^{(t)}.
DiffPoly D_apply(const DiffPoly& p);

}  // namespace qkdv
