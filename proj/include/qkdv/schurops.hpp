#pragma once

#include "qkdv/diffpoly.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qkdv {

/// Index vector (lambda_1, ..., lambda_l) in Z^l. A partition is the special
/// case of a weakly decreasing vector of positive entries.
using IntVector = std::vector<int>;

bool is_partition(const IntVector& lambda);
/// "3,1,1" -> {3,1,1}; the empty string is the empty partition. Throws
/// std::invalid_argument unless the result is a partition.
IntVector parse_partition(std::string_view text);
std::string to_string(const IntVector& lambda);
/// All partitions of n in reverse lexicographic order.
std::vector<IntVector> partitions_of(int n);

/// Coefficient of z^n in exp(sum_k s^k v^{(k)} z^{k+1}/(k+1)!), or its
/// s = 1 image when graded is false. Zero for n < 0.
DiffPoly e_poly(int n, bool graded = true);

/// Jacobi-Trudi determinant det(e_{lambda_i - i + j}). Throws
/// std::invalid_argument unless lambda is a partition.
DiffPoly schur(const IntVector& lambda, bool graded = true);

// ---- Vertex operators (all at hbar = 1; s in the input is a passive scalar)

/// Polynomial in z^{-1}: key is the z-exponent (always <= 0).
using FieldSeries = std::map<int, DiffPoly>;

/// exp(sign * sum_k k! z^{-k-1} d/dv^{(k)}) p, i.e. the substitution
/// v^{(k)} -> v^{(k)} + sign * k! z^{-k-1}.
FieldSeries annihilation_shift(const DiffPoly& p, int sign);

/// Coefficient of z^n in :exp(phi(z)): applied to p.
DiffPoly B_apply(int n, const DiffPoly& p);
/// Coefficient of z^{-n} in :exp(-phi(z)): applied to p.
DiffPoly Bstar_apply(int n, const DiffPoly& p);

/// B_{lambda_1} ... B_{lambda_l}(1); regraded when graded is true.
DiffPoly hall_littlewood(const IntVector& lambda, bool graded = false);

/// P^{(k)}_m via the vertex operators B, B*. Terms with n < 0 are taken as
/// -C(n,k) B*_{m+n} B_n and terms with n >= 0 as C(n,k) B_{n+1} B*_{m+n+1};
/// both windows are finite on a fixed p.
DiffPoly P_apply(int k, int m, const DiffPoly& p);

inline constexpr int kPAltMaxK = 3;
/// P^{(k)}_m as the z^{-k-m-1} coefficient of :(d/dz + J(z))^k J(z):/(k+1)!.
/// Throws std::invalid_argument for k > kPAltMaxK or k < 0.
DiffPoly P_alt_apply(int k, int m, const DiffPoly& p);

/// Formal rational combination of Hall-Littlewood symbols S_mu.
using HLCombination = std::map<IntVector, Rational>;

/// P^{(k)}_m(S_lambda) by the closed action formula on index vectors.
HLCombination P_on_HL(int k, int m, const IntVector& lambda);
/// sum c_mu hall_littlewood(mu), ungraded.
DiffPoly evaluate(const HLCombination& combo);

/// s^{n+1}/(n+1) sum_{k<=n} C(n+1,k) [C(-l,k+1) + sum_i C(lambda_i - i, k)].
Coefficient eigenvalue(int n, const IntVector& lambda);

}  // namespace qkdv
