#pragma once

#include "qkdv/fock.hpp"
#include "qkdv/schurops.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qkdv {

/// Full binary rooted tree whose leaves carry labels 1..n from left to right.
/// Subtrees are shared between trees produced by the same enumeration.
class LabeledBinaryTree {
 public:
  static LabeledBinaryTree leaf(int label);
  static LabeledBinaryTree join(const LabeledBinaryTree& left, const LabeledBinaryTree& right);

  bool is_leaf() const;
  int label() const;  // leaves only
  LabeledBinaryTree left() const;
  LabeledBinaryTree right() const;
  int leaf_count() const;

  /// T_i: leaf i becomes an internal node with leaves i and i+1; later
  /// labels shift up by one.
  LabeledBinaryTree split_leaf(int i) const;

  /// "((1 2) 3)"; a single leaf prints as its label.
  std::string to_string() const;
  /// Same bracketing with labels dropped, e.g. "((**)*)".
  std::string shape() const;

 private:
  struct Node;
  explicit LabeledBinaryTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// BT(n) in construction order; (n-1)! trees. Throws for n < 1.
std::vector<LabeledBinaryTree> enumerate_trees(int n);

/// Leaves carry b = b_{(-1)}|0>, internal nodes the normal product of their children.
FockState tree_state(const LabeledBinaryTree& t);

/// Average of tree_state over BT(n), with states of repeated shapes reused.
FockState Z_n(int n);

enum class Route { Trees, Recursion, WeylD, Gk, Schur };

std::string route_name(Route r);
/// "trees", "rec", "weyl", "gk", "schur". Throws std::invalid_argument otherwise.
Route parse_route(std::string_view name);

struct HamiltonianRecord {
  int n = 0;
  DiffPoly density;
  Route route = Route::WeylD;
};

inline constexpr int kTreeRouteMaxN = 7;

/// h_n = phi^{-1}(Z_{n+1})/(n+1)!. Throws std::invalid_argument above
/// kTreeRouteMaxN unless force is set.
HamiltonianRecord h_trees(int n, bool force = false);
/// h_n = 1/n sum_k phi^{-1}(:phi(h_k) phi(h_{n-k-1}):)/C(n+1,k+1).
HamiltonianRecord h_recursion(int n);
/// h_n = D(h_{n-1})/(n(n+1)); the canonical route.
HamiltonianRecord h_weylD(int n);
/// sum_k (-1)^{n-k} d_x^{n-k} g_k/(n-k+1)! at hbar = 1, then regraded.
HamiltonianRecord h_gk(int n);
/// 1/(n+1) sum_k S_{(n-k+1,1^k)}/C(n,k).
HamiltonianRecord h_schur(int n);
HamiltonianRecord hamiltonian(int n, Route route, bool force = false);

/// g_0 = v, g_{n+1} = (s d_x g_n + v g_n)/(n+2); s = 1 when graded is false.
DiffPoly g_seq(int n, bool graded = true);

/// [int h_n, int h_m] vanishes as a functional.
bool commute_check(int n, int m);

struct SpectrumResult {
  Coefficient eigenvalue;
  bool verified = false;
};

/// eigenvalue(n, lambda) and whether phi(h_n)_{(n)} acts on S_lambda by it.
SpectrumResult spectrum(int n, const IntVector& lambda);

}  // namespace qkdv
