#include "qkdv/kdv.hpp"

#include "qkdv/functional.hpp"
#include "qkdv/qbracket.hpp"

#include <map>
#include <stdexcept>

namespace qkdv {

struct LabeledBinaryTree::Node {
  int label = 0;
  int leaves = 1;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

LabeledBinaryTree LabeledBinaryTree::leaf(int label) {
  auto n = std::make_shared<Node>();
  n->label = label;
  return LabeledBinaryTree(std::move(n));
}

LabeledBinaryTree LabeledBinaryTree::join(const LabeledBinaryTree& left, const LabeledBinaryTree& right) {
  auto n = std::make_shared<Node>();
  n->leaves = left.leaf_count() + right.leaf_count();
  n->left = left.node_;
  n->right = right.node_;
  return LabeledBinaryTree(std::move(n));
}

bool LabeledBinaryTree::is_leaf() const { return node_->left == nullptr; }

int LabeledBinaryTree::label() const {
  if (!is_leaf()) {
    throw std::logic_error("internal nodes carry no label");
  }
  return node_->label;
}

LabeledBinaryTree LabeledBinaryTree::left() const { return LabeledBinaryTree(node_->left); }
LabeledBinaryTree LabeledBinaryTree::right() const { return LabeledBinaryTree(node_->right); }
int LabeledBinaryTree::leaf_count() const { return node_->leaves; }

LabeledBinaryTree LabeledBinaryTree::split_leaf(int i) const {
  if (is_leaf()) {
    const int l = node_->label;
    if (l == i) {
      return join(leaf(i), leaf(i + 1));
    }
    return l > i ? leaf(l + 1) : *this;
  }
  return join(left().split_leaf(i), right().split_leaf(i));
}

std::string LabeledBinaryTree::to_string() const {
  if (is_leaf()) {
    return std::to_string(node_->label);
  }
  return "(" + left().to_string() + " " + right().to_string() + ")";
}

std::string LabeledBinaryTree::shape() const {
  if (is_leaf()) {
    return "*";
  }
  return "(" + left().shape() + right().shape() + ")";
}

std::vector<LabeledBinaryTree> enumerate_trees(int n) {
  if (n < 1) {
    throw std::invalid_argument("enumerate_trees requires n >= 1");
  }
  std::vector<LabeledBinaryTree> level{LabeledBinaryTree::leaf(1)};
  for (int size = 1; size < n; ++size) {
    std::vector<LabeledBinaryTree> next;
    next.reserve(level.size() * static_cast<std::size_t>(size));
    for (const auto& t : level) {
      for (int i = 1; i <= size; ++i) {
        next.push_back(t.split_leaf(i));
      }
    }
    level = std::move(next);
  }
  return level;
}

namespace {

class TreeEvaluator {
 public:
  const FockState& state(const LabeledBinaryTree& t) {
    const std::string key = t.shape();
    if (auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    FockState s = t.is_leaf() ? FockState::generator() : normal_prod(state(t.left()), state(t.right()));
    return memo_.emplace(key, std::move(s)).first->second;
  }

 private:
  std::map<std::string, FockState> memo_;
};

}  // namespace

FockState tree_state(const LabeledBinaryTree& t) {
  TreeEvaluator ev;
  return ev.state(t);
}

FockState Z_n(int n) {
  TreeEvaluator ev;
  FockState sum;
  const auto trees = enumerate_trees(n);
  for (const auto& t : trees) {
    sum += ev.state(t);
  }
  return sum * Coefficient(Rational(Integer(1), factorial(n - 1)));
}

std::string route_name(Route r) {
  switch (r) {
    case Route::Trees: return "trees";
    case Route::Recursion: return "rec";
    case Route::WeylD: return "weyl";
    case Route::Gk: return "gk";
    case Route::Schur: return "schur";
  }
  return "?";
}

Route parse_route(std::string_view name) {
  for (Route r : {Route::Trees, Route::Recursion, Route::WeylD, Route::Gk, Route::Schur}) {
    if (name == route_name(r)) {
      return r;
    }
  }
  throw std::invalid_argument("unknown route '" + std::string(name) + "'");
}

namespace {

void require_index(int n) {
  if (n < 0) {
    throw std::invalid_argument("Hamiltonian index must be non-negative");
  }
}

}  // namespace

HamiltonianRecord h_trees(int n, bool force) {
  require_index(n);
  if (n > kTreeRouteMaxN && !force) {
    throw std::invalid_argument("tree route is limited to n <= " + std::to_string(kTreeRouteMaxN) +
                                " (n! tree evaluations); force to override");
  }
  const DiffPoly z = phi_inv(Z_n(n + 1));
  return {n, z * Coefficient(Rational(Integer(1), factorial(n + 1))), Route::Trees};
}

HamiltonianRecord h_recursion(int n) {
  require_index(n);
  std::vector<FockState> states{FockState::generator()};
  std::vector<DiffPoly> h{DiffPoly::v(0)};
  for (int j = 1; j <= n; ++j) {
    FockState acc;
    for (int k = 0; k < j; ++k) {
      acc += normal_prod(states[k], states[j - k - 1]) * Coefficient(Rational(Integer(1), binomial(j + 1, k + 1)));
    }
    acc *= Coefficient(Rational(1, j));
    h.push_back(phi_inv(acc));
    states.push_back(std::move(acc));
  }
  return {n, h[n], Route::Recursion};
}

HamiltonianRecord h_weylD(int n) {
  require_index(n);
  DiffPoly h = DiffPoly::v(0);
  for (int j = 1; j <= n; ++j) {
    h = D_apply(h) * Coefficient(Rational(1, j * (j + 1)));
  }
  return {n, h, Route::WeylD};
}

DiffPoly g_seq(int n, bool graded) {
  if (n < 0) {
    throw std::invalid_argument("g_seq requires n >= 0");
  }
  const Coefficient s = graded ? Coefficient::s_power(1) : Coefficient(1);
  DiffPoly g = DiffPoly::v(0);
  for (int j = 0; j < n; ++j) {
    g = (d_dx(g) * s + DiffPoly::v(0) * g) * Coefficient(Rational(1, j + 2));
  }
  return g;
}

HamiltonianRecord h_gk(int n) {
  require_index(n);
  DiffPoly h(1);
  DiffPoly g = DiffPoly::v(0);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      g = (d_dx(g) + DiffPoly::v(0) * g) * Coefficient(Rational(1, k + 1));
    }
    Rational c(Integer(1), factorial(n - k + 1));
    if ((n - k) % 2 == 1) {
      c = -c;
    }
    h += d_dx(g, n - k) * Coefficient(c);
  }
  return {n, restore_grading(h), Route::Gk};
}

HamiltonianRecord h_schur(int n) {
  require_index(n);
  DiffPoly h(1);
  for (int k = 0; k <= n; ++k) {
    IntVector hook{n - k + 1};
    hook.insert(hook.end(), static_cast<std::size_t>(k), 1);
    h += schur(hook) * Coefficient(Rational(Integer(1), binomial(n, k)));
  }
  return {n, h * Coefficient(Rational(1, n + 1)), Route::Schur};
}

HamiltonianRecord hamiltonian(int n, Route route, bool force) {
  switch (route) {
    case Route::Trees: return h_trees(n, force);
    case Route::Recursion: return h_recursion(n);
    case Route::WeylD: return h_weylD(n);
    case Route::Gk: return h_gk(n);
    case Route::Schur: return h_schur(n);
  }
  throw std::invalid_argument("unknown route");
}

bool commute_check(int n, int m) {
  const LocalFunctional a(h_weylD(n).density);
  const LocalFunctional b(h_weylD(m).density);
  return quantum_bracket(a, b).is_zero();
}

SpectrumResult spectrum(int n, const IntVector& lambda) {
  const Coefficient e = eigenvalue(n, lambda);
  const DiffPoly s = schur(lambda);
  const DiffPoly lhs = hat_apply(h_weylD(n).density, n, s);
  return {e, lhs == s * e};
}

}  // namespace qkdv
