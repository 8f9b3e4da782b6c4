#include "qkdv/diffpoly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qkdv {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [v, e] : factors) {
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(v, e);
    }
  }
  std::erase_if(factors_, [](const Factor& f) { return f.second <= 0; });
  for (const auto& [v, e] : factors_) {
    weight_ += e * (v.order + 1);
  }
}

Monomial Monomial::of(Var v, int exponent) { return Monomial({{v, exponent}}); }

int Monomial::exponent(Var v) const {
  for (const auto& [w, e] : factors_) {
    if (w == v) {
      return e;
    }
  }
  return 0;
}

int Monomial::differential_degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) {
    d += e * v.order;
  }
  return d;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) {
    d += e;
  }
  return d;
}

int Monomial::max_order() const {
  int m = -1;
  for (const auto& [v, e] : factors_) {
    m = std::max(m, v.order);
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.weight_ = a.weight_ + b.weight_;
  return out;
}

Monomial Monomial::without_one(Var v) const {
  Monomial out = *this;
  for (auto it = out.factors_.begin(); it != out.factors_.end(); ++it) {
    if (it->first == v) {
      if (--it->second == 0) {
        out.factors_.erase(it);
      }
      out.weight_ -= v.order + 1;
      return out;
    }
  }
  throw std::logic_error("Monomial::without_one: variable not present");
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.weight_ != b.weight_) {
    return a.weight_ < b.weight_;
  }
  const std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [va, ea] = a.factors_[i];
    const auto& [vb, eb] = b.factors_[i];
    if (va != vb) {
      return va < vb;
    }
    if (ea != eb) {
      return ea > eb;
    }
  }
  return a.factors_.size() < b.factors_.size();
}

// ---------------------------------------------------------------- DiffPoly

namespace {

void check_rank(int rank) {
  if (rank < 1) {
    throw std::invalid_argument("rank must be positive");
  }
}

void check_same_rank(const DiffPoly& a, const DiffPoly& b) {
  if (a.rank() != b.rank()) {
    throw std::invalid_argument("rank mismatch between differential polynomials");
  }
}

}  // namespace

DiffPoly::DiffPoly(int rank) : rank_(rank) { check_rank(rank); }

DiffPoly::DiffPoly(int rank, TermMap terms) : rank_(rank), terms_(std::move(terms)) {
  check_rank(rank);
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) {
      if (v.alpha < 1 || v.alpha > rank_ || v.order < 0) {
        throw std::invalid_argument("variable out of range for rank");
      }
    }
  }
}

DiffPoly DiffPoly::constant(const Coefficient& c, int rank) {
  DiffPoly p(rank);
  p.add_term(Monomial{}, c);
  return p;
}

DiffPoly DiffPoly::variable(int alpha, int order, int rank) {
  return term(Monomial::of(Var{alpha, order}), Coefficient(1), rank);
}

DiffPoly DiffPoly::term(const Monomial& m, const Coefficient& c, int rank) {
  DiffPoly p(rank);
  for (const auto& [v, e] : m.factors()) {
    if (v.alpha < 1 || v.alpha > rank || v.order < 0) {
      throw std::invalid_argument("variable out of range for rank");
    }
  }
  p.add_term(m, c);
  return p;
}

Coefficient DiffPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient{} : it->second;
}

int DiffPoly::max_order() const {
  int m = -1;
  for (const auto& [mono, c] : terms_) {
    m = std::max(m, mono.max_order());
  }
  return m;
}

int DiffPoly::degree() const {
  int d = -1;
  for (const auto& [mono, c] : terms_) {
    d = std::max(d, mono.total_degree());
  }
  return d;
}

int DiffPoly::max_weight() const {
  int w = -1;
  for (const auto& [mono, c] : terms_) {
    w = std::max(w, mono.weight());
  }
  return w;
}

std::vector<Var> DiffPoly::variables() const {
  std::set<Var> vars;
  for (const auto& [mono, c] : terms_) {
    for (const auto& [v, e] : mono.factors()) {
      vars.insert(v);
    }
  }
  return {vars.begin(), vars.end()};
}

void DiffPoly::add_term(const Monomial& m, const Coefficient& c) {
  if (c.is_zero()) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  check_same_rank(*this, o);
  for (const auto& [m, c] : o.terms_) {
    add_term(m, c);
  }
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  check_same_rank(*this, o);
  for (const auto& [m, c] : o.terms_) {
    add_term(m, -c);
  }
  return *this;
}

DiffPoly& DiffPoly::operator*=(const Coefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_constant()) {
    const Rational r = c.at(0);
    for (auto& [m, cm] : terms_) {
      cm *= r;
    }
    return *this;
  }
  for (auto& [m, cm] : terms_) {
    cm = cm * c;
  }
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  check_same_rank(a, b);
  DiffPoly out(a.rank());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

DiffPoly pow(const DiffPoly& p, unsigned e) {
  DiffPoly result = DiffPoly::constant(1, p.rank());
  DiffPoly base = p;
  while (e > 0) {
    if (e & 1u) {
      result = result * base;
    }
    e >>= 1u;
    if (e > 0) {
      base = base * base;
    }
  }
  return result;
}

// ---------------------------------------------------------------- calculus

DiffPoly d_dx(const DiffPoly& p) {
  DiffPoly out(p.rank());
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.factors()) {
      Monomial reduced = m.without_one(v);
      Monomial next = reduced * Monomial::of(Var{v.alpha, v.order + 1});
      out.add_term(next, c * Rational(e));
    }
  }
  return out;
}

DiffPoly d_dx(const DiffPoly& p, int times) {
  DiffPoly out = p;
  for (int i = 0; i < times && !out.is_zero(); ++i) {
    out = d_dx(out);
  }
  return out;
}

DiffPoly partial(const DiffPoly& p, Var v) {
  DiffPoly out(p.rank());
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(v);
    if (e > 0) {
      out.add_term(m.without_one(v), c * Rational(e));
    }
  }
  return out;
}

DiffPoly variational_derivative(const DiffPoly& p, int alpha) {
  DiffPoly out(p.rank());
  int top = -1;
  for (const Var& v : p.variables()) {
    if (v.alpha == alpha) {
      top = std::max(top, v.order);
    }
  }
  for (int k = 0; k <= top; ++k) {
    DiffPoly term = d_dx(partial(p, Var{alpha, k}), k);
    if (k % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

std::map<int, DiffPoly> weight_components(const DiffPoly& p) {
  std::map<int, DiffPoly> parts;
  for (const auto& [m, c] : p.terms()) {
    auto [it, inserted] = parts.try_emplace(m.weight(), p.rank());
    it->second.add_term(m, c);
  }
  return parts;
}

std::map<int, DiffPoly> degree_components(const DiffPoly& p) {
  std::map<int, DiffPoly> parts;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [e, r] : c.terms()) {
      const int d = m.differential_degree() - static_cast<int>(e);
      auto [it, inserted] = parts.try_emplace(d, p.rank());
      it->second.add_term(m, Coefficient::s_power(e, r));
    }
  }
  return parts;
}

DiffPoly at_s_one(const DiffPoly& p) {
  DiffPoly out(p.rank());
  for (const auto& [m, c] : p.terms()) {
    out.add_term(m, c.at_s_one());
  }
  return out;
}

DiffPoly restore_grading(const DiffPoly& p) {
  DiffPoly out(p.rank());
  for (const auto& [m, c] : p.terms()) {
    out.add_term(m, c.shifted(static_cast<unsigned>(m.differential_degree())));
  }
  return out;
}

DiffPoly s_coefficient(const DiffPoly& p, unsigned k) {
  DiffPoly out(p.rank());
  for (const auto& [m, c] : p.terms()) {
    out.add_term(m, c.at(k));
  }
  return out;
}

}  // namespace qkdv
