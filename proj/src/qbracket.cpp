#include "qkdv/qbracket.hpp"

#include <stdexcept>

namespace qkdv {

namespace {

struct Pair {
  Var f_var;
  Var g_var;
  Rational eta;
};

// Sums over multisets of (f-variable, g-variable) pairs; a multiset with
// multiplicities c_p stands for m!/prod c_p! ordered tuples, which cancels
// the 1/m! prefactor down to 1/prod c_p!.
class ClosedFormSum {
 public:
  ClosedFormSum(int n, const std::vector<Pair>& pairs, DiffPoly& out) : n_(n), pairs_(pairs), out_(out) {}

  void descend(std::size_t start, int depth, const DiffPoly& fpart, const DiffPoly& gpart, const Rational& coef,
               int sum_rs, std::size_t last, int run) {
    if (depth > 0) {
      const int d = 2 * depth - 1 - n_ + sum_rs;
      if (d >= 0) {
        DiffPoly t = gpart * d_dx(fpart, d);
        t *= Coefficient::s_power(2 * depth, coef / Rational(factorial(d)));
        out_ += t;
      }
    }
    for (std::size_t p = start; p < pairs_.size(); ++p) {
      const Pair& pr = pairs_[p];
      DiffPoly fnext = partial(fpart, pr.f_var);
      if (fnext.is_zero()) {
        continue;
      }
      DiffPoly gnext = partial(gpart, pr.g_var);
      if (gnext.is_zero()) {
        continue;
      }
      const int r = pr.f_var.order;
      const int s = pr.g_var.order;
      const int next_run = (depth > 0 && p == last) ? run + 1 : 1;
      Rational c = coef * Rational(factorial(r + s + 1)) * pr.eta / next_run;
      if (r % 2 == 1) {
        c = -c;
      }
      descend(p, depth + 1, fnext, gnext, c, sum_rs + r + s, p, next_run);
    }
  }

 private:
  int n_;
  const std::vector<Pair>& pairs_;
  DiffPoly& out_;
};

}  // namespace

DiffPoly mode_action_closed(const DiffPoly& f, int n, const DiffPoly& g, const EtaMatrix& eta) {
  if (n < 0) {
    throw std::invalid_argument("mode_action_closed requires n >= 0; use the Fock engine for negative modes");
  }
  if (f.rank() != g.rank() || f.rank() != eta.rank()) {
    throw std::invalid_argument("mode_action_closed: rank mismatch");
  }
  std::vector<Pair> pairs;
  for (const Var& a : f.variables()) {
    for (const Var& b : g.variables()) {
      if (eta(a.alpha, b.alpha) != 0) {
        pairs.push_back({a, b, eta(a.alpha, b.alpha)});
      }
    }
  }
  DiffPoly out(f.rank());
  ClosedFormSum sum(n, pairs, out);
  sum.descend(0, 0, f, g, Rational(1), 0, 0, 0);
  return out;
}

DiffPoly mode_action_closed(const DiffPoly& f, int n, const DiffPoly& g) {
  return mode_action_closed(f, n, g, EtaMatrix::identity(f.rank()));
}

LocalFunctional quantum_bracket(const LocalFunctional& f, const LocalFunctional& g, const EtaMatrix& eta) {
  return LocalFunctional(mode_action_closed(g.representative(), 0, f.representative(), eta));
}

LocalFunctional quantum_bracket(const LocalFunctional& f, const LocalFunctional& g) {
  return quantum_bracket(f, g, EtaMatrix::identity(f.rank()));
}

// ------------------------------------------------------------ HatOperator

namespace {

// Positions i = 1..m pair a derivative order s_i (nondecreasing, since the
// operator only depends on the multiset) with a free order r_i acting on f.
// Summing ordered s-tuples against 1/m! leaves 1/prod(mult_S)!.
class HatBuilder {
 public:
  HatBuilder(int n, int max_order, std::vector<int> f_orders, std::map<std::vector<int>, DiffPoly>& terms)
      : n_(n), max_order_(max_order), f_orders_(std::move(f_orders)), terms_(terms) {}

  void descend(std::vector<int>& s_seq, const DiffPoly& fpart, const Rational& coef, int sum_rs, int run) {
    const int depth = static_cast<int>(s_seq.size());
    if (depth > 0) {
      const int d = 2 * depth - 1 - n_ + sum_rs;
      if (d >= 0) {
        DiffPoly c = d_dx(fpart, d);
        if (!c.is_zero()) {
          c *= Coefficient::s_power(2 * depth, coef / Rational(factorial(d)));
          auto [it, inserted] = terms_.try_emplace(s_seq, 1);
          it->second += c;
        }
      }
    }
    const int s_start = s_seq.empty() ? 0 : s_seq.back();
    for (int r : f_orders_) {
      DiffPoly fnext = partial(fpart, Var{1, r});
      if (fnext.is_zero()) {
        continue;
      }
      for (int s = s_start; s <= max_order_; ++s) {
        const int next_run = (!s_seq.empty() && s == s_seq.back()) ? run + 1 : 1;
        Rational c = coef * Rational(factorial(r + s + 1)) / next_run;
        if (r % 2 == 1) {
          c = -c;
        }
        s_seq.push_back(s);
        descend(s_seq, fnext, c, sum_rs + r + s, next_run);
        s_seq.pop_back();
      }
    }
  }

 private:
  int n_;
  int max_order_;
  std::vector<int> f_orders_;
  std::map<std::vector<int>, DiffPoly>& terms_;
};

}  // namespace

HatOperator::HatOperator(const DiffPoly& f, int n, int max_order) : max_order_(max_order) {
  if (n < 0) {
    throw std::invalid_argument("HatOperator requires n >= 0");
  }
  if (f.rank() != 1) {
    throw std::invalid_argument("HatOperator is defined for rank one");
  }
  std::vector<int> orders;
  for (const Var& v : f.variables()) {
    orders.push_back(v.order);
  }
  HatBuilder builder(n, max_order, std::move(orders), terms_);
  std::vector<int> s_seq;
  builder.descend(s_seq, f, Rational(1), 0, 0);
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

DiffPoly HatOperator::apply(const DiffPoly& p) const {
  if (p.rank() != 1) {
    throw std::invalid_argument("HatOperator acts on rank-one polynomials");
  }
  if (p.max_order() > max_order_) {
    throw std::invalid_argument("HatOperator: argument exceeds the materialized derivative order");
  }
  DiffPoly out(1);
  for (const auto& [s_seq, coef] : terms_) {
    DiffPoly d = p;
    for (int s : s_seq) {
      d = partial(d, Var{1, s});
      if (d.is_zero()) {
        break;
      }
    }
    if (!d.is_zero()) {
      out += coef * d;
    }
  }
  return out;
}

DiffPoly hat_apply(const DiffPoly& f, int n, const DiffPoly& g) {
  return HatOperator(f, n, std::max(g.max_order(), 0)).apply(g);
}

DiffPoly D_apply(const DiffPoly& p) {
  if (p.rank() != 1) {
    throw std::invalid_argument("D_apply is defined for rank one");
  }
  DiffPoly out(1);
  const int top = p.max_order();
  for (int u = 0; u <= top; ++u) {
    const DiffPoly du = partial(p, Var{1, u});
    if (du.is_zero()) {
      continue;
    }
    for (int s = 0; s <= u; ++s) {
      const int t = u - s;
      const Rational c = ratio(factorial(s + t + 1), factorial(s) * factorial(t));
      out += (DiffPoly::v(s) * DiffPoly::v(t) * du) * Coefficient(c);
    }
  }
  for (int s = 0; s <= top; ++s) {
    const DiffPoly ds = partial(p, Var{1, s});
    if (ds.is_zero()) {
      continue;
    }
    for (int t = 0; t <= top; ++t) {
      const DiffPoly dst = partial(ds, Var{1, t});
      if (dst.is_zero()) {
        continue;
      }
      const Rational c = ratio(factorial(s + 1) * factorial(t + 1), factorial(s + t + 2));
      out += (DiffPoly::v(s + t + 2) * dst) * Coefficient::s_power(2, c);
    }
  }
  return out;
}

}  // namespace qkdv
