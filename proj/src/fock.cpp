#include "qkdv/fock.hpp"

#include "qkdv/format.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace qkdv {

// ------------------------------------------------------------ FockMonomial

FockMonomial::FockMonomial(std::vector<Var> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  for (const Var& f : factors_) {
    if (f.order < 0) {
      throw std::invalid_argument("creator index must be non-negative");
    }
    weight_ += f.order + 1;
  }
}

FockMonomial operator*(const FockMonomial& a, const FockMonomial& b) {
  FockMonomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
             std::back_inserter(out.factors_));
  out.weight_ = a.weight_ + b.weight_;
  return out;
}

bool operator<(const FockMonomial& a, const FockMonomial& b) {
  if (a.weight_ != b.weight_) {
    return a.weight_ < b.weight_;
  }
  return a.factors_ < b.factors_;
}

// --------------------------------------------------------------- FockState

FockState FockState::vacuum(int rank) { return term(FockMonomial{}, Coefficient(1), rank); }

FockState FockState::generator(int alpha, int rank) {
  return term(FockMonomial({Var{alpha, 0}}), Coefficient(1), rank);
}

FockState FockState::term(const FockMonomial& m, const Coefficient& c, int rank) {
  FockState s(rank);
  s.add_term(m, c);
  return s;
}

int FockState::max_weight() const {
  int w = -1;
  for (const auto& [m, c] : terms_) {
    w = std::max(w, m.weight());
  }
  return w;
}

void FockState::add_term(const FockMonomial& m, const Coefficient& c) {
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

FockState& FockState::operator+=(const FockState& o) {
  for (const auto& [m, c] : o.terms_) {
    add_term(m, c);
  }
  return *this;
}

FockState& FockState::operator-=(const FockState& o) {
  for (const auto& [m, c] : o.terms_) {
    add_term(m, -c);
  }
  return *this;
}

FockState& FockState::operator*=(const Coefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, cm] : terms_) {
    cm = cm * c;
  }
  return *this;
}

// -------------------------------------------------------------- LambdaPoly

FockState LambdaPoly::coefficient(int n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? FockState(rank_) : it->second;
}

void LambdaPoly::add(int power, const FockState& s) {
  if (s.is_zero()) {
    return;
  }
  auto [it, inserted] = coeffs_.try_emplace(power, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) {
      coeffs_.erase(it);
    }
  }
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  for (const auto& [n, s] : o.coeffs_) {
    add(n, s);
  }
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
  for (const auto& [n, s] : o.coeffs_) {
    add(n, -s);
  }
  return *this;
}

LambdaPoly operator*(const Coefficient& c, const LambdaPoly& a) {
  LambdaPoly out(a.rank());
  for (const auto& [n, s] : a.coefficients()) {
    out.add(n, c * s);
  }
  return out;
}

// ---------------------------------------------------------------- phi

FockState phi(const DiffPoly& p) {
  FockState out(p.rank());
  for (const auto& [m, c] : p.terms()) {
    std::vector<Var> factors;
    Integer scale = 1;
    for (const auto& [v, e] : m.factors()) {
      const Integer f = factorial(v.order);
      for (int i = 0; i < e; ++i) {
        factors.push_back(v);
        scale *= f;
      }
    }
    out.add_term(FockMonomial(std::move(factors)), c * Rational(scale));
  }
  return out;
}

DiffPoly phi_inv(const FockState& a) {
  DiffPoly out(a.rank());
  for (const auto& [m, c] : a.terms()) {
    std::vector<Monomial::Factor> factors;
    Integer scale = 1;
    for (const Var& v : m.factors()) {
      factors.emplace_back(v, 1);
      scale *= factorial(v.order);
    }
    out.add_term(Monomial(std::move(factors)), c * Rational(Integer(1), scale));
  }
  return out;
}

// ---------------------------------------------------------- single modes

FockState apply_mode(int alpha, int n, const FockState& a, const EtaMatrix& eta) {
  FockState out(a.rank());
  if (n == 0) {
    return out;
  }
  if (n < 0) {
    const FockMonomial creator({Var{alpha, -n - 1}});
    for (const auto& [m, c] : a.terms()) {
      out.add_term(creator * m, c);
    }
    return out;
  }
  for (const auto& [m, c] : a.terms()) {
    const auto& fs = m.factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (fs[i].order + 1 != n || eta(alpha, fs[i].alpha) == 0) {
        continue;
      }
      std::vector<Var> rest;
      rest.reserve(fs.size() - 1);
      for (std::size_t j = 0; j < fs.size(); ++j) {
        if (j != i) {
          rest.push_back(fs[j]);
        }
      }
      out.add_term(FockMonomial(std::move(rest)), c * Coefficient::s_power(2, eta(alpha, fs[i].alpha) * n));
    }
  }
  return out;
}

FockState translate(const FockState& a) {
  FockState out(a.rank());
  for (const auto& [m, c] : a.terms()) {
    const auto& fs = m.factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      std::vector<Var> next = fs;
      next[i].order += 1;
      out.add_term(FockMonomial(std::move(next)), c * Rational(fs[i].order + 1));
    }
  }
  return out;
}

FockState translate(const FockState& a, int times) {
  FockState out = a;
  for (int i = 0; i < times && !out.is_zero(); ++i) {
    out = translate(out);
  }
  return out;
}

// ------------------------------------------------------------ n-th product
//
// For a = prod_i b^{alpha_i}_{(-k_i-1)}|0>, the coefficient of z^{-m-1} in
// Y(a, z) is a sum of normal-ordered monomials prod_i c(j_i, k_i) b^{alpha_i}_{(j_i)}
// with sum_i j_i = m + 1 - wt(a) and c(j, k) = (-1)^k C(j + k, k). The
// coefficient vanishes for -k-1 < j < 0 and b_{(0)} = 0, so each factor is
// either an annihilator with j >= 1 or a creator b_{(-q-1)} with q >= k and
// c = C(q, k).

namespace {

using Group = std::pair<Var, int>;  // factor and multiplicity

std::vector<Group> group_factors(const std::vector<Var>& fs) {
  std::vector<Group> out;
  for (const Var& v : fs) {
    if (!out.empty() && out.back().first == v) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

Integer falling(long d, long n) {
  Integer r = 1;
  for (long i = 0; i < n; ++i) {
    r *= d - i;
  }
  return r;
}

// Creator contributions graded by excess: entry e holds the sum over ways of
// raising creator indices by a total of e of the product of C(q, k) factors.
using Series = std::vector<std::map<FockMonomial, Rational>>;

Series single_creator_series(Var f, int max_excess) {
  Series s(max_excess + 1);
  for (int e = 0; e <= max_excess; ++e) {
    s[e][FockMonomial({Var{f.alpha, f.order + e}})] = Rational(binomial(f.order + e, f.order));
  }
  return s;
}

Series multiply(const Series& a, const Series& b, int max_excess) {
  Series out(max_excess + 1);
  for (int i = 0; i < static_cast<int>(a.size()) && i <= max_excess; ++i) {
    for (int j = 0; j < static_cast<int>(b.size()) && i + j <= max_excess; ++j) {
      for (const auto& [ma, ca] : a[i]) {
        for (const auto& [mb, cb] : b[j]) {
          out[i + j][ma * mb] += ca * cb;
        }
      }
    }
  }
  for (auto& level : out) {
    std::erase_if(level, [](const auto& kv) { return kv.second == 0; });
  }
  return out;
}

class ProductKernel {
 public:
  ProductKernel(const EtaMatrix& eta) : eta_(eta) {}

  void run(const FockMonomial& a, int m, const FockMonomial& b, const Coefficient& coef, FockState& out) {
    a_groups_ = group_factors(a.factors());
    b_groups_ = group_factors(b.factors());
    remaining_b_.assign(b_groups_.size(), 0);
    for (std::size_t t = 0; t < b_groups_.size(); ++t) {
      remaining_b_[t] = b_groups_[t].second;
    }
    creators_.assign(a_groups_.size(), 0);
    budget_base_ = a.weight() - m - 1;
    coef_ = &coef;
    out_ = &out;
    descend(0, 0, a_groups_.empty() ? 0 : a_groups_[0].second, Rational(1), 0, 0);
  }

 private:
  // Walks (a-group, b-group) pairs choosing how many factors of the a-group
  // annihilate factors of the b-group.
  void descend(std::size_t ga, std::size_t gb, int left_in_a, const Rational& weight, int ann_modes,
               unsigned ann_count) {
    if (ga == a_groups_.size()) {
      finish(weight, ann_modes, ann_count);
      return;
    }
    if (gb == b_groups_.size()) {
      creators_[ga] = left_in_a;
      const int next_left = ga + 1 < a_groups_.size() ? a_groups_[ga + 1].second : 0;
      descend(ga + 1, 0, next_left, weight, ann_modes, ann_count);
      return;
    }
    const Var af = a_groups_[ga].first;
    const Var bf = b_groups_[gb].first;
    const Rational& e = eta_(af.alpha, bf.alpha);
    const int max_n = (e == 0) ? 0 : std::min(left_in_a, remaining_b_[gb]);
    const int j = bf.order + 1;
    // Per annihilation: c(j, k) * hbar * eta * j, with hbar counted separately.
    Rational per = Rational(binomial(j + af.order, af.order)) * e * j;
    if (af.order % 2 == 1) {
      per = -per;
    }
    Rational w = weight;
    for (int n = 0; n <= max_n; ++n) {
      if (n > 0) {
        w *= per;
      }
      const Rational ways = Rational(binomial(left_in_a, n) * falling(remaining_b_[gb], n));
      remaining_b_[gb] -= n;
      descend(ga, gb + 1, left_in_a - n, w * ways, ann_modes + n * j, ann_count + n);
      remaining_b_[gb] += n;
    }
  }

  void finish(const Rational& weight, int ann_modes, unsigned ann_count) {
    const int budget = budget_base_ + ann_modes;
    int base = 0;
    for (std::size_t g = 0; g < a_groups_.size(); ++g) {
      base += creators_[g] * (a_groups_[g].first.order + 1);
    }
    const int excess = budget - base;
    if (excess < 0) {
      return;
    }
    std::vector<Var> residual;
    for (std::size_t t = 0; t < b_groups_.size(); ++t) {
      for (int i = 0; i < remaining_b_[t]; ++i) {
        residual.push_back(b_groups_[t].first);
      }
    }
    const FockMonomial rest(std::move(residual));
    const Coefficient c = (*coef_) * Coefficient::s_power(2 * ann_count, weight);

    Series total(excess + 1);
    total[0][FockMonomial{}] = 1;
    for (std::size_t g = 0; g < a_groups_.size(); ++g) {
      if (creators_[g] > 0) {
        total = multiply(total, power_series(a_groups_[g].first, creators_[g], excess), excess);
      }
    }
    for (const auto& [mono, r] : total[excess]) {
      out_->add_term(mono * rest, c * r);
    }
  }

  const Series& power_series(Var f, int count, int max_excess) {
    const auto key = std::make_tuple(f.alpha, f.order, count, max_excess);
    auto it = cache_.find(key);
    if (it != cache_.end()) {
      return it->second;
    }
    const Series one = single_creator_series(f, max_excess);
    Series acc(max_excess + 1);
    acc[0][FockMonomial{}] = 1;
    for (int i = 0; i < count; ++i) {
      acc = multiply(acc, one, max_excess);
    }
    return cache_.emplace(key, std::move(acc)).first->second;
  }

  const EtaMatrix& eta_;
  std::vector<Group> a_groups_;
  std::vector<Group> b_groups_;
  std::vector<int> remaining_b_;
  std::vector<int> creators_;
  int budget_base_ = 0;
  const Coefficient* coef_ = nullptr;
  FockState* out_ = nullptr;
  std::map<std::tuple<int, int, int, int>, Series> cache_;
};

void check_ranks(const FockState& a, const FockState& b, const EtaMatrix& eta) {
  if (a.rank() != b.rank() || a.rank() != eta.rank()) {
    throw std::invalid_argument("rank mismatch in Fock-space product");
  }
}

}  // namespace

FockState nth_product(const FockState& a, int m, const FockState& b, const EtaMatrix& eta) {
  check_ranks(a, b, eta);
  FockState out(a.rank());
  ProductKernel kernel(eta);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      // The output has weight wt(a) + wt(b) - m - 1, which must be >= 0.
      if (ma.weight() + mb.weight() - m - 1 < 0) {
        continue;
      }
      kernel.run(ma, m, mb, ca * cb, out);
    }
  }
  return out;
}

FockState nth_product(const FockState& a, int m, const FockState& b) {
  return nth_product(a, m, b, EtaMatrix::identity(a.rank()));
}

FockState normal_prod(const FockState& a, const FockState& b, const EtaMatrix& eta) {
  return nth_product(a, -1, b, eta);
}

FockState normal_prod(const FockState& a, const FockState& b) { return nth_product(a, -1, b); }

LambdaPoly lambda_bracket(const FockState& a, const FockState& b, const EtaMatrix& eta) {
  LambdaPoly out(a.rank());
  const int top = a.max_weight() + b.max_weight() - 1;
  for (int n = 0; n <= top; ++n) {
    FockState prod = nth_product(a, n, b, eta);
    if (!prod.is_zero()) {
      out.add(n, Coefficient(Rational(Integer(1), factorial(n))) * prod);
    }
  }
  return out;
}

LambdaPoly lambda_bracket(const FockState& a, const FockState& b) {
  return lambda_bracket(a, b, EtaMatrix::identity(a.rank()));
}

std::string to_text(const FockState& a) {
  if (a.is_zero()) {
    return "0";
  }
  std::string out;
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [e, r] : c.terms()) {
      if (!out.empty()) {
        out += " + ";
      }
      out += to_string(r);
      if (e == 1) {
        out += " * s";
      } else if (e > 1) {
        out += " * s^" + std::to_string(e);
      }
      out += " * ";
      bool first = true;
      for (const Var& f : m.factors()) {
        if (!first) {
          out += " ";
        }
        first = false;
        out += "b";
        if (a.rank() > 1) {
          out += std::to_string(f.alpha);
        }
        out += "(" + std::to_string(-f.order - 1) + ")";
      }
      out += "|0>";
    }
  }
  return out;
}

}  // namespace qkdv
