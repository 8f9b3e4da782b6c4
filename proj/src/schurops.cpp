#include "qkdv/schurops.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace qkdv {

bool is_partition(const IntVector& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0 || (i > 0 && lambda[i] > lambda[i - 1])) {
      return false;
    }
  }
  return true;
}

IntVector parse_partition(std::string_view text) {
  IntVector out;
  std::size_t pos = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) {
    return out;
  }
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view part = trim(text.substr(pos, comma - pos));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw std::invalid_argument("malformed partition entry '" + std::string(part) + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  if (!is_partition(out)) {
    throw std::invalid_argument("not a partition (entries must be positive and non-increasing): " +
                                std::string(text));
  }
  return out;
}

std::string to_string(const IntVector& lambda) {
  std::string out = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(lambda[i]);
  }
  return out + ")";
}

std::vector<IntVector> partitions_of(int n) {
  std::vector<IntVector> out;
  IntVector cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(rest, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(rest - part, part);
      cur.pop_back();
    }
  };
  if (n >= 0) {
    rec(n, n);
  }
  return out;
}

namespace {

std::vector<DiffPoly> e_table(int top, bool graded) {
  std::vector<DiffPoly> e(static_cast<std::size_t>(std::max(top, 0)) + 1, DiffPoly(1));
  e[0] = DiffPoly::constant(1);
  for (int n = 1; n <= top; ++n) {
    DiffPoly acc(1);
    for (int j = 1; j <= n; ++j) {
      const Coefficient c = graded ? Coefficient::s_power(j - 1, Rational(Integer(1), factorial(j - 1)))
                                   : Coefficient(Rational(Integer(1), factorial(j - 1)));
      acc += (DiffPoly::v(j - 1) * e[n - j]) * c;
    }
    e[n] = acc * Coefficient(Rational(1, n));
  }
  return e;
}

// e_n(-v): the coefficients of exp(-phi_+(z)) at hbar = 1.
std::vector<DiffPoly> ebar_table(int top) {
  std::vector<DiffPoly> e = e_table(top, false);
  for (DiffPoly& p : e) {
    DiffPoly q(1);
    for (const auto& [mono, c] : p.terms()) {
      q.add_term(mono, mono.total_degree() % 2 == 0 ? c : -c);
    }
    p = std::move(q);
  }
  return e;
}

Integer falling(long a, long i) {
  Integer r = 1;
  for (long t = 0; t < i; ++t) {
    r *= a - t;
  }
  return r;
}

}  // namespace

DiffPoly e_poly(int n, bool graded) {
  if (n < 0) {
    return DiffPoly(1);
  }
  return e_table(n, graded)[n];
}

DiffPoly schur(const IntVector& lambda, bool graded) {
  if (!is_partition(lambda)) {
    throw std::invalid_argument("schur requires a partition, got " + to_string(lambda));
  }
  const int l = static_cast<int>(lambda.size());
  if (l == 0) {
    return DiffPoly::constant(1);
  }
  if (l > 30) {
    throw std::invalid_argument("schur: partition too long");
  }
  const std::vector<DiffPoly> e = e_table(lambda[0] + l, graded);
  auto entry = [&](int i, int j) -> const DiffPoly* {
    const int idx = lambda[i] - i + j;
    return idx < 0 ? nullptr : &e[idx];
  };
  // Laplace expansion along rows; the minor only depends on the set of
  // columns already used.
  std::map<unsigned, DiffPoly> memo;
  std::function<DiffPoly(int, unsigned)> minor = [&](int row, unsigned used) -> DiffPoly {
    if (row == l) {
      return DiffPoly::constant(1);
    }
    if (auto it = memo.find(used); it != memo.end()) {
      return it->second;
    }
    DiffPoly acc(1);
    int free_index = 0;
    for (int col = 0; col < l; ++col) {
      if (used & (1u << col)) {
        continue;
      }
      const DiffPoly* a = entry(row, col);
      if (a != nullptr && !a->is_zero()) {
        DiffPoly sub = minor(row + 1, used | (1u << col));
        if (!sub.is_zero()) {
          DiffPoly t = *a * sub;
          if (free_index % 2 == 1) {
            acc -= t;
          } else {
            acc += t;
          }
        }
      }
      ++free_index;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(0, 0);
}

FieldSeries annihilation_shift(const DiffPoly& p, int sign) {
  FieldSeries out;
  for (const auto& [mono, coef] : p.terms()) {
    // Expand prod_k (v^{(k)} + sign k! w^{k+1})^{e_k}, w = 1/z.
    const auto& factors = mono.factors();
    std::function<void(std::size_t, std::vector<Monomial::Factor>&, Rational, int)> rec =
        [&](std::size_t idx, std::vector<Monomial::Factor>& kept, Rational c, int wpow) {
          if (idx == factors.size()) {
            auto [it, inserted] = out.try_emplace(-wpow, p.rank());
            it->second.add_term(Monomial(kept), coef * c);
            return;
          }
          const auto& [var, e] = factors[idx];
          const Rational shift = Rational(factorial(var.order)) * sign;
          Rational power = 1;
          for (int j = 0; j <= e; ++j) {
            if (e - j > 0) {
              kept.emplace_back(var, e - j);
            }
            rec(idx + 1, kept, c * Rational(binomial(e, j)) * power, wpow + j * (var.order + 1));
            if (e - j > 0) {
              kept.pop_back();
            }
            power *= shift;
          }
        };
    std::vector<Monomial::Factor> kept;
    rec(0, kept, Rational(1), 0);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

DiffPoly B_apply(int n, const DiffPoly& p) {
  DiffPoly out(p.rank());
  const FieldSeries shifted = annihilation_shift(p, -1);
  if (shifted.empty()) {
    return out;
  }
  const int top = n - shifted.begin()->first;
  if (top < 0) {
    return out;
  }
  const std::vector<DiffPoly> e = e_table(top, false);
  for (const auto& [j, q] : shifted) {
    if (n - j >= 0) {
      out += e[n - j] * q;
    }
  }
  return out;
}

DiffPoly Bstar_apply(int n, const DiffPoly& p) {
  DiffPoly out(p.rank());
  const FieldSeries shifted = annihilation_shift(p, 1);
  if (shifted.empty()) {
    return out;
  }
  const int top = -n - shifted.begin()->first;
  if (top < 0) {
    return out;
  }
  const std::vector<DiffPoly> e = ebar_table(top);
  for (const auto& [j, q] : shifted) {
    if (-n - j >= 0) {
      out += e[-n - j] * q;
    }
  }
  return out;
}

DiffPoly hall_littlewood(const IntVector& lambda, bool graded) {
  DiffPoly p = DiffPoly::constant(1);
  for (auto it = lambda.rbegin(); it != lambda.rend(); ++it) {
    p = B_apply(*it, p);
    if (p.is_zero()) {
      break;
    }
  }
  return graded ? restore_grading(p) : p;
}

DiffPoly P_apply(int k, int m, const DiffPoly& p) {
  if (k < 0) {
    throw std::invalid_argument("P_apply requires k >= 0");
  }
  DiffPoly out(p.rank());
  if (p.is_zero()) {
    return out;
  }
  const int w = std::max(p.max_weight(), 0);
  for (int n = -w; n < 0; ++n) {
    const Integer c = binomial(n, k);
    if (c == 0) {
      continue;
    }
    const DiffPoly bn = B_apply(n, p);
    if (!bn.is_zero()) {
      out -= Bstar_apply(m + n, bn) * Coefficient(Rational(c));
    }
  }
  for (int n = 0; n <= w - m - 1; ++n) {
    const Integer c = binomial(n, k);
    if (c == 0) {
      continue;
    }
    const DiffPoly bs = Bstar_apply(m + n + 1, p);
    if (!bs.is_zero()) {
      out += B_apply(n + 1, bs) * Coefficient(Rational(c));
    }
  }
  return out;
}

namespace {

// Bell-type polynomials in the symbols J, J', J'', ...: key is the sorted
// list of derivative orders of the factors.
using JPoly = std::map<std::vector<int>, Integer>;

JPoly bell_field(int k) {
  JPoly y{{{0}, 1}};
  for (int step = 0; step < k; ++step) {
    JPoly next;
    for (const auto& [mono, c] : y) {
      for (std::size_t t = 0; t < mono.size(); ++t) {
        if (t > 0 && mono[t] == mono[t - 1]) {
          continue;
        }
        const long mult = std::count(mono.begin(), mono.end(), mono[t]);
        std::vector<int> d = mono;
        d[t] += 1;
        std::sort(d.begin(), d.end());
        next[d] += c * mult;
      }
      std::vector<int> j = mono;
      j.insert(j.begin(), 0);
      std::sort(j.begin(), j.end());
      next[j] += c;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    y = std::move(next);
  }
  return y;
}

// J(z) = sum_{a >= 0} v^{(a)}/a! z^a + sum_{a <= -2} (-a-1)! d/dv^{(-a-2)} z^a.
// Each position of a normal-ordered product picks a mode a; creators
// multiply after all annihilators have acted.
class NormalOrderedProduct {
 public:
  NormalOrderedProduct(const std::vector<int>& orders, int target, int max_order, int max_ann, DiffPoly& out,
                       const Integer& weight)
      : orders_(orders), target_(target), max_order_(max_order), max_ann_(max_ann), out_(out), weight_(weight) {}

  void run(const DiffPoly& p) {
    DiffPoly creators = DiffPoly::constant(1, p.rank());
    descend(0, 0, p, creators, Rational(1), 0);
  }

 private:
  void descend(std::size_t t, int sum, const DiffPoly& acted, const DiffPoly& creators, const Rational& c,
               int annihilators) {
    if (t == orders_.size()) {
      if (sum == target_) {
        out_ += (creators * acted) * Coefficient(c * Rational(weight_));
      }
      return;
    }
    const int i = orders_[t];
    // sum + (a - i) + rest = target, and each later position contributes at
    // least -(max_order + 2) - order.
    int lo_rest = 0;
    for (std::size_t u = t + 1; u < orders_.size(); ++u) {
      lo_rest -= std::max(max_order_, 0) + 2 + orders_[u];
    }
    if (annihilators < max_ann_) {
      for (int a = -2; a >= -(max_order_ + 2); --a) {
        const Integer f = falling(a, i);
        DiffPoly next = partial(acted, Var{1, -a - 2});
        if (next.is_zero()) {
          continue;
        }
        descend(t + 1, sum + a - i, next, creators, c * Rational(f * factorial(-a - 1)), annihilators + 1);
      }
    }
    const int a_max = target_ - sum + i - lo_rest;
    for (int a = i; a <= a_max; ++a) {
      const Integer f = falling(a, i);
      descend(t + 1, sum + a - i, acted, creators * DiffPoly::v(a), c * ratio(f, factorial(a)), annihilators);
    }
  }

  const std::vector<int>& orders_;
  int target_;
  int max_order_;
  int max_ann_;
  DiffPoly& out_;
  Integer weight_;
};

}  // namespace

DiffPoly P_alt_apply(int k, int m, const DiffPoly& p) {
  if (k < 0 || k > kPAltMaxK) {
    throw std::invalid_argument("P_alt_apply supports 0 <= k <= " + std::to_string(kPAltMaxK));
  }
  if (p.rank() != 1) {
    throw std::invalid_argument("P_alt_apply is defined for rank one");
  }
  DiffPoly out(1);
  if (p.is_zero()) {
    return out;
  }
  const int target = -k - m - 1;
  for (const auto& [orders, c] : bell_field(k)) {
    NormalOrderedProduct prod(orders, target, p.max_order(), std::max(p.degree(), 0), out, c);
    prod.run(p);
  }
  return out * Coefficient(Rational(Integer(1), factorial(k + 1)));
}

HLCombination P_on_HL(int k, int m, const IntVector& lambda) {
  HLCombination out;
  auto add = [&out](const IntVector& mu, const Rational& c) {
    if (c == 0) {
      return;
    }
    Rational& slot = out[mu];
    slot += c;
    if (slot == 0) {
      out.erase(mu);
    }
  };
  const int l = static_cast<int>(lambda.size());
  for (int i = 1; i <= l; ++i) {
    IntVector mu = lambda;
    mu[i - 1] -= m;
    add(mu, Rational(binomial(lambda[i - 1] - m - i, k)));
  }
  if (m == 0) {
    add(lambda, Rational(binomial(-l, k + 1)));
  }
  if (m < 0) {
    for (int i = 1; i <= -m; ++i) {
      IntVector mu = lambda;
      mu.push_back(i);
      mu.insert(mu.end(), static_cast<std::size_t>(-m - i), 1);
      const int sign = ((m - i) % 2 == 0) ? 1 : -1;
      add(mu, Rational(binomial(i - l - 1, k)) * sign);
    }
  }
  return out;
}

DiffPoly evaluate(const HLCombination& combo) {
  DiffPoly out(1);
  for (const auto& [mu, c] : combo) {
    out += hall_littlewood(mu) * Coefficient(c);
  }
  return out;
}

Coefficient eigenvalue(int n, const IntVector& lambda) {
  if (n < 0) {
    throw std::invalid_argument("eigenvalue requires n >= 0");
  }
  const long l = static_cast<long>(lambda.size());
  Rational total = 0;
  for (int k = 0; k <= n; ++k) {
    Integer inner = binomial(-l, k + 1);
    for (long i = 1; i <= l; ++i) {
      inner += binomial(lambda[i - 1] - i, k);
    }
    total += Rational(binomial(n + 1, k) * inner);
  }
  total /= n + 1;
  return Coefficient::s_power(static_cast<unsigned>(n + 1), total);
}

}  // namespace qkdv
