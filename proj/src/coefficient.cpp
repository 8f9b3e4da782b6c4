#include "qkdv/coefficient.hpp"

#include <map>

namespace qkdv {

Coefficient::Coefficient(const Rational& r) {
  if (r != 0) {
    terms_.emplace_back(0u, r);
  }
}

Coefficient Coefficient::s_power(unsigned k, const Rational& c) {
  Coefficient out;
  if (c != 0) {
    out.terms_.emplace_back(k, c);
  }
  return out;
}

Rational Coefficient::at(unsigned k) const {
  for (const auto& [e, c] : terms_) {
    if (e == k) {
      return c;
    }
    if (e > k) {
      break;
    }
  }
  return 0;
}

Rational Coefficient::at_s_one() const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    sum += c;
  }
  return sum;
}

namespace {

// Merge two sorted term lists with a sign on the second.
std::vector<Coefficient::Term> merge(const std::vector<Coefficient::Term>& a,
                                     const std::vector<Coefficient::Term>& b, bool subtract) {
  std::vector<Coefficient::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, subtract ? Rational(-j->second) : j->second);
      ++j;
    } else {
      Rational c = subtract ? Rational(i->second - j->second) : Rational(i->second + j->second);
      if (c != 0) {
        out.emplace_back(i->first, std::move(c));
      }
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  if (o.terms_.empty()) {
    return *this;
  }
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  if (o.terms_.empty()) {
    return *this;
  }
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Coefficient& Coefficient::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) {
    t.second *= r;
  }
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient out;
  if (a.is_zero() || b.is_zero()) {
    return out;
  }
  if (a.terms_.size() == 1) {
    out.terms_ = b.terms_;
    for (auto& t : out.terms_) {
      t.first += a.terms_[0].first;
      t.second *= a.terms_[0].second;
    }
    return out;
  }
  std::map<unsigned, Rational> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      acc[ea + eb] += ca * cb;
    }
  }
  for (auto& [e, c] : acc) {
    if (c != 0) {
      out.terms_.emplace_back(e, std::move(c));
    }
  }
  return out;
}

Coefficient Coefficient::shifted(unsigned k) const {
  Coefficient out = *this;
  for (auto& t : out.terms_) {
    t.first += k;
  }
  return out;
}

}  // namespace qkdv
