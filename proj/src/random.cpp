#include "qkdv/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace qkdv {

int Rng::uniform(int lo, int hi) {
  if (hi < lo) {
    throw std::invalid_argument("Rng::uniform: empty range");
  }
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

Rational random_rational(Rng& rng) {
  int num = rng.uniform(-6, 6);
  if (num == 0) {
    num = 1;
  }
  return ratio(num, rng.uniform(1, 4));
}

Coefficient random_coefficient(Rng& rng, bool quantum) {
  Coefficient c = random_rational(rng);
  if (quantum && rng.chance(35)) {
    c += Coefficient::s_power(static_cast<unsigned>(rng.uniform(1, 3)), random_rational(rng));
  }
  return c;
}

Monomial random_monomial(Rng& rng, int weight, int rank) {
  std::vector<Monomial::Factor> factors;
  int rest = weight;
  while (rest > 0) {
    const int part = rng.uniform(1, rest);
    factors.emplace_back(Var{rng.uniform(1, rank), part - 1}, 1);
    rest -= part;
  }
  return Monomial(std::move(factors));
}

namespace {

DiffPoly random_diffpoly_draw(Rng& rng, const RandomPolyOptions& opt) {
  DiffPoly p(opt.rank);
  const int terms = rng.uniform(1, opt.max_terms);
  const int fixed = rng.uniform(opt.min_weight, opt.max_weight);
  for (int t = 0; t < terms; ++t) {
    const int w = opt.homogeneous ? fixed : rng.uniform(opt.min_weight, opt.max_weight);
    p.add_term(random_monomial(rng, w, opt.rank), random_coefficient(rng, opt.quantum));
  }
  return p;
}

}  // namespace

DiffPoly random_diffpoly(Rng& rng, const RandomPolyOptions& opt) {
  for (;;) {
    DiffPoly p = random_diffpoly_draw(rng, opt);
    if (!p.is_zero()) {
      return p;
    }
  }
}

FockState random_state(Rng& rng, const RandomPolyOptions& opt) { return phi(random_diffpoly(rng, opt)); }

EtaMatrix random_eta(Rng& rng, int rank) {
  for (;;) {
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rank), std::vector<Rational>(rank));
    for (int i = 0; i < rank; ++i) {
      for (int j = i; j < rank; ++j) {
        m[i][j] = m[j][i] = Rational(rng.uniform(-3, 3));
      }
    }
    try {
      return EtaMatrix(m);
    } catch (const std::invalid_argument&) {
      // singular draw; try again
    }
  }
}

IntVector random_partition(Rng& rng, int max_size) {
  IntVector out;
  int rest = rng.uniform(0, max_size);
  while (rest > 0) {
    const int cap = out.empty() ? rest : std::min(rest, out.back());
    const int part = rng.uniform(1, cap);
    out.push_back(part);
    rest -= part;
  }
  return out;
}

}  // namespace qkdv
