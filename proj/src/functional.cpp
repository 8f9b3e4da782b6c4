#include "qkdv/functional.hpp"

#include <stdexcept>

namespace qkdv {

EtaMatrix::EtaMatrix(std::vector<std::vector<Rational>> entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  if (n == 0) {
    throw std::invalid_argument("eta must be at least 1x1");
  }
  for (const auto& row : entries_) {
    if (row.size() != n) {
      throw std::invalid_argument("eta must be square");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (entries_[i][j] != entries_[j][i]) {
        throw std::invalid_argument("eta must be symmetric");
      }
    }
  }
  if (determinant() == 0) {
    throw std::invalid_argument("eta must be nondegenerate");
  }
}

EtaMatrix EtaMatrix::identity(int rank) {
  std::vector<std::vector<Rational>> m(rank, std::vector<Rational>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    m[i][i] = 1;
  }
  return EtaMatrix(std::move(m));
}

Rational EtaMatrix::determinant() const {
  auto a = entries_;
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == n) {
      return 0;
    }
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) {
        continue;
      }
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) {
        a[r][c] -= factor * a[col][c];
      }
    }
  }
  return det;
}

bool LocalFunctional::is_zero() const {
  if (!rep_.constant_term().is_zero()) {
    return false;
  }
  for (int alpha = 1; alpha <= rep_.rank(); ++alpha) {
    if (!variational_derivative(rep_, alpha).is_zero()) {
      return false;
    }
  }
  return true;
}

bool functional_eq(const LocalFunctional& f, const LocalFunctional& g) {
  if (f.rank() != g.rank()) {
    throw std::invalid_argument("functional_eq: rank mismatch");
  }
  return (f - g).is_zero();
}

LocalFunctional classical_poisson(const LocalFunctional& f, const LocalFunctional& g, const EtaMatrix& eta) {
  if (f.rank() != g.rank() || f.rank() != eta.rank()) {
    throw std::invalid_argument("classical_poisson: rank mismatch");
  }
  const int n = f.rank();
  std::vector<DiffPoly> df;
  std::vector<DiffPoly> dg;
  for (int a = 1; a <= n; ++a) {
    df.push_back(variational_derivative(f.representative(), a));
    dg.push_back(d_dx(variational_derivative(g.representative(), a)));
  }
  DiffPoly density(n);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (eta(a, b) != 0) {
        density += (df[a - 1] * dg[b - 1]) * Coefficient(eta(a, b));
      }
    }
  }
  return LocalFunctional(std::move(density));
}

LocalFunctional classical_poisson(const LocalFunctional& f, const LocalFunctional& g) {
  return classical_poisson(f, g, EtaMatrix::identity(f.rank()));
}

}  // namespace qkdv
