#pragma once

#include "qkdv/fock.hpp"
#include "qkdv/schurops.hpp"

#include <cstdint>
#include <random>

namespace qkdv {

/// Seeded generator with a platform-independent integer mapping (standard
/// library distributions are implementation-defined, so they are avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  int uniform(int lo, int hi);
  bool chance(int percent) { return uniform(0, 99) < percent; }

 private:
  std::mt19937_64 engine_;
};

struct RandomPolyOptions {
  int rank = 1;
  int max_weight = 6;
  int max_terms = 4;
  /// Allow s-powers in coefficients.
  bool quantum = true;
  /// Put every term at one randomly chosen weight.
  bool homogeneous = false;
  /// Minimal conformal weight of each term; 0 allows constants.
  int min_weight = 1;
};

Rational random_rational(Rng& rng);
Coefficient random_coefficient(Rng& rng, bool quantum);
/// Random monomial of exactly the given weight.
Monomial random_monomial(Rng& rng, int weight, int rank = 1);
/// Never returns zero: draws whose terms cancel are discarded.
DiffPoly random_diffpoly(Rng& rng, const RandomPolyOptions& opt = {});
FockState random_state(Rng& rng, const RandomPolyOptions& opt = {});
/// Random symmetric matrix with nonzero determinant.
EtaMatrix random_eta(Rng& rng, int rank);
IntVector random_partition(Rng& rng, int max_size);

}  // namespace qkdv
