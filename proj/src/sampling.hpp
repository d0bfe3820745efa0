#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "geometry.hpp"

namespace kepot {

// Deterministic splitmix64 generator.  Used instead of <random> engines so
// that identical configurations produce byte-identical reports on every
// platform (uniform_real_distribution is not pinned by the standard).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next_u64();
  double uniform();                        // [0, 1)
  double uniform(double a, double b);      // [a, b)
  Complex disc(double rmax);               // uniform on a disc of radius rmax
 private:
  uint64_t state_;
};

// Per-suite generator derived from (seed, suite name, dimension).
Rng suite_rng(uint64_t seed, std::string_view suite, int n);

// Interior Siegel-domain sample: w' uniform in the unit ball, Im w_n uniform
// in [-2, 2], Re w_n = |w'|^2 + u with u in [0.1, 3]; hence rho0 >= 0.1.
CVector sample_siegel(Rng& rng, int n);

// Interior ball sample with |z| <= 0.95.
CVector sample_ball(Rng& rng, int n);

// Deterministic interior grid used by the polynomial fitting routines.  The
// coordinates come from irrational-rotation sequences (fractional parts of
// multiples of sqrt-prime offsets), so any finite subset is in generic
// position for the degree-2 monomial map.
std::vector<CVector> fit_grid(int n, int count);

}  // namespace kepot
