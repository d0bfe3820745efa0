#include "sampling.hpp"

#include <cmath>

namespace kepot {

uint64_t Rng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ull;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double a, double b) { return a + (b - a) * uniform(); }

Complex Rng::disc(double rmax) {
  const double r = rmax * std::sqrt(uniform());
  const double t = 2.0 * M_PI * uniform();
  return Complex(r * std::cos(t), r * std::sin(t));
}

namespace {
uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}
}  // namespace

Rng suite_rng(uint64_t seed, std::string_view suite, int n) {
  uint64_t h = fnv1a(suite);
  h ^= seed + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= static_cast<uint64_t>(n) * 0xff51afd7ed558ccdull;
  return Rng(h);
}

CVector sample_siegel(Rng& rng, int n) {
  CVector w(n);
  // w' uniform in the unit ball of C^{n-1}: rejection from the polydisc.
  double sq = 0.0;
  if (n > 1) {
    for (;;) {
      sq = 0.0;
      for (int k = 0; k < n - 1; ++k) {
        w(k) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        sq += std::norm(w(k));
      }
      if (sq < 1.0) break;
    }
  }
  const double u = rng.uniform(0.1, 3.0);
  const double y = rng.uniform(-2.0, 2.0);
  w(n - 1) = Complex(sq + u, y);
  return w;
}

CVector sample_ball(Rng& rng, int n) {
  CVector z(n);
  for (;;) {
    double sq = 0.0;
    for (int k = 0; k < n; ++k) {
      z(k) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      sq += std::norm(z(k));
    }
    if (sq <= 0.95 * 0.95) return z;
  }
}

std::vector<CVector> fit_grid(int n, int count) {
  // Fractional parts of sqrt(p) for the first primes; pairwise irrational.
  static const double kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                   31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  auto frac = [](double x) { return x - std::floor(x); };
  auto alpha = [&](int k) {
    const double r = std::sqrt(kPrimes[k % 20]);
    return frac(r) > 0.05 ? frac(r) : frac(r * 3.0);
  };
  std::vector<CVector> pts;
  pts.reserve(count);
  for (int p = 1; p <= count; ++p) {
    CVector w(n);
    double sq = 0.0;
    for (int k = 0; k < n - 1; ++k) {
      const double r = 0.12 + 0.45 * frac(p * alpha(2 * k));
      const double t = 2.0 * M_PI * frac(p * alpha(2 * k + 1));
      w(k) = Complex(r * std::cos(t), r * std::sin(t));
      sq += std::norm(w(k));
    }
    const double u = 0.2 + 1.8 * frac(p * alpha(2 * n));
    const double y = -1.5 + 3.0 * frac(p * alpha(2 * n + 1));
    w(n - 1) = Complex(sq + u, y);
    pts.push_back(std::move(w));
  }
  return pts;
}

}  // namespace kepot
