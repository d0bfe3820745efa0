#include "holopoly.hpp"

#include <numeric>

namespace kepot {

HoloPoly HoloPoly::constant(int n, Complex c) {
  HoloPoly p{n, {}};
  p.add_term(std::vector<int>(n, 0), c);
  return p;
}

HoloPoly HoloPoly::coordinate(int n, int k) {
  HoloPoly p{n, {}};
  std::vector<int> e(n, 0);
  e[k] = 1;
  p.add_term(e, 1.0);
  return p;
}

int HoloPoly::degree() const {
  int d = 0;
  for (const Term& t : terms)
    d = std::max(d, std::accumulate(t.exponents.begin(), t.exponents.end(), 0));
  return d;
}

Complex HoloPoly::eval(const CVector& w) const {
  Complex s = 0.0;
  for (const Term& t : terms) {
    Complex m = t.coeff;
    for (int k = 0; k < nvars; ++k)
      for (int e = 0; e < t.exponents[k]; ++e) m *= w(k);
    s += m;
  }
  return s;
}

CVector HoloPoly::grad(const CVector& w) const {
  CVector g = CVector::Zero(nvars);
  for (const Term& t : terms) {
    for (int k = 0; k < nvars; ++k) {
      if (t.exponents[k] == 0) continue;
      Complex m = t.coeff * double(t.exponents[k]);
      for (int j = 0; j < nvars; ++j) {
        const int e = t.exponents[j] - (j == k ? 1 : 0);
        for (int q = 0; q < e; ++q) m *= w(j);
      }
      g(k) += m;
    }
  }
  return g;
}

HoloPoly& HoloPoly::add_term(const std::vector<int>& exponents, Complex c) {
  if (static_cast<int>(exponents.size()) != nvars)
    throw Error(Err::InvalidConfig, "exponent list length != variable count");
  for (int e : exponents)
    if (e < 0) throw Error(Err::InvalidConfig, "negative exponent");
  terms.push_back({exponents, c});
  return *this;
}

}  // namespace kepot
