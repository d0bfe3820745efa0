#pragma once

#include <vector>

#include "geometry.hpp"

namespace kepot {

// Holomorphic polynomial in w_1..w_n with complex coefficients, stored as a
// sparse list of monomials.
struct HoloPoly {
  struct Term {
    std::vector<int> exponents;  // length n, entries >= 0
    Complex coeff;
  };
  int nvars = 0;
  std::vector<Term> terms;

  static HoloPoly zero(int n) { return {n, {}}; }
  static HoloPoly constant(int n, Complex c);
  static HoloPoly coordinate(int n, int k);  // w_k, 0-based

  bool empty() const { return terms.empty(); }
  int degree() const;
  Complex eval(const CVector& w) const;
  CVector grad(const CVector& w) const;  // holomorphic gradient
  HoloPoly& add_term(const std::vector<int>& exponents, Complex c);
};

}  // namespace kepot
