#pragma once

// Holomorphic polynomial vector fields of degree <= 2 on C^n, stored by
// coefficients.  A field V = sum_j v^j(w) d/dw_j has components
//
//   v^j(w) = cst(j) + sum_i lin(j,i) w_i + sum_{i,k} quad[j](i,k) w_i w_k
//
// with quad[j] symmetric.  The Lie bracket of two such fields is computed at
// the coefficient level; it generically has a cubic part, which must vanish
// for the result to stay in this space (otherwise DegreeOverflow is thrown).

#include <vector>

#include "errors.hpp"
#include "geometry.hpp"

namespace kepot {

struct PolyVF {
  int n = 0;
  CVector cst;
  CMatrix lin;
  std::vector<CMatrix> quad;

  static PolyVF zero(int n);

  CVector eval(const CVector& w) const;

  PolyVF& operator+=(const PolyVF& o);
  PolyVF& operator-=(const PolyVF& o);
  PolyVF& operator*=(Complex c);

  // Largest coefficient magnitude across all parts.
  double max_abs() const;
};

PolyVF operator+(PolyVF a, const PolyVF& b);
PolyVF operator-(PolyVF a, const PolyVF& b);
PolyVF operator*(Complex c, PolyVF a);

// Lie bracket [a, b]^j = sum_i (a^i d_i b^j - b^i d_i a^j).  Throws
// DegreeOverflow if the cubic part exceeds `cubic_tol`.
PolyVF bracket(const PolyVF& a, const PolyVF& b, double cubic_tol = 1e-14);

// Least-squares fit of a degree <= 2 field to sampled values.  `pts` and
// `vals` must have equal length, at least the number of monomials
// 1 + n + n(n+1)/2.  The caller is responsible for validating the fit on
// held-out points.
PolyVF fit_polyvf(int n, const std::vector<CVector>& pts,
                  const std::vector<CVector>& vals);

}  // namespace kepot
