#include "oracles.hpp"

namespace kepot::testsupport {

namespace {

// Shift coordinate `index` (real part for part = 0, imaginary for part = 1)
// by t and evaluate.
double at_shift(const ScalarFn& f, const CVector& w, int index, int part,
                double t) {
  CVector u = w;
  u(index) += (part == 0) ? Complex(t, 0.0) : Complex(0.0, t);
  return f(u);
}

// Second-order central first difference.
double d1(const ScalarFn& f, const CVector& w, int index, int part, double h) {
  return (at_shift(f, w, index, part, h) - at_shift(f, w, index, part, -h)) /
         (2.0 * h);
}

// Second-order central second difference d^2 f / (da db) where a and b are
// real coordinates (index, part).
double d2(const ScalarFn& f, const CVector& w, int ia, int pa, int ib, int pb,
          double h) {
  if (ia == ib && pa == pb) {
    const double f0 = f(w);
    return (at_shift(f, w, ia, pa, h) - 2.0 * f0 +
            at_shift(f, w, ia, pa, -h)) /
           (h * h);
  }
  auto shift2 = [&](double ta, double tb) {
    CVector u = w;
    u(ia) += (pa == 0) ? Complex(ta, 0.0) : Complex(0.0, ta);
    u(ib) += (pb == 0) ? Complex(tb, 0.0) : Complex(0.0, tb);
    return f(u);
  };
  return (shift2(h, h) - shift2(h, -h) - shift2(-h, h) + shift2(-h, -h)) /
         (4.0 * h * h);
}

}  // namespace

CVector oracle_grad_holo(const ScalarFn& f, const CVector& w, double h) {
  const int n = static_cast<int>(w.size());
  CVector g(n);
  for (int k = 0; k < n; ++k) {
    const double dx = d1(f, w, k, 0, h);
    const double dy = d1(f, w, k, 1, h);
    g(k) = 0.5 * Complex(dx, -dy);
  }
  return g;
}

CMatrix oracle_hessian_mixed(const ScalarFn& f, const CVector& w, double h) {
  // d^2/(dw_i dwbar_j) = ((dxi dxj + dyi dyj) + i (dxi dyj - dyi dxj)) / 4.
  const int n = static_cast<int>(w.size());
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double xx = d2(f, w, i, 0, j, 0, h);
      const double yy = d2(f, w, i, 1, j, 1, h);
      const double yx = d2(f, w, i, 1, j, 0, h);
      const double xy = d2(f, w, i, 0, j, 1, h);
      m(i, j) = 0.25 * Complex(xx + yy, xy - yx);
    }
  }
  return m;
}

double oracle_diff_norm_sq(const Potential& p, const CPoint& w, double h) {
  const ScalarFn f = [&p, &w](const CVector& u) {
    return eval_log(p, CPoint{u, w.model});
  };
  const CVector a = oracle_grad_holo(f, w.coords, h);
  const CMatrix hess = oracle_hessian_mixed(f, w.coords, h);
  // |df|^2 = sum_{k,j} g^{k jbar} a_k conj(a_j); with the Hessian Hermitian
  // this contraction is a^H H^{-1} a.
  const CVector x = hess.fullPivLu().solve(a);
  return a.dot(x).real();
}

}  // namespace kepot::testsupport
