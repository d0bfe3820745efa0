#include "numdiff.hpp"

namespace kepot {

namespace {

CVector shifted(const CVector& w, int index, int part, double d) {
  CVector u = w;
  if (part == 0)
    u(index) += d;
  else
    u(index) += Complex(0.0, d);
  return u;
}

// f'(0) ~ [-f(2h) + 8 f(h) - 8 f(-h) + f(-2h)] / (12 h),  error O(h^4).
template <typename F>
auto central4(const F& eval, double h) -> decltype(eval(0.0)) {
  return (-eval(2 * h) + 8.0 * eval(h) - 8.0 * eval(-h) + eval(-2 * h)) /
         (12.0 * h);
}

}  // namespace

double fd_partial(const RealFn& f, const CVector& w, int index, int part,
                  double h) {
  return central4([&](double d) { return f(shifted(w, index, part, d)); }, h);
}

CVector fd_grad_holo(const RealFn& f, const CVector& w, double h) {
  const int n = static_cast<int>(w.size());
  CVector g(n);
  for (int k = 0; k < n; ++k) {
    const double fx = fd_partial(f, w, k, 0, h);
    const double fy = fd_partial(f, w, k, 1, h);
    g(k) = 0.5 * Complex(fx, -fy);
  }
  return g;
}

CMatrix fd_hessian_mixed(const RealFn& f, const CVector& w, double h) {
  const int n = static_cast<int>(w.size());
  // dbar_j f as a complex function of the point, differentiated again in w_i.
  auto dbar = [&](const CVector& u, int j) {
    const double fx = fd_partial(f, u, j, 0, h);
    const double fy = fd_partial(f, u, j, 1, h);
    return 0.5 * Complex(fx, fy);
  };
  CMatrix hess(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex gx = central4(
          [&](double d) { return dbar(shifted(w, i, 0, d), j); }, h);
      const Complex gy = central4(
          [&](double d) { return dbar(shifted(w, i, 1, d), j); }, h);
      hess(i, j) = 0.5 * (gx - Complex(0.0, 1.0) * gy);
    }
  }
  return hess;
}

CMatrix fd_dbar_field(const ComplexFieldFn& v, const CVector& w, double h) {
  const int n = static_cast<int>(w.size());
  CMatrix out(n, n);
  for (int k = 0; k < n; ++k) {
    const CVector vx = central4(
        [&](double d) -> CVector { return v(shifted(w, k, 0, d)); }, h);
    const CVector vy = central4(
        [&](double d) -> CVector { return v(shifted(w, k, 1, d)); }, h);
    out.col(k) = 0.5 * (vx + Complex(0.0, 1.0) * vy);
  }
  return out;
}

}  // namespace kepot
