#include "polyvf.hpp"

#include <Eigen/QR>

namespace kepot {

PolyVF PolyVF::zero(int n) {
  if (n < 1) throw Error(Err::InvalidConfig, "dimension must be positive");
  PolyVF v;
  v.n = n;
  v.cst = CVector::Zero(n);
  v.lin = CMatrix::Zero(n, n);
  v.quad.assign(static_cast<size_t>(n), CMatrix::Zero(n, n));
  return v;
}

CVector PolyVF::eval(const CVector& w) const {
  CVector out = cst + lin * w;
  for (int j = 0; j < n; ++j) out(j) += (w.transpose() * quad[j] * w).value();
  return out;
}

PolyVF& PolyVF::operator+=(const PolyVF& o) {
  cst += o.cst;
  lin += o.lin;
  for (int j = 0; j < n; ++j) quad[j] += o.quad[j];
  return *this;
}

PolyVF& PolyVF::operator-=(const PolyVF& o) {
  cst -= o.cst;
  lin -= o.lin;
  for (int j = 0; j < n; ++j) quad[j] -= o.quad[j];
  return *this;
}

PolyVF& PolyVF::operator*=(Complex c) {
  cst *= c;
  lin *= c;
  for (int j = 0; j < n; ++j) quad[j] *= c;
  return *this;
}

double PolyVF::max_abs() const {
  double m = cst.cwiseAbs().maxCoeff();
  m = std::max(m, lin.cwiseAbs().maxCoeff());
  for (int j = 0; j < n; ++j) m = std::max(m, quad[j].cwiseAbs().maxCoeff());
  return m;
}

PolyVF operator+(PolyVF a, const PolyVF& b) { return a += b; }
PolyVF operator-(PolyVF a, const PolyVF& b) { return a -= b; }
PolyVF operator*(Complex c, PolyVF a) { return a *= c; }

PolyVF bracket(const PolyVF& a, const PolyVF& b, double cubic_tol) {
  if (a.n != b.n)
    throw Error(Err::InvalidConfig, "bracket of fields on different spaces");
  const int n = a.n;
  PolyVF r = PolyVF::zero(n);

  // With a^j = p_j + B_{ji} w_i + C^j_{ik} w_i w_k and
  //      b^j = q_j + Q_{ji} w_i + R^j_{ik} w_i w_k,
  // [a,b]^j = sum_i a^i d_i b^j - (a <-> b).
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      r.cst(j) += a.cst(i) * b.lin(j, i) - b.cst(i) * a.lin(j, i);
      for (int m = 0; m < n; ++m) {
        r.lin(j, m) += 2.0 * a.cst(i) * b.quad[j](i, m) +
                       a.lin(i, m) * b.lin(j, i) -
                       2.0 * b.cst(i) * a.quad[j](i, m) -
                       b.lin(i, m) * a.lin(j, i);
        for (int k = 0; k <= m; ++k) {
          // t is the (k,m) slot of the symmetric coefficient matrix: for
          // k != m the two half-contributions of the monomial w_k w_m land
          // in the two mirror slots separately.
          Complex t = a.quad[i](k, m) * b.lin(j, i) -
                      b.quad[i](k, m) * a.lin(j, i);
          t += a.lin(i, k) * b.quad[j](i, m) + a.lin(i, m) * b.quad[j](i, k) -
               b.lin(i, k) * a.quad[j](i, m) - b.lin(i, m) * a.quad[j](i, k);
          r.quad[j](k, m) += t;
          if (k != m) r.quad[j](m, k) += t;
        }
      }
    }
  }

  // Cubic part: coefficient of w_k w_l w_m is, before symmetrization,
  // G_{klm} = 2 sum_i (C^i_{kl} R^j_{im} - R^i_{kl} C^j_{im}); it is already
  // symmetric in (k,l), so symmetrize over the 3-cycle and require zero.
  double cubic = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k)
      for (int l = k; l < n; ++l)
        for (int m = l; m < n; ++m) {
          Complex g = 0.0;
          for (int i = 0; i < n; ++i) {
            g += a.quad[i](k, l) * b.quad[j](i, m) -
                 b.quad[i](k, l) * a.quad[j](i, m);
            g += a.quad[i](l, m) * b.quad[j](i, k) -
                 b.quad[i](l, m) * a.quad[j](i, k);
            g += a.quad[i](m, k) * b.quad[j](i, l) -
                 b.quad[i](m, k) * a.quad[j](i, l);
          }
          cubic = std::max(cubic, std::abs(g) * 2.0 / 3.0);
        }
  }
  if (cubic > cubic_tol)
    throw Error(Err::DegreeOverflow,
                "bracket leaves the degree <= 2 space (cubic coefficient " +
                    std::to_string(cubic) + ")");
  return r;
}

PolyVF fit_polyvf(int n, const std::vector<CVector>& pts,
                  const std::vector<CVector>& vals) {
  if (pts.size() != vals.size())
    throw Error(Err::InvalidConfig, "fit needs matching points and values");
  const int nmono = 1 + n + n * (n + 1) / 2;
  const int npts = static_cast<int>(pts.size());
  if (npts < nmono)
    throw Error(Err::InvalidConfig, "not enough sample points for fit");

  CMatrix design(npts, nmono);
  CMatrix rhs(npts, n);
  for (int p = 0; p < npts; ++p) {
    const CVector& w = pts[p];
    int c = 0;
    design(p, c++) = 1.0;
    for (int i = 0; i < n; ++i) design(p, c++) = w(i);
    for (int i = 0; i < n; ++i)
      for (int k = i; k < n; ++k) design(p, c++) = w(i) * w(k);
    rhs.row(p) = vals[p].transpose();
  }

  Eigen::ColPivHouseholderQR<CMatrix> qr(design);
  const CMatrix sol = qr.solve(rhs);  // nmono x n, column j = component j

  PolyVF v = PolyVF::zero(n);
  for (int j = 0; j < n; ++j) {
    int c = 0;
    v.cst(j) = sol(c++, j);
    for (int i = 0; i < n; ++i) v.lin(j, i) = sol(c++, j);
    for (int i = 0; i < n; ++i)
      for (int k = i; k < n; ++k) {
        const Complex coeff = sol(c++, j);
        if (i == k) {
          v.quad[j](i, i) = coeff;
        } else {
          v.quad[j](i, k) = 0.5 * coeff;
          v.quad[j](k, i) = 0.5 * coeff;
        }
      }
  }
  return v;
}

}  // namespace kepot
