#include "mobius.hpp"

#include <cmath>
#include <sstream>

#include "sampling.hpp"

namespace kepot {

namespace {

// Deterministic interior ball grid: the Siegel fitting grid carried back
// through the inverse Cayley transform.
std::vector<CVector> ball_grid(int n, int count) {
  std::vector<CVector> pts = fit_grid(n, count);
  for (CVector& w : pts) w = cayley_inv(w);
  return pts;
}

}  // namespace

MobiusMap MobiusMap::from_matrix(const CMatrix& a) {
  if (a.rows() != a.cols() || a.rows() < 2) {
    throw Error(Err::InvalidConfig,
                "homogeneous matrix must be square of size at least 2");
  }
  Eigen::FullPivLU<CMatrix> lu(a);
  if (!lu.isInvertible()) {
    throw Error(Err::Degenerate, "homogeneous matrix is singular");
  }
  MobiusMap m;
  m.a = a;
  m.n = static_cast<int>(a.rows()) - 1;
  return m;
}

MobiusMap MobiusMap::identity(int n) {
  return from_matrix(CMatrix::Identity(n + 1, n + 1));
}

MobiusMap MobiusMap::cayley(int n) { return from_matrix(cayley_matrix(n)); }

CMatrix cayley_matrix(int n) {
  if (n < 1) throw Error(Err::InvalidConfig, "cayley_matrix requires n >= 1");
  CMatrix a = CMatrix::Zero(n + 1, n + 1);
  for (int k = 0; k + 1 < n; ++k) a(k, k) = 1.0;
  a(n - 1, n - 1) = 1.0;
  a(n - 1, n) = 1.0;
  a(n, n - 1) = -1.0;
  a(n, n) = 1.0;
  return a;
}

CVector MobiusMap::apply(const CVector& z) const {
  if (z.size() != n) {
    throw Error(Err::InvalidConfig, "point dimension does not match the map");
  }
  Complex den = a(n, n);
  for (int j = 0; j < n; ++j) den += a(n, j) * z(j);
  double scale = a.cwiseAbs().maxCoeff() * std::max(1.0, z.cwiseAbs().maxCoeff());
  if (std::abs(den) <= 1e-13 * scale) {
    throw Error(Err::PoleAtBoundary, "point lies on the polar hyperplane");
  }
  CVector num = a.topLeftCorner(n, n) * z + a.col(n).head(n);
  return num / den;
}

CMatrix MobiusMap::jacobian(const CVector& z) const {
  if (z.size() != n) {
    throw Error(Err::InvalidConfig, "point dimension does not match the map");
  }
  Complex den = a(n, n);
  for (int j = 0; j < n; ++j) den += a(n, j) * z(j);
  double scale = a.cwiseAbs().maxCoeff() * std::max(1.0, z.cwiseAbs().maxCoeff());
  if (std::abs(den) <= 1e-13 * scale) {
    throw Error(Err::PoleAtBoundary, "point lies on the polar hyperplane");
  }
  CVector num = a.topLeftCorner(n, n) * z + a.col(n).head(n);
  CMatrix j(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      j(i, k) = a(i, k) / den - num(i) * a(n, k) / (den * den);
    }
  }
  return j;
}

MobiusMap MobiusMap::conjugated(const CMatrix& p) const {
  if (p.rows() != n + 1 || p.cols() != n + 1) {
    throw Error(Err::InvalidConfig, "conjugating matrix has the wrong size");
  }
  Eigen::FullPivLU<CMatrix> lu(p);
  if (!lu.isInvertible()) {
    throw Error(Err::Degenerate, "conjugating matrix is singular");
  }
  return from_matrix(lu.solve(a * p));
}

HoloMap as_holo_map(const MobiusMap& m, Model target) {
  HoloMap h;
  MobiusMap copy = m;
  h.apply = [copy](const CVector& z) { return copy.apply(z); };
  h.jacobian = [copy](const CVector& z) { return copy.jacobian(z); };
  h.target = target;
  return h;
}

CayleyReport cayley_constraint_report(const HoloMap& g, int n, int det_samples,
                                      double tol_point, double tol_det,
                                      double tol_linear, double tol_coeff) {
  if (n < 1) throw Error(Err::InvalidConfig, "constraint chain requires n >= 1");
  CayleyReport rep;
  auto fail = [&](ConstraintStep step) {
    step.pass = false;
    rep.first_failure = step.name;
    rep.steps.push_back(std::move(step));
    rep.is_cayley_up_to_rotation = false;
  };
  auto pass = [&](ConstraintStep step) {
    step.pass = true;
    rep.steps.push_back(std::move(step));
  };

  // 1. Base point: G(0) = (0, ..., 0, lambda) with |lambda| = 1.
  CVector at0 = g.apply(CVector::Zero(n));
  double head = n > 1 ? at0.head(n - 1).cwiseAbs().maxCoeff() : 0.0;
  Complex lambda = at0(n - 1);
  double point_res = std::max(head, std::abs(std::abs(lambda) - 1.0));
  {
    ConstraintStep step{"base-point", false, point_res, ""};
    if (point_res > tol_point) {
      std::ostringstream d;
      d << "image of the origin is not a unit vector along the last axis "
           "(|last| = "
        << std::abs(lambda) << ")";
      step.detail = d.str();
      fail(std::move(step));
      return rep;
    }
    std::ostringstream d;
    d << "G(0) = (0, ..., 0, lambda), lambda = " << lambda.real() << " + "
      << lambda.imag() << "i";
    step.detail = d.str();
    pass(std::move(step));
  }
  rep.rotation = lambda;

  // Conjugate the rotation away before the differential constraints: the
  // rotated Cayley map satisfies the derivative constraint unchanged but
  // fails the determinant identity unless the last coordinate is
  // renormalized first.
  HoloMap h;
  h.target = g.target;
  if (std::abs(lambda - 1.0) > tol_point) {
    auto scale_last = [n](CVector z, Complex c) {
      z(n - 1) *= c;
      return z;
    };
    Complex inv_lambda = 1.0 / lambda;
    auto base_apply = g.apply;
    auto base_jac = g.jacobian;
    h.apply = [=](const CVector& z) {
      return scale_last(base_apply(scale_last(z, lambda)), inv_lambda);
    };
    h.jacobian = [=](const CVector& z) {
      CMatrix j = base_jac(scale_last(z, lambda));
      j.col(n - 1) *= lambda;
      j.row(n - 1) *= inv_lambda;
      return j;
    };
  } else {
    h.apply = g.apply;
    h.jacobian = g.jacobian;
  }

  // 2. Derivative at the origin: dG(0) = diag(1, ..., 1, 2).
  {
    CMatrix j = h.jacobian(CVector::Zero(n));
    CMatrix expected = CMatrix::Identity(n, n);
    expected(n - 1, n - 1) = 2.0;
    double res = (j - expected).cwiseAbs().maxCoeff();
    ConstraintStep step{"derivative", false, res,
                        "dG(0) compared with diag(1, ..., 1, 2)"};
    if (res > tol_point) {
      fail(std::move(step));
      return rep;
    }
    pass(std::move(step));
  }

  // 3. Jacobian determinant: det dG(z) (1 - z_n)^{n+1} = 2 on a grid.
  std::vector<CVector> pts = ball_grid(n, std::max(det_samples, n * 50));
  {
    double res = 0.0;
    for (int i = 0; i < det_samples; ++i) {
      const CVector& z = pts[i];
      Complex det = h.jacobian(z).determinant();
      Complex prod = det * std::pow(1.0 - z(n - 1), n + 1);
      res = std::max(res, std::abs(prod - 2.0));
    }
    ConstraintStep step{"determinant", false, res,
                        "det dG(z) (1 - z_n)^{n+1} compared with 2"};
    if (res > tol_det) {
      fail(std::move(step));
      return rep;
    }
    pass(std::move(step));
  }

  // 4. Fractional linearity: find a homogeneous matrix A with
  //    (A [z;1])_i = G_i(z) (A [z;1])_n for all samples.  The smallest
  //    relative singular value measures the failure.
  CMatrix recovered;
  {
    const int unknowns = (n + 1) * (n + 1);
    const int nsamples = static_cast<int>(pts.size());
    CMatrix sys = CMatrix::Zero(nsamples * n, unknowns);
    for (int s = 0; s < nsamples; ++s) {
      const CVector& z = pts[s];
      CVector gz = h.apply(z);
      CVector zeta(n + 1);
      zeta.head(n) = z;
      zeta(n) = 1.0;
      for (int i = 0; i < n; ++i) {
        int row = s * n + i;
        for (int j = 0; j <= n; ++j) {
          sys(row, i * (n + 1) + j) = zeta(j);
          sys(row, n * (n + 1) + j) = -gz(i) * zeta(j);
        }
      }
    }
    Eigen::JacobiSVD<CMatrix> svd(sys, Eigen::ComputeThinV);
    const auto& sing = svd.singularValues();
    double res = sing(sing.size() - 1) / sing(0);
    ConstraintStep step{"linearity", false, res,
                        "smallest relative singular value of the "
                        "fractional-linear interpolation system"};
    if (res > tol_linear) {
      fail(std::move(step));
      return rep;
    }
    pass(std::move(step));
    CVector null = svd.matrixV().col(unknowns - 1);
    recovered = CMatrix(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) recovered(i, j) = null(i * (n + 1) + j);
    }
  }

  // 5. Coefficient constraints on the recovered matrix, scaled so the
  //    corner entry equals 1; the target is exactly the Cayley matrix.
  {
    ConstraintStep step{"coefficients", false, 0.0, ""};
    Complex corner = recovered(n, n);
    if (std::abs(corner) < 1e-10) {
      step.residual = 1.0;
      step.detail = "corner entry of the recovered matrix vanishes";
      fail(std::move(step));
      return rep;
    }
    CMatrix scaled = recovered / corner;
    double res = (scaled - cayley_matrix(n)).cwiseAbs().maxCoeff();
    step.residual = res;
    step.detail =
        "recovered homogeneous matrix compared with the Cayley matrix";
    if (res > tol_coeff) {
      fail(std::move(step));
      return rep;
    }
    pass(std::move(step));
  }

  rep.is_cayley_up_to_rotation = true;
  return rep;
}

CayleyReport cayley_constraint_report(const MobiusMap& m) {
  return cayley_constraint_report(as_holo_map(m, Model::Siegel), m.n);
}

}  // namespace kepot
