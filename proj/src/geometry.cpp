#include "geometry.hpp"

namespace kepot {

namespace {
constexpr double kPoleTol = 1e-14;
}

const char* err_name(Err e) {
  switch (e) {
    case Err::PoleAtBoundary: return "PoleAtBoundary";
    case Err::OutsideDomain: return "OutsideDomain";
    case Err::SingularJacobian: return "SingularJacobian";
    case Err::NotConstantNorm: return "NotConstantNorm";
    case Err::NotPolynomial: return "NotPolynomial";
    case Err::NotGraded: return "NotGraded";
    case Err::DegreeOverflow: return "DegreeOverflow";
    case Err::NotInAlgebra: return "NotInAlgebra";
    case Err::SingularSystem: return "SingularSystem";
    case Err::UnsupportedTag: return "UnsupportedTag";
    case Err::Degenerate: return "Degenerate";
    case Err::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

double rho0(const CVector& w) {
  const int n = static_cast<int>(w.size());
  double s = w(n - 1).real();
  for (int k = 0; k < n - 1; ++k) s -= std::norm(w(k));
  return s;
}

bool in_siegel(const CVector& w) { return rho0(w) > 0.0; }

bool in_ball(const CVector& z) { return z.squaredNorm() < 1.0; }

void require_inside(const CPoint& p) {
  if (p.model == Model::Siegel) {
    if (!in_siegel(p.coords))
      throw Error(Err::OutsideDomain, "rho0(w) <= 0");
  } else {
    if (!in_ball(p.coords))
      throw Error(Err::OutsideDomain, "|z| >= 1");
  }
}

CVector cayley(const CVector& z) {
  const int n = static_cast<int>(z.size());
  const Complex den = 1.0 - z(n - 1);
  if (std::abs(den) < kPoleTol)
    throw Error(Err::PoleAtBoundary, "cayley pole at z_n = 1");
  CVector w(n);
  for (int k = 0; k < n - 1; ++k) w(k) = z(k) / den;
  w(n - 1) = (1.0 + z(n - 1)) / den;
  return w;
}

CVector cayley_inv(const CVector& w) {
  const int n = static_cast<int>(w.size());
  const Complex den = w(n - 1) + 1.0;
  if (std::abs(den) < kPoleTol)
    throw Error(Err::PoleAtBoundary, "inverse cayley pole at w_n = -1");
  CVector z(n);
  for (int k = 0; k < n - 1; ++k) z(k) = 2.0 * w(k) / den;
  z(n - 1) = (w(n - 1) - 1.0) / den;
  return z;
}

CMatrix cayley_jacobian(const CVector& z) {
  const int n = static_cast<int>(z.size());
  const Complex den = 1.0 - z(n - 1);
  if (std::abs(den) < kPoleTol)
    throw Error(Err::PoleAtBoundary, "cayley pole at z_n = 1");
  CMatrix j = CMatrix::Zero(n, n);
  for (int k = 0; k < n - 1; ++k) {
    j(k, k) = 1.0 / den;
    j(k, n - 1) = z(k) / (den * den);
  }
  j(n - 1, n - 1) = 2.0 / (den * den);
  return j;
}

CVector sigma_map(const CVector& w) {
  const int n = static_cast<int>(w.size());
  const Complex wn = w(n - 1);
  if (std::abs(wn) < kPoleTol)
    throw Error(Err::PoleAtBoundary, "sigma pole at w_n = 0");
  CVector u(n);
  for (int k = 0; k < n - 1; ++k) u(k) = -w(k) / wn;
  u(n - 1) = 1.0 / wn;
  return u;
}

CMatrix sigma_jacobian(const CVector& w) {
  const int n = static_cast<int>(w.size());
  const Complex wn = w(n - 1);
  if (std::abs(wn) < kPoleTol)
    throw Error(Err::PoleAtBoundary, "sigma pole at w_n = 0");
  CMatrix j = CMatrix::Zero(n, n);
  for (int k = 0; k < n - 1; ++k) {
    j(k, k) = -1.0 / wn;
    j(k, n - 1) = w(k) / (wn * wn);
  }
  j(n - 1, n - 1) = -1.0 / (wn * wn);
  return j;
}

}  // namespace kepot
