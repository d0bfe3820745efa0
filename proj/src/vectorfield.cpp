#include "vectorfield.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "sampling.hpp"

namespace kepot {

namespace {

constexpr Complex kI{0.0, 1.0};

void set_quad(PolyVF& v, int comp, int a, int b, Complex monomial_coeff) {
  // Coefficient of the monomial w_a w_b (a != b) or w_a^2 (a == b) in
  // component comp, stored symmetrically.
  if (a == b) {
    v.quad[comp](a, a) = monomial_coeff;
  } else {
    v.quad[comp](a, b) = monomial_coeff / 2.0;
    v.quad[comp](b, a) = monomial_coeff / 2.0;
  }
}

std::vector<BasisField> build_basis(int n) {
  std::vector<BasisField> out;
  const int last = n - 1;

  {
    PolyVF f = PolyVF::zero(n);
    f.cst(last) = 2.0 * kI;
    out.push_back({BasisTag::T(), f});
  }
  for (int k = 1; k < n; ++k) {
    PolyVF f = PolyVF::zero(n);
    f.cst(k - 1) = 1.0;
    f.lin(last, k - 1) = 2.0;
    out.push_back({BasisTag::T2(k), f});
  }
  for (int k = 1; k < n; ++k) {
    PolyVF f = PolyVF::zero(n);
    f.cst(k - 1) = kI;
    f.lin(last, k - 1) = -2.0 * kI;
    out.push_back({BasisTag::T3(k), f});
  }
  {
    PolyVF f = PolyVF::zero(n);
    for (int k = 0; k < last; ++k) f.lin(k, k) = 1.0;
    f.lin(last, last) = 2.0;
    out.push_back({BasisTag::D(), f});
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      PolyVF f = PolyVF::zero(n);
      f.lin(i - 1, j - 1) = 1.0;
      f.lin(j - 1, i - 1) = -1.0;
      out.push_back({BasisTag::U(i, j), f});
    }
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      PolyVF f = PolyVF::zero(n);
      f.lin(i - 1, j - 1) = kI;
      f.lin(j - 1, i - 1) = kI;
      out.push_back({BasisTag::V(i, j), f});
    }
  }
  for (int k = 1; k < n; ++k) {
    PolyVF f = PolyVF::zero(n);
    f.lin(k - 1, k - 1) = kI;
    out.push_back({BasisTag::Wk(k), f});
  }
  {
    PolyVF f = PolyVF::zero(n);
    for (int j = 0; j < last; ++j) set_quad(f, j, j, last, -2.0 * kI);
    set_quad(f, last, last, last, -2.0 * kI);
    out.push_back({BasisTag::Tt(), f});
  }
  for (int k = 1; k < n; ++k) {
    PolyVF f = PolyVF::zero(n);
    for (int j = 0; j < last; ++j) set_quad(f, j, k - 1, j, 2.0);
    f.lin(k - 1, last) = -1.0;
    set_quad(f, last, k - 1, last, 2.0);
    out.push_back({BasisTag::Tt2(k), f});
  }
  for (int k = 1; k < n; ++k) {
    PolyVF f = PolyVF::zero(n);
    for (int j = 0; j < last; ++j) set_quad(f, j, k - 1, j, -2.0 * kI);
    f.lin(k - 1, last) = -kI;
    set_quad(f, last, k - 1, last, -2.0 * kI);
    out.push_back({BasisTag::Tt3(k), f});
  }
  return out;
}

// Visit every stored coefficient of a field (paired with a second field of
// the same shape).
template <typename Fn>
void for_each_coeff(const PolyVF& a, const PolyVF& b, Fn&& fn) {
  for (int j = 0; j < a.n; ++j) {
    fn(a.cst(j), b.cst(j));
    for (int i = 0; i < a.n; ++i) fn(a.lin(j, i), b.lin(j, i));
    for (int i = 0; i < a.n; ++i) {
      for (int k = i; k < a.n; ++k) fn(a.quad[j](i, k), b.quad[j](i, k));
    }
  }
}

}  // namespace

std::string BasisTag::name() const {
  std::ostringstream s;
  switch (family) {
    case Family::T: return "T";
    case Family::D: return "D";
    case Family::Tt: return "Tt";
    case Family::T2: s << "T2(" << i << ")"; break;
    case Family::T3: s << "T3(" << i << ")"; break;
    case Family::U: s << "U(" << i << "," << j << ")"; break;
    case Family::V: s << "V(" << i << "," << j << ")"; break;
    case Family::Wk: s << "Wk(" << i << ")"; break;
    case Family::Tt2: s << "Tt2(" << i << ")"; break;
    case Family::Tt3: s << "Tt3(" << i << ")"; break;
  }
  return s.str();
}

const std::vector<BasisField>& basis(int n) {
  if (n < 1) throw Error(Err::InvalidConfig, "basis requires n >= 1");
  static std::map<int, std::vector<BasisField>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_basis(n)).first;
  return it->second;
}

PolyVF basis_field(const BasisTag& tag, int n) {
  for (const BasisField& b : basis(n)) {
    if (b.tag == tag) return b.field;
  }
  throw Error(Err::InvalidConfig,
              "basis tag " + tag.name() + " does not exist in dimension " +
                  std::to_string(n));
}

double grade(const PolyVF& v, double tol) {
  const double scale = v.max_abs();
  if (!(scale > 0.0)) {
    throw Error(Err::InvalidConfig, "grade of the zero field is undefined");
  }
  PolyVF d = basis_field(BasisTag::D(), v.n);
  PolyVF b = bracket(d, v);

  // Eigenvalue estimate from the largest coefficient of v.
  Complex vc = 0.0, bc = 0.0;
  for_each_coeff(v, b, [&](Complex cv, Complex cb) {
    if (std::abs(cv) > std::abs(vc)) {
      vc = cv;
      bc = cb;
    }
  });
  Complex lambda = bc / vc;
  PolyVF resid = b - lambda * v;
  double err = resid.max_abs() / scale;
  double rounded = std::round(lambda.real());
  if (err > tol || std::abs(lambda.imag()) > tol ||
      std::abs(lambda.real() - rounded) > tol || std::abs(rounded) > 2.0) {
    std::ostringstream msg;
    msg << "field is not an eigenvector of ad(D) (eigen-residual " << err
        << ", eigenvalue estimate " << lambda.real();
    if (std::abs(lambda.imag()) > tol) msg << " + " << lambda.imag() << "i";
    msg << ")";
    throw Error(Err::NotGraded, msg.str());
  }
  return rounded / 2.0;
}

double Decomposition::coeff(const BasisTag& tag) const {
  for (const auto& [t, c] : coeffs) {
    if (t == tag) return c;
  }
  throw Error(Err::InvalidConfig,
              "tag " + tag.name() + " not present in decomposition");
}

double Decomposition::tilde_mass() const {
  double m = 0.0;
  for (const auto& [t, c] : coeffs) {
    if (t.tilde()) m = std::max(m, std::abs(c));
  }
  return m;
}

PolyVF Decomposition::assemble(int n) const {
  PolyVF out = PolyVF::zero(n);
  for (const auto& [t, c] : coeffs) {
    if (c != 0.0) out += Complex(c) * basis_field(t, n);
  }
  return out;
}

Decomposition decompose(const PolyVF& v, bool strict, double tol) {
  const int n = v.n;
  const std::vector<BasisField>& bas = basis(n);
  const int nb = static_cast<int>(bas.size());

  // One real row per (coefficient slot, re/im part).
  const int slots = n * (1 + n + n * (n + 1) / 2);
  RMatrix a(2 * slots, nb);
  RVector rhs(2 * slots);
  PolyVF dummy = PolyVF::zero(n);
  {
    int row = 0;
    for_each_coeff(v, dummy, [&](Complex cv, Complex) {
      rhs(row) = cv.real();
      rhs(row + slots) = cv.imag();
      ++row;
    });
  }
  for (int m = 0; m < nb; ++m) {
    int row = 0;
    for_each_coeff(bas[m].field, dummy, [&](Complex cb, Complex) {
      a(row, m) = cb.real();
      a(row + slots, m) = cb.imag();
      ++row;
    });
  }
  RVector x = a.colPivHouseholderQr().solve(rhs);

  Decomposition out;
  out.coeffs.reserve(nb);
  PolyVF recon = PolyVF::zero(n);
  for (int m = 0; m < nb; ++m) {
    out.coeffs.emplace_back(bas[m].tag, x(m));
    if (x(m) != 0.0) recon += Complex(x(m)) * bas[m].field;
  }
  out.residual = (v - recon).max_abs();
  if (strict && out.residual > tol) {
    std::ostringstream msg;
    msg << "field is not a real combination of the symmetry algebra basis "
           "(residual "
        << out.residual << ")";
    throw Error(Err::NotInAlgebra, msg.str());
  }
  return out;
}

PolyVF pushforward(const Automorphism& phi, const PolyVF& v, double fit_tol) {
  const int n = v.n;
  if (phi.dim() != n) {
    throw Error(Err::InvalidConfig,
                "automorphism dimension does not match the field");
  }
  const int nb = n * n + 2 * n;
  const int fit_count = 3 * nb;
  const int held_count = nb;
  std::vector<CVector> grid = fit_grid(n, fit_count + held_count);
  Automorphism inv = phi.inverse();

  auto value = [&](const CVector& w) -> CVector {
    CVector x = inv.apply(w);
    return phi.jacobian(x) * v.eval(x);
  };

  std::vector<CVector> pts(grid.begin(), grid.begin() + fit_count);
  std::vector<CVector> vals;
  vals.reserve(fit_count);
  for (const CVector& w : pts) vals.push_back(value(w));
  PolyVF fit = fit_polyvf(n, pts, vals);

  double worst = 0.0;
  for (int i = fit_count; i < fit_count + held_count; ++i) {
    CVector diff = fit.eval(grid[i]) - value(grid[i]);
    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
  }
  if (worst > fit_tol) {
    std::ostringstream msg;
    msg << "pushforward left the degree <= 2 polynomial fields (held-out "
           "residual "
        << worst << ")";
    throw Error(Err::NotPolynomial, msg.str());
  }
  return fit;
}

double re_apply(const PolyVF& v, const Potential& p, const CPoint& w) {
  if (v.n != p.n) {
    throw Error(Err::InvalidConfig,
                "field dimension does not match the potential");
  }
  CVector g = grad_holo(p, w);
  return (v.eval(w.coords).array() * g.array()).sum().real();
}

}  // namespace kepot
