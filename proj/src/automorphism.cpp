#include "automorphism.hpp"

#include <cmath>
#include <sstream>

namespace kepot {

namespace {

void check_index(int k, int n, const char* what) {
  if (k < 1 || k > n - 1)
    throw Error(Err::InvalidConfig,
                std::string(what) + " index out of range [1, n-1]");
}

}  // namespace

CVector gen_apply(const Generator& g, const CVector& w, int n) {
  CVector u = w;
  if (const auto* t = std::get_if<GenTs>(&g)) {
    u(n - 1) += Complex(0.0, 2.0 * t->s);
  } else if (const auto* t = std::get_if<GenT2k>(&g)) {
    const int k = t->k - 1;
    u(n - 1) += 2.0 * t->s * w(k) + t->s * t->s;
    u(k) += t->s;
  } else if (const auto* t = std::get_if<GenT3k>(&g)) {
    const int k = t->k - 1;
    u(n - 1) += Complex(0.0, -2.0 * t->s) * w(k) + t->s * t->s;
    u(k) += Complex(0.0, t->s);
  } else if (const auto* t = std::get_if<GenDil>(&g)) {
    const double es = std::exp(t->s);
    for (int i = 0; i < n - 1; ++i) u(i) *= es;
    u(n - 1) *= es * es;
  } else if (const auto* t = std::get_if<GenPerm1k>(&g)) {
    std::swap(u(0), u(t->k - 1));
  } else if (const auto* t = std::get_if<GenUnitary>(&g)) {
    u.head(n - 1) = t->u * w.head(n - 1);
  } else if (std::get_if<GenSigma>(&g)) {
    u = sigma_map(w);
  } else if (const auto* t = std::get_if<GenAffine>(&g)) {
    u = t->a * w + t->b;
  }
  return u;
}

CMatrix gen_jacobian(const Generator& g, const CVector& w, int n) {
  CMatrix j = CMatrix::Identity(n, n);
  if (std::get_if<GenTs>(&g)) {
    // identity
  } else if (const auto* t = std::get_if<GenT2k>(&g)) {
    j(n - 1, t->k - 1) = 2.0 * t->s;
  } else if (const auto* t = std::get_if<GenT3k>(&g)) {
    j(n - 1, t->k - 1) = Complex(0.0, -2.0 * t->s);
  } else if (const auto* t = std::get_if<GenDil>(&g)) {
    const double es = std::exp(t->s);
    for (int i = 0; i < n - 1; ++i) j(i, i) = es;
    j(n - 1, n - 1) = es * es;
  } else if (const auto* t = std::get_if<GenPerm1k>(&g)) {
    const int k = t->k - 1;
    if (k != 0) {
      j(0, 0) = j(k, k) = 0.0;
      j(0, k) = j(k, 0) = 1.0;
    }
  } else if (const auto* t = std::get_if<GenUnitary>(&g)) {
    j.topLeftCorner(n - 1, n - 1) = t->u;
  } else if (std::get_if<GenSigma>(&g)) {
    j = sigma_jacobian(w);
  } else if (const auto* t = std::get_if<GenAffine>(&g)) {
    j = t->a;
  }
  return j;
}

Generator gen_inverse(const Generator& g, int n) {
  if (const auto* t = std::get_if<GenTs>(&g)) return GenTs{-t->s};
  if (const auto* t = std::get_if<GenT2k>(&g)) return GenT2k{t->k, -t->s};
  if (const auto* t = std::get_if<GenT3k>(&g)) return GenT3k{t->k, -t->s};
  if (const auto* t = std::get_if<GenDil>(&g)) return GenDil{-t->s};
  if (const auto* t = std::get_if<GenPerm1k>(&g)) return GenPerm1k{t->k};
  if (const auto* t = std::get_if<GenUnitary>(&g))
    return GenUnitary{t->u.adjoint()};
  if (std::get_if<GenSigma>(&g)) return GenSigma{};
  const auto& t = std::get<GenAffine>(g);
  Eigen::FullPivLU<CMatrix> lu(t.a);
  if (!lu.isInvertible())
    throw Error(Err::SingularJacobian, "affine generator not invertible");
  (void)n;
  const CMatrix ainv = lu.inverse();
  return GenAffine{ainv, CVector(-ainv * t.b)};
}

void Automorphism::check_generator(const Generator& g) const {
  if (const auto* t = std::get_if<GenT2k>(&g)) check_index(t->k, n_, "T2");
  if (const auto* t = std::get_if<GenT3k>(&g)) check_index(t->k, n_, "T3");
  if (const auto* t = std::get_if<GenPerm1k>(&g))
    check_index(t->k, std::max(n_, 2), "permutation");
  if (const auto* t = std::get_if<GenUnitary>(&g)) {
    if (t->u.rows() != n_ - 1 || t->u.cols() != n_ - 1)
      throw Error(Err::InvalidConfig, "unitary block must be (n-1) x (n-1)");
    const double defect =
        (t->u * t->u.adjoint() - CMatrix::Identity(n_ - 1, n_ - 1))
            .cwiseAbs()
            .maxCoeff();
    if (defect > 1e-12)
      throw Error(Err::InvalidConfig, "matrix is not unitary");
  }
  if (const auto* t = std::get_if<GenAffine>(&g)) {
    if (t->a.rows() != n_ || t->a.cols() != n_ ||
        t->b.size() != n_)
      throw Error(Err::InvalidConfig, "affine generator has wrong shape");
  }
}

Automorphism& Automorphism::then(const Generator& g) {
  check_generator(g);
  gens_.push_back(g);
  return *this;
}

Automorphism& Automorphism::then(const Automorphism& other) {
  if (other.n_ != n_)
    throw Error(Err::InvalidConfig, "dimension mismatch in composition");
  for (const Generator& g : other.gens_) gens_.push_back(g);
  return *this;
}

CVector Automorphism::apply(const CVector& w) const {
  CVector u = w;
  for (const Generator& g : gens_) u = gen_apply(g, u, n_);
  return u;
}

CMatrix Automorphism::jacobian(const CVector& w) const {
  CMatrix j = CMatrix::Identity(n_, n_);
  CVector u = w;
  for (const Generator& g : gens_) {
    j = gen_jacobian(g, u, n_) * j;
    u = gen_apply(g, u, n_);
  }
  return j;
}

Automorphism Automorphism::inverse() const {
  Automorphism inv(n_);
  for (auto it = gens_.rbegin(); it != gens_.rend(); ++it)
    inv.then(gen_inverse(*it, n_));
  return inv;
}

Automorphism flow(const BasisTag& tag, double s, int n) {
  using F = BasisTag::Family;
  Automorphism a(n);
  switch (tag.family) {
    case F::T:
      return a.then(GenTs{s});
    case F::T2:
      return a.then(GenT2k{tag.i, s});
    case F::T3:
      return a.then(GenT3k{tag.i, s});
    case F::D:
      return a.then(GenDil{s});
    case F::U: {
      // rotation in the (i,j) plane of w'
      CMatrix u = CMatrix::Identity(n - 1, n - 1);
      const int i = tag.i - 1, j = tag.j - 1;
      u(i, i) = std::cos(s);
      u(j, j) = std::cos(s);
      u(i, j) = std::sin(s);
      u(j, i) = -std::sin(s);
      return a.then(GenUnitary{u});
    }
    case F::V: {
      CMatrix u = CMatrix::Identity(n - 1, n - 1);
      const int i = tag.i - 1, j = tag.j - 1;
      u(i, i) = std::cos(s);
      u(j, j) = std::cos(s);
      u(i, j) = Complex(0.0, std::sin(s));
      u(j, i) = Complex(0.0, std::sin(s));
      return a.then(GenUnitary{u});
    }
    case F::Wk: {
      CMatrix u = CMatrix::Identity(n - 1, n - 1);
      u(tag.i - 1, tag.i - 1) = std::polar(1.0, s);
      return a.then(GenUnitary{u});
    }
    case F::Tt:
    case F::Tt2:
    case F::Tt3:
      throw Error(Err::UnsupportedTag, "no affine flow for tilde fields");
  }
  throw Error(Err::UnsupportedTag, "unknown tag");
}

std::string describe(const Automorphism& a) {
  std::ostringstream out;
  bool first = true;
  for (const Generator& g : a.gens()) {
    if (!first) out << "; ";
    first = false;
    if (const auto* t = std::get_if<GenTs>(&g)) {
      out << "Ts(" << t->s << ")";
    } else if (const auto* t2 = std::get_if<GenT2k>(&g)) {
      out << "T2(" << t2->k << ", " << t2->s << ")";
    } else if (const auto* t3 = std::get_if<GenT3k>(&g)) {
      out << "T3(" << t3->k << ", " << t3->s << ")";
    } else if (const auto* d = std::get_if<GenDil>(&g)) {
      out << "Dil(" << d->s << ")";
    } else if (const auto* p = std::get_if<GenPerm1k>(&g)) {
      out << "S(1," << p->k << ")";
    } else if (std::get_if<GenUnitary>(&g) != nullptr) {
      out << "Unitary";
    } else if (std::get_if<GenSigma>(&g) != nullptr) {
      out << "Sigma";
    } else {
      out << "Affine";
    }
  }
  if (first) out << "identity";
  return out.str();
}

double canonical_scale(const Automorphism& a) {
  const int n = a.dim();
  double lambda = 1.0;
  for (const Generator& g : a.gens()) {
    if (const auto* d = std::get_if<GenDil>(&g)) {
      lambda *= std::exp(-2.0 * (n + 1) * d->s);
    } else if (std::get_if<GenSigma>(&g) != nullptr ||
               std::get_if<GenAffine>(&g) != nullptr) {
      throw Error(Err::UnsupportedTag,
                  "generator does not scale the canonical potential by a "
                  "constant");
    }
  }
  return lambda;
}

}  // namespace kepot
