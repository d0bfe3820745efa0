#pragma once

#include <variant>
#include <vector>

#include "basistag.hpp"
#include "geometry.hpp"

namespace kepot {

// One-parameter affine automorphisms of the Siegel domain, the coordinate
// involutions, and general complex-affine maps.  Every generator has an exact
// inverse and an exact holomorphic Jacobian.
struct GenTs {
  double s = 0;  // w_n += 2is
};
struct GenT2k {
  int k = 1;  // 1-based, k < n
  double s = 0;  // w_k += s, w_n += 2 s w_k + s^2
};
struct GenT3k {
  int k = 1;
  double s = 0;  // w_k += is, w_n += -2is w_k + s^2
};
struct GenDil {
  double s = 0;  // w' *= e^s, w_n *= e^{2s}
};
struct GenPerm1k {
  int k = 1;  // swap w_1 and w_k (identity when k = 1)
};
struct GenUnitary {
  CMatrix u;  // (n-1) x (n-1) unitary acting on w'
};
struct GenSigma {};  // w -> (-w'/w_n, 1/w_n)
struct GenAffine {
  CMatrix a;  // invertible n x n
  CVector b;  // w -> a w + b
};

using Generator = std::variant<GenTs, GenT2k, GenT3k, GenDil, GenPerm1k,
                               GenUnitary, GenSigma, GenAffine>;

// Composition of generators.  The generator list is applied left to right:
// gens()[0] acts first.  A product written on paper as  g_m ... g_2 g_1
// (rightmost acting first) is therefore the list [g_1, g_2, ..., g_m].
class Automorphism {
 public:
  explicit Automorphism(int n) : n_(n) {}
  static Automorphism identity(int n) { return Automorphism(n); }

  int dim() const { return n_; }
  const std::vector<Generator>& gens() const { return gens_; }

  // Appends a generator acting after everything already in the list.
  Automorphism& then(const Generator& g);
  Automorphism& then(const Automorphism& other);

  CVector apply(const CVector& w) const;
  CMatrix jacobian(const CVector& w) const;  // chain rule over the list
  Automorphism inverse() const;

 private:
  void check_generator(const Generator& g) const;
  int n_;
  std::vector<Generator> gens_;
};

// Time-s flow of an affine basis field (grade <= 0).  Tilde tags have no
// closed-form flow here and raise UnsupportedTag.
Automorphism flow(const BasisTag& tag, double s, int n);

// Single-generator helpers used by maps and tests.
CVector gen_apply(const Generator& g, const CVector& w, int n);
CMatrix gen_jacobian(const Generator& g, const CVector& w, int n);
Generator gen_inverse(const Generator& g, int n);

// Human-readable generator list, e.g. "S(1,2); Ts(0.3); T2(1, 0.5)".
std::string describe(const Automorphism& a);

// The constant lambda with psi0 o Phi = lambda psi0.  Every shift, swap and
// unitary generator preserves rho0 (lambda = 1); a dilation scales it.
// Generators without a constant factor (the involution, general affine
// maps) raise UnsupportedTag.
double canonical_scale(const Automorphism& a);

}  // namespace kepot
