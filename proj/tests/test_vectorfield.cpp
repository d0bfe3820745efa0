#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <map>

#include "automorphism.hpp"
#include "errors.hpp"
#include "potential.hpp"
#include "sampling.hpp"
#include "vectorfield.hpp"

using namespace kepot;

TEST_CASE("basis has dimension n^2 + 2n and the documented grades") {
  for (int n : {1, 2, 3, 4}) {
    const auto& b = basis(n);
    CHECK(static_cast<int>(b.size()) == n * n + 2 * n);

    std::map<double, int> mult;
    for (const auto& bf : b) {
      double a = grade(bf.field);
      mult[std::round(a * 2.0) / 2.0]++;
      switch (bf.tag.family) {
        case BasisTag::Family::T:
          CHECK(a == Catch::Approx(-1.0));
          break;
        case BasisTag::Family::T2:
        case BasisTag::Family::T3:
          CHECK(a == Catch::Approx(-0.5));
          break;
        case BasisTag::Family::D:
        case BasisTag::Family::U:
        case BasisTag::Family::V:
        case BasisTag::Family::Wk:
          CHECK(a == Catch::Approx(0.0).margin(1e-14));
          break;
        case BasisTag::Family::Tt2:
        case BasisTag::Family::Tt3:
          CHECK(a == Catch::Approx(0.5));
          break;
        case BasisTag::Family::Tt:
          CHECK(a == Catch::Approx(1.0));
          break;
      }
    }
    // Eigenspace multiplicities of the adjoint grading operator.
    CHECK(mult[-1.0] == 1);
    CHECK(mult[1.0] == 1);
    if (n >= 2) {
      CHECK(mult[-0.5] == 2 * (n - 1));
      CHECK(mult[0.5] == 2 * (n - 1));
    }
    CHECK(mult[0.0] == (n - 1) * (n - 1) + 1);
  }
}

TEST_CASE("frozen bracket relations") {
  int n = 3;
  PolyVF t = basis_field(BasisTag::T(), n);
  PolyVF d = basis_field(BasisTag::D(), n);

  // [D, T] = -2 T.
  PolyVF dt = bracket(d, t);
  CHECK((dt - Complex(-2.0, 0.0) * t).max_abs() < 1e-14);

  // [T2(k), T3(k)] = -2 T for every k.
  for (int k = 1; k < n; ++k) {
    PolyVF b23 = bracket(basis_field(BasisTag::T2(k), n),
                         basis_field(BasisTag::T3(k), n));
    CHECK((b23 - Complex(-2.0, 0.0) * t).max_abs() < 1e-14);
  }

  // [D, Tt] = +2 Tt.
  PolyVF tt = basis_field(BasisTag::Tt(), n);
  CHECK((bracket(d, tt) - Complex(2.0, 0.0) * tt).max_abs() < 1e-12);
}

TEST_CASE("brackets of basis fields stay in the algebra") {
  int n = 3;
  const auto& b = basis(n);
  Rng rng(21);
  for (int rep = 0; rep < 60; ++rep) {
    const auto& x = b[rng.next_u64() % b.size()];
    const auto& y = b[rng.next_u64() % b.size()];
    PolyVF br = bracket(x.field, y.field);
    Decomposition dec = decompose(br, /*strict=*/false);
    CHECK(dec.residual < 1e-10);
  }
}

TEST_CASE("decomposition inverts assembly and rejects outsiders") {
  int n = 3;
  const auto& b = basis(n);
  Rng rng(31);
  PolyVF v = PolyVF::zero(n);
  std::vector<double> want;
  for (const auto& bf : b) {
    double c = rng.uniform(-2.0, 2.0);
    want.push_back(c);
    v += Complex(c, 0.0) * bf.field;
  }
  Decomposition dec = decompose(v);
  REQUIRE(dec.coeffs.size() == b.size());
  for (size_t i = 0; i < b.size(); ++i)
    CHECK(std::abs(dec.coeffs[i].second - want[i]) < 1e-11);
  CHECK((dec.assemble(n) - v).max_abs() < 1e-10);

  // w_1^2 d/dw_1 is polynomial but not in the span.
  PolyVF out = PolyVF::zero(n);
  out.quad[0](0, 0) = 1.0;
  try {
    decompose(out);
    FAIL("expected NotInAlgebra");
  } catch (const Error& e) {
    CHECK(e.code == Err::NotInAlgebra);
  }

  // Querying a tag outside the basis for this dimension is an error.
  CHECK_THROWS_AS(dec.coeff(BasisTag::T2(5)), Error);
}

TEST_CASE("grade rejects mixed combinations") {
  int n = 2;
  PolyVF mix = basis_field(BasisTag::T(), n) + basis_field(BasisTag::D(), n);
  try {
    grade(mix);
    FAIL("expected NotGraded");
  } catch (const Error& e) {
    CHECK(e.code == Err::NotGraded);
  }
}

TEST_CASE("real parts act on the canonical log-potential with the known constants") {
  Potential psi = Potential::psi0(3);
  Rng rng(41);
  int n = 3;
  for (int rep = 0; rep < 25; ++rep) {
    CPoint w{sample_siegel(rng, n), Model::Siegel};
    CHECK(std::abs(re_apply(basis_field(BasisTag::D(), n), psi, w) -
                   (-(n + 1.0))) < 1e-11);
    CHECK(std::abs(re_apply(basis_field(BasisTag::T(), n), psi, w)) < 1e-11);
    for (int k = 1; k < n; ++k) {
      CHECK(std::abs(re_apply(basis_field(BasisTag::T2(k), n), psi, w)) <
            1e-11);
      CHECK(std::abs(re_apply(basis_field(BasisTag::T3(k), n), psi, w)) <
            1e-11);
      CHECK(std::abs(re_apply(basis_field(BasisTag::Wk(k), n), psi, w)) <
            1e-11);
    }
    CHECK(std::abs(re_apply(basis_field(BasisTag::U(1, 2), n), psi, w)) <
          1e-11);
    CHECK(std::abs(re_apply(basis_field(BasisTag::V(1, 2), n), psi, w)) <
          1e-11);

    // Non-vanishing actions of the involution-pushed fields.
    const CVector& wc = w.coords;
    CHECK(std::abs(re_apply(basis_field(BasisTag::Tt(), n), psi, w) -
                   (-2.0 * (n + 1.0) * wc(n - 1).imag())) < 1e-10);
    for (int k = 1; k < n; ++k) {
      CHECK(std::abs(re_apply(basis_field(BasisTag::Tt2(k), n), psi, w) -
                     (-2.0 * (n + 1.0) * wc(k - 1).real())) < 1e-10);
      CHECK(std::abs(re_apply(basis_field(BasisTag::Tt3(k), n), psi, w) -
                     (-2.0 * (n + 1.0) * wc(k - 1).imag())) < 1e-10);
    }
  }
}

TEST_CASE("pushforward matches the pointwise transport formula") {
  int n = 2;
  Rng rng(51);
  Automorphism phi = Automorphism::identity(n);
  phi.then(GenT2k{1, 0.6}).then(GenTs{-0.4}).then(GenDil{0.3});
  Automorphism inv = phi.inverse();
  for (const BasisTag& tag :
       {BasisTag::T(), BasisTag::T2(1), BasisTag::D(), BasisTag::Tt()}) {
    PolyVF v = basis_field(tag, n);
    PolyVF pushed = pushforward(phi, v);
    for (int rep = 0; rep < 8; ++rep) {
      CVector w = sample_siegel(rng, n);
      CVector src = inv.apply(w);
      CVector direct = phi.jacobian(src) * v.eval(src);
      CHECK((pushed.eval(w) - direct).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
}

TEST_CASE("involution pushforward exchanges the graded families") {
  for (int n : {1, 2, 3}) {
    Automorphism sig = Automorphism::identity(n);
    sig.then(GenSigma{});
    auto swapped = [&](const BasisTag& a, const BasisTag& b, double sign) {
      PolyVF pushed = pushforward(sig, basis_field(a, n));
      CHECK((pushed - Complex(sign, 0.0) * basis_field(b, n)).max_abs() <
            1e-9);
    };
    swapped(BasisTag::T(), BasisTag::Tt(), 1.0);
    swapped(BasisTag::Tt(), BasisTag::T(), 1.0);
    swapped(BasisTag::D(), BasisTag::D(), -1.0);
    for (int k = 1; k < n; ++k) {
      swapped(BasisTag::T2(k), BasisTag::Tt2(k), 1.0);
      swapped(BasisTag::T3(k), BasisTag::Tt3(k), 1.0);
      swapped(BasisTag::Wk(k), BasisTag::Wk(k), 1.0);
    }
  }
}
