#include <catch2/catch_amalgamated.hpp>

#include "geometry.hpp"
#include "metric.hpp"
#include "sampling.hpp"

using namespace kepot;

namespace {
CPoint siegel_pt(std::initializer_list<Complex> cs) {
  CVector v(static_cast<int>(cs.size()));
  int i = 0;
  for (Complex c : cs) v(i++) = c;
  return CPoint{v, Model::Siegel};
}
}  // namespace

TEST_CASE("metric at the base point is diagonal with known entries") {
  for (int n : {1, 2, 3, 5}) {
    CVector w = CVector::Zero(n);
    w(n - 1) = 1.0;
    HermitianForm g = metric_siegel(CPoint{w, Model::Siegel});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double expect = 0.0;
        if (i == j) expect = (i < n - 1) ? (n + 1.0) : (n + 1.0) / 4.0;
        CHECK(std::abs(g.entries(i, j) - expect) < 1e-14);
      }

    HermitianForm k = inverse_metric_siegel(CPoint{w, Model::Siegel});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double expect = 0.0;
        if (i == j) expect = (i < n - 1) ? 1.0 / (n + 1.0) : 4.0 / (n + 1.0);
        CHECK(std::abs(k.entries(i, j) - expect) < 1e-14);
      }

    // Cotangent norm of the last coordinate differential at the base point.
    CVector a = CVector::Zero(n);
    a(n - 1) = 1.0;
    CHECK(norm_sq_form(a, CPoint{w, Model::Siegel}) ==
          Catch::Approx(4.0 / (n + 1.0)).margin(1e-14));
  }
}

TEST_CASE("frozen two-dimensional example") {
  CPoint w = siegel_pt({Complex(0.5, 0.0), Complex(1.0, 0.0)});
  HermitianForm g = metric_siegel(w);
  CHECK(std::abs(g.entries(0, 0) - 16.0 / 3.0) < 1e-13);
  CHECK(std::abs(g.entries(0, 1) - (-4.0 / 3.0)) < 1e-13);
  CHECK(std::abs(g.entries(1, 0) - (-4.0 / 3.0)) < 1e-13);
  CHECK(std::abs(g.entries(1, 1) - 4.0 / 3.0) < 1e-13);

  HermitianForm k = inverse_metric_siegel(w);
  CHECK(std::abs(k.entries(0, 0) - 0.25) < 1e-14);
  CHECK(std::abs(k.entries(0, 1) - 0.25) < 1e-14);
  CHECK(std::abs(k.entries(1, 0) - 0.25) < 1e-14);
  CHECK(std::abs(k.entries(1, 1) - 1.0) < 1e-14);
}

TEST_CASE("closed-form inverse contracts against the metric") {
  for (int n : {1, 2, 3, 4, 5}) {
    Rng rng(500 + n);
    for (int rep = 0; rep < 30; ++rep) {
      CPoint w{sample_siegel(rng, n), Model::Siegel};
      HermitianForm g = metric_siegel(w);
      HermitianForm k = inverse_metric_siegel(w);
      CHECK(g.hermitian_defect() < 1e-12);
      CHECK(k.hermitian_defect() < 1e-12);
      // entries_M(i,j) entries_K(k,j) contract over the barred index j.
      CMatrix prod = g.entries * k.entries.transpose();
      CHECK((prod - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-11);
      // The displayed block inverse equals the numeric inverse entrywise.
      CMatrix numeric = g.entries.inverse().transpose();
      CHECK((numeric - k.entries).cwiseAbs().maxCoeff() /
                numeric.cwiseAbs().maxCoeff() <
            1e-11);

      CPoint z{sample_ball(rng, n), Model::Ball};
      HermitianForm gb = metric_ball(z);
      HermitianForm kb = inverse_metric_ball(z);
      CMatrix prodb = gb.entries * kb.entries.transpose();
      CHECK((prodb - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-11);
    }
  }
}

TEST_CASE("ball metric is the cayley pullback of the half-space metric") {
  for (int n : {1, 2, 3}) {
    Rng rng(900 + n);
    for (int rep = 0; rep < 20; ++rep) {
      CVector z = sample_ball(rng, n);
      CMatrix target = metric_siegel(CPoint{cayley(z), Model::Siegel}).entries;
      CMatrix pulled = pullback_form(target, cayley_jacobian(z));
      CMatrix direct = metric_ball(CPoint{z, Model::Ball}).entries;
      CHECK((pulled - direct).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("einstein residual vanishes to discretization order") {
  for (int n : {1, 2, 3}) {
    Rng rng(300 + n);
    for (int rep = 0; rep < 5; ++rep) {
      CPoint w{sample_siegel(rng, n), Model::Siegel};
      CHECK(einstein_residual(w) < 1e-4);
      CPoint z{sample_ball(rng, n), Model::Ball};
      CHECK(einstein_residual(z) < 1e-4);
    }
  }
}

TEST_CASE("cayley satisfies the isometry determinant identity") {
  HoloMap c{[](const CVector& z) { return cayley(z); },
            [](const CVector& z) { return cayley_jacobian(z); },
            Model::Siegel};
  for (int n : {1, 2, 3}) {
    Rng rng(1200 + n);
    for (int rep = 0; rep < 10; ++rep) {
      CPoint z{sample_ball(rng, n), Model::Ball};
      CHECK(isometry_det_identity(c, z) < 1e-10);
    }
  }
}
