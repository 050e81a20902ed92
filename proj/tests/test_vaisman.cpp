#include "doctest.h"
#include "lck/corpus.hpp"
#include "lck/vaisman.hpp"

#include <random>

using namespace lck;

namespace {

using Q = Rational;

HermitianAlgebra<Q> herm(const AlgebraFile& f) { return load<Q>(f).hermitian(); }

// Hyperelliptic algebra A X Y Z: [A, X] = -Y, [A, Y] = X, J A = Z, J X = Y.
HermitianAlgebra<Q> hyperelliptic() { return herm(surface(SurfaceKind::hyperelliptic)); }

}  // namespace

TEST_CASE("Kahler flat verification") {
  CHECK(verify_kahler_flat(hyperelliptic()).ok());
  CHECK(verify_kahler_flat(herm(surface(SurfaceKind::torus))).ok());
  auto k = verify_kahler_flat(herm(surface(SurfaceKind::kodaira1)));
  CHECK_FALSE(k.ok());
  CHECK_FALSE(k.closed);
}

TEST_CASE("decomposition of the fibrado algebras") {
  auto s = herm(fibrado(3, {Q(1), Q(-1)}));
  auto dec = decompose(s);
  CHECK(dec.ok());
  CHECK(dec.theta_norm2 == Q(1));
  CHECK(dec.center_dim == 1);
  CHECK(dec.k.dim() == 4);
  CHECK(is_skew(dec.D, dec.kpart.g));
  CHECK(commutator(dec.D, dec.kpart.J.matrix()).is_zero());
  // D is a rotation with eigenvalues +-i, +-i
  CHECK((dec.D * dec.D + Matrix<Q>::identity(4)).is_zero());
  auto fp = fingerprint(dec);
  CHECK(fp.z == 4);
  CHECK(fp.h == 0);
  CHECK(fp.kprime == 0);
  CHECK(to_string(fp).find("charpoly(D) = [1, 0, 2, 0, 1]") != std::string::npos);
}

TEST_CASE("decomposition of the Heisenberg algebras") {
  for (int n = 1; n <= 3; ++n) {
    auto dec = decompose(herm(heisenberg_r(n, Q(1))));
    CHECK(dec.ok());
    CHECK(dec.D.is_zero());
    CHECK(dec.center_dim == 2);
    CHECK(dec.k.dim() == 2 * n);
  }
  auto s = herm(heisenberg_r(1, Q(2)));
  auto dec = decompose(s);
  auto theta = dec.theta.covector();
  CHECK(dec.theta_norm2 == dot(theta, s.g.inverse() * theta));
  CHECK(s.g.inner(dec.A0, dec.A0) == dec.theta_norm2);
  CHECK(dec.kahler_flat.ok());
}

TEST_CASE("decompose rejects non-Vaisman input with a reason") {
  auto reason = [](const AlgebraFile& f) {
    try {
      decompose(herm(f));
    } catch (const DecompositionError& e) {
      return e.reason();
    }
    FAIL("decompose did not throw");
    return DecompositionError::Reason::inconsistent;
  };
  CHECK(reason(surface(SurfaceKind::inoue_splus)) == DecompositionError::Reason::not_vaisman);
  CHECK(reason(surface(SurfaceKind::torus)) == DecompositionError::Reason::not_vaisman);
}

TEST_CASE("build_from_pair validates D") {
  auto k = hyperelliptic();
  CHECK_NOTHROW(build_from_pair(k, Matrix<Q>(4, 4)));
  CHECK_THROWS_AS(build_from_pair(k, Matrix<Q>(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(build_from_pair(k, Matrix<Q>::identity(4)), MathError);

  // D X = A, D Y = Z: skew, J-linear, but D[A, X] = -Z while [DA, X] + [A, DX] = 0.
  Matrix<Q> D(4, 4);
  D(0, 1) = Q(1);
  D(1, 0) = Q(-1);
  D(3, 2) = Q(1);
  D(2, 3) = Q(-1);
  CHECK(is_skew(D, k.g));
  CHECK(commutator(D, k.J.matrix()).is_zero());
  CHECK_THROWS_WITH_AS(build_from_pair(k, D), "D is not a derivation of k", MathError);

  // rotation of the A, Y plane does not commute with J
  auto t = herm(surface(SurfaceKind::torus));
  Matrix<Q> R(4, 4);
  R(2, 0) = Q(1);
  R(0, 2) = Q(-1);
  CHECK_THROWS_WITH_AS(build_from_pair(t, R), "D does not commute with J", MathError);

  CHECK_THROWS_AS(build_from_pair(herm(surface(SurfaceKind::kodaira1)), Matrix<Q>(4, 4)), MathError);
}

TEST_CASE("build and decompose round trip") {
  auto k = hyperelliptic();
  Matrix<Q> D = k.L.ad_basis(0);  // inner derivation ad_A
  auto s = build_from_pair(k, D);
  CHECK(s.L.is_lie());
  CHECK(is_integrable(s.L, s.J));
  auto dec = decompose(s);
  CHECK(dec.ok());
  CHECK(same_fingerprint(fingerprint(dec), fingerprint(k, D)));

  for (const auto& f : {fibrado(2, {Q(1)}), fibrado(3, {Q(1), Q(1)}), fibrado(4, {Q(1), Q(2), Q(-3)}),
                        heisenberg_r(2, Q(1))}) {
    CAPTURE(f.name);
    auto d1 = decompose(herm(f));
    auto rebuilt = build_from_pair(d1.kpart, d1.D);
    auto d2 = decompose(rebuilt);
    CHECK(same_fingerprint(fingerprint(d1), fingerprint(d2)));
  }
}

TEST_CASE("canonical bundle triviality matches the rotation sums") {
  auto closed = [](const std::vector<Q>& a) {
    auto s = herm(fibrado(static_cast<int>(a.size()) + 1, a));
    auto c = canonical_form(s);
    CHECK(c.equivalent);
    CHECK(c.closed == c.sums_zero);
    CHECK(c.closed == c.su_all);
    CHECK((c.adapted_eta_defect < 1e-9) == c.closed);
    return c;
  };
  auto z = closed({Q(1), Q(-1)});
  CHECK(z.closed);
  CHECK(z.sum_ca_raw == Q(0));
  auto nz = closed({Q(1), Q(1)});
  CHECK_FALSE(nz.closed);
  CHECK(nz.sum_ca_raw == Q(2));

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> u(-3, 3);
  for (int trial = 0; trial < 12; ++trial) {
    const int m = 1 + trial % 4;
    std::vector<Q> a;
    Q sum(0);
    for (int i = 0; i < m; ++i) {
      a.push_back(Q(u(rng)));
      sum += a.back();
    }
    if (trial % 3 == 0) {
      a.back() -= sum;
      sum = Q(0);
    }
    CAPTURE(trial);
    auto c = closed(a);
    CHECK(c.closed == (sum == 0));
    CHECK(c.sum_ca_raw == sum);
  }
}

TEST_CASE("imaginary spectrum of ad") {
  auto s = herm(fibrado(3, {Q(1), Q(-1)}));
  CHECK(imaginary_spectrum_check(s.L, 50, 1).pass);
  CHECK(imaginary_spectrum_check(herm(heisenberg_r(2, Q(1))).L, 50, 2).pass);
  auto sp = imaginary_spectrum_check(herm(surface(SurfaceKind::inoue_splus)).L, 50, 3);
  CHECK_FALSE(sp.pass);
  CHECK_FALSE(sp.certificate.empty());
}
