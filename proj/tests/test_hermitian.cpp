#include "doctest.h"
#include "lck/corpus.hpp"
#include "lck/hermitian.hpp"
#include "lck/riemannian.hpp"

using namespace lck;

namespace {

using Q = Rational;

struct Entry {
  std::string name;
  LoadedAlgebra<Q> a;
};

std::vector<Entry> hermitian_corpus() {
  std::vector<Entry> r;
  for (const auto& f : standard_corpus()) {
    if (f.mode != ScalarMode::exact || !f.metric || !f.J) continue;
    r.push_back({f.name, load<Q>(f)});
  }
  return r;
}

// N(x, y) = [Jx, Jy] - J[Jx, y] - J[x, Jy] - [x, y]
bool oracle_integrable(const LieAlgebra<Q>& L, const Matrix<Q>& J) {
  const int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<Q> x = unit_vec<Q>(n, i), y = unit_vec<Q>(n, j);
      Vec<Q> N = L.bracket(J * x, J * y) - J * L.bracket(J * x, y) - J * L.bracket(x, J * y) - L.bracket(x, y);
      if (!is_zero_vec(N)) return false;
    }
  return true;
}

// (nabla_x theta)(x) = -theta(nabla_x x), nabla_x x = G^{-1} (g([z, x], x))_z by Koszul.
Q nabla_theta_xx(const LieAlgebra<Q>& L, const Metric<Q>& g, const Vec<Q>& theta, int x) {
  const int n = L.dim();
  Vec<Q> rhs(static_cast<std::size_t>(n));
  for (int z = 0; z < n; ++z) rhs[static_cast<std::size_t>(z)] = g.inner(L.bracket_basis(z, x), unit_vec<Q>(n, x));
  return -dot(theta, g.inverse() * rhs);
}

Vec<Q> alpha4(int sign) { return {Q(sign), Q(0), Q(0), Q(0)}; }

}  // namespace

TEST_CASE("complex structure validation") {
  Matrix<Q> J(2, 2);
  J(0, 1) = Q(1);
  J(1, 0) = Q(1);
  CHECK_THROWS_AS(ComplexStructure<Q>{J}, MathError);
  CHECK_THROWS_AS(ComplexStructure<Q>{Matrix<Q>::identity(3)}, MathError);
}

TEST_CASE("integrability agrees with a direct Nijenhuis evaluation") {
  for (const auto& e : hermitian_corpus()) {
    CAPTURE(e.name);
    CHECK(is_integrable(e.a.L, *e.a.J) == oracle_integrable(e.a.L, e.a.J->matrix()));
    CHECK(is_integrable(e.a.L, *e.a.J));
  }
  // R x h3 with J X = Z, J Y = T is not integrable: N(X, Y) = -Z.
  auto h = load<Q>(heisenberg_r(1, Q(1))).L;
  Matrix<Q> J(4, 4);
  J(2, 0) = Q(1);
  J(0, 2) = Q(-1);
  J(3, 1) = Q(1);
  J(1, 3) = Q(-1);
  ComplexStructure<Q> bad(J);
  CHECK_FALSE(is_integrable(h, bad));
  CHECK_FALSE(oracle_integrable(h, J));
}

TEST_CASE("compatibility and the fundamental form") {
  auto a = load<Q>(surface(SurfaceKind::kodaira1));
  CHECK(is_compatible(*a.J, *a.g));
  auto omega = fundamental_form(*a.g, *a.J);
  // omega(x, y) = g(Jx, y): omega = alpha ^ z + x ^ y
  CHECK(omega.coeff({0, 3}) == Q(1));
  CHECK(omega.coeff({1, 2}) == Q(1));
  Matrix<Q> G = Matrix<Q>::identity(4);
  G(0, 0) = Q(2);
  CHECK_FALSE(is_compatible(*a.J, Metric<Q>(G)));
}

TEST_CASE("Lee form: solve and trace formula agree and satisfy d omega = theta ^ omega") {
  for (const auto& e : hermitian_corpus()) {
    CAPTURE(e.name);
    const auto& L = e.a.L;
    auto omega = fundamental_form(*e.a.g, *e.a.J);
    auto c = classify(L, *e.a.g, *e.a.J);
    if (c.kind == HermitianKind::non_lck) continue;
    REQUIRE(c.theta);
    CHECK(approx_equal(d(L, omega), wedge(*c.theta, omega)));
    CHECK(approx_equal(lee_form_formula(L, *e.a.g, *e.a.J), *c.theta));
    auto solved = lee_form_solve(L, omega);
    REQUIRE(solved);
    CHECK(approx_equal(*solved, *c.theta));
  }
}

TEST_CASE("surface classification") {
  auto lee = [](SurfaceKind k) {
    auto a = load<Q>(surface(k, frac(1, 2)));
    return classify(a.L, *a.g, *a.J);
  };
  CHECK(lee(SurfaceKind::torus).kind == HermitianKind::kahler);
  CHECK(lee(SurfaceKind::hyperelliptic).kind == HermitianKind::kahler);
  for (auto k : {SurfaceKind::kodaira1, SurfaceKind::kodaira2, SurfaceKind::inoue_s0}) {
    auto c = lee(k);
    CHECK(c.kind == HermitianKind::lck);
    CHECK(c.theta->covector() == alpha4(1));
  }
  auto sp = lee(SurfaceKind::inoue_splus);
  CHECK(sp.kind == HermitianKind::lck);
  CHECK(sp.theta->covector() == alpha4(-1));
}

TEST_CASE("Inoue S+ is not Vaisman") {
  auto a = load<Q>(surface(SurfaceKind::inoue_splus));
  auto v = is_vaisman(a.L, *a.g, *a.J);
  CHECK_FALSE(v.vaisman);
  CHECK_FALSE(v.killing);
  CHECK_FALSE(v.parallel);
  CHECK(v.certificate.find("(nabla_X theta)(X) = 1") != std::string::npos);
  CHECK(nabla_theta_xx(a.L, *a.g, alpha4(-1), 1) == Q(1));
}

TEST_CASE("Vaisman verdicts on the corpus") {
  for (int n = 1; n <= 3; ++n) {
    auto a = load<Q>(heisenberg_r(n, Q(1)));
    auto c = classify(a.L, *a.g, *a.J);
    REQUIRE(c.kind == HermitianKind::lck);
    auto theta = c.theta->covector();
    const int dim = 2 * n + 2;
    CHECK(theta == Vec<Q>(unit_vec<Q>(dim, dim - 1)));
    auto v = is_vaisman(a.L, *a.g, *a.J);
    CHECK(v.vaisman);
    CHECK(v.killing);
    CHECK(v.parallel);
    // Lee vector is central, J of it spans the derived algebra.
    CHECK(center(a.L).contains(v.lee_vector));
    CHECK(commutator_ideal(a.L).contains(a.J->matrix() * v.lee_vector));
  }
  for (const auto& e : hermitian_corpus()) {
    auto c = classify(e.a.L, *e.a.g, *e.a.J);
    if (c.kind != HermitianKind::lck) continue;
    auto v = is_vaisman(e.a.L, *e.a.g, *e.a.J);
    CAPTURE(e.name);
    CHECK(v.killing == v.parallel);
  }
  auto t = load<Q>(surface(SurfaceKind::torus));
  CHECK_THROWS_AS(is_vaisman(t.L, *t.g, *t.J), MathError);
}

TEST_CASE("u(n) and su(n) membership") {
  Matrix<Q> J(2, 2);
  J(1, 0) = Q(1);
  J(0, 1) = Q(-1);
  Matrix<Q> G = Matrix<Q>::identity(2);
  Matrix<Q> rot = J;
  CHECK(u_membership(rot, J, G));
  CHECK_FALSE(su_membership(rot, J, G));
  CHECK(su_membership(Matrix<Q>(2, 2), J, G));
  CHECK_FALSE(u_membership(Matrix<Q>::identity(2), J, G));
  // rotations a and -a on two complex planes
  Matrix<Q> J4(4, 4), D(4, 4);
  J4(1, 0) = J4(3, 2) = Q(1);
  J4(0, 1) = J4(2, 3) = Q(-1);
  D(1, 0) = Q(2);
  D(0, 1) = Q(-2);
  D(3, 2) = Q(-2);
  D(2, 3) = Q(2);
  CHECK(su_membership(D, J4, Matrix<Q>::identity(4)));
}

TEST_CASE("almost abelian LCK structures") {
  auto a = load<Q>(almost_abelian_lck(2, Q(1), frac(-1, 4), {Q(0), Q(0)}));
  auto r = check_almost_abelian_lck(a.L, *a.g, *a.J);
  CHECK(r.clause == 2);
  CHECK(r.shape_ok);
  CHECK(r.lambda_raw == frac(-1, 4));
  CHECK(r.mu_raw == Q(1));
  CHECK(r.unimodular);
  CHECK(r.unimodular_formula);
  CHECK(r.theta_matches);

  auto b = load<Q>(almost_abelian_lck(2, Q(2), frac(-1, 2), {Q(1), Q(3)}));
  auto rb = check_almost_abelian_lck(b.L, *b.g, *b.J);
  CHECK(rb.shape_ok);
  CHECK(rb.b_unitary);
  CHECK(rb.unimodular == rb.unimodular_formula);

  auto c = load<Q>(almost_abelian_lck(1, Q(1), Q(1), {Q(0)}));
  auto rc = check_almost_abelian_lck(c.L, *c.g, *c.J);
  CHECK(rc.shape_ok);
  CHECK_FALSE(rc.unimodular);
  CHECK(rc.consistent);

  auto h = load<Q>(heisenberg_r(1, Q(1)));
  auto rh = check_almost_abelian_lck(h.L, *h.g, *h.J);
  CHECK(rh.clause == 1);
  CHECK(rh.fingerprint == "h3 x R");

  auto sp = load<Q>(heisenberg_r(2, Q(1)));
  CHECK_THROWS_AS(check_almost_abelian_lck(sp.L, *sp.g, *sp.J), MathError);
}

TEST_CASE("approx mode reproduces the exact Lee forms") {
  for (const auto& f : standard_corpus()) {
    if (f.mode != ScalarMode::exact || !f.metric) continue;
    auto q = load<Q>(f);
    auto x = load<double>(f);
    auto cq = classify(q.L, *q.g, *q.J);
    auto cx = classify(x.L, *x.g, *x.J);
    CAPTURE(f.name);
    CHECK(cq.kind == cx.kind);
    if (cq.theta) {
      auto diff = to_double(cq.theta->covector());
      auto tx = cx.theta->covector();
      for (std::size_t i = 0; i < diff.size(); ++i) CHECK(std::fabs(diff[i] - tx[i]) < 1e-9);
    }
  }
}
