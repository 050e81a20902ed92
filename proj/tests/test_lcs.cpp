#include "doctest.h"
#include "lck/corpus.hpp"
#include "lck/lcs.hpp"

using namespace lck;

namespace {

using Q = Rational;

struct Entry {
  std::string name;
  LieAlgebra<Q> L;
  KForm<Q> omega;
  KForm<Q> theta;
};

std::vector<Entry> lcs_corpus() {
  std::vector<Entry> r;
  for (const auto& f : standard_corpus()) {
    if (f.mode != ScalarMode::exact) continue;
    auto a = load<Q>(f);
    if (!a.omega || !a.theta || a.theta->is_zero()) continue;
    r.push_back({f.name, a.L, *a.omega, *a.theta});
  }
  return r;
}

// Infinitesimal automorphisms from Cartan's formula L_x = i_x d + d i_x.
Matrix<Q> oracle_automorphisms(const LieAlgebra<Q>& L, const KForm<Q>& omega) {
  const int n = L.dim();
  auto dw = d(L, omega);
  std::vector<Vec<Q>> cols;
  for (int i = 0; i < n; ++i) {
    auto x = unit_vec<Q>(n, i);
    cols.push_back((interior(x, dw) + d(L, interior(x, omega))).coeffs());
  }
  Matrix<Q> M(static_cast<int>(cols[0].size()), n);
  for (int i = 0; i < n; ++i) M.set_col(i, cols[static_cast<std::size_t>(i)]);
  return nullspace(M);
}

bool oracle_first_kind(const LieAlgebra<Q>& L, const KForm<Q>& omega, const KForm<Q>& theta) {
  auto K = oracle_automorphisms(L, omega);
  for (int r = 0; r < K.rows(); ++r)
    if (dot(theta.covector(), K.row(r)) != 0) return true;
  return false;
}

LieAlgebra<Q> h3xr() { return load<Q>(emit("heisenberg_r", {{"n", "1"}})).L; }

LieAlgebra<Q> heis(int n) {
  // X1..Xn Y1..Yn Z with [Xi, Yi] = Z
  std::vector<BracketEntry<Q>> br;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("X" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) labels.push_back("Y" + std::to_string(i + 1));
  labels.push_back("Z");
  for (int i = 0; i < n; ++i) br.push_back({i, n + i, unit_vec<Q>(2 * n + 1, 2 * n)});
  return LieAlgebra<Q>(2 * n + 1, labels, br);
}

}  // namespace

TEST_CASE("LCS checks on the corpus") {
  auto entries = lcs_corpus();
  REQUIRE(entries.size() >= 10);
  for (const auto& e : entries) {
    CAPTURE(e.name);
    auto chk = is_lcs(e.L, e.omega, e.theta);
    CHECK(chk.ok());
    CHECK(chk.failure.empty());
  }
  auto e = entries.front();
  auto chk = is_lcs(e.L, e.omega, Q(2) * e.theta);
  CHECK_FALSE(chk.ok());
  CHECK(chk.failure == "d omega != theta ^ omega");
  CHECK_THROWS_AS(kind(e.L, e.omega, Q(2) * e.theta), MathError);
}

TEST_CASE("kind agrees with automorphisms from Cartan's formula") {
  int first = 0, second = 0;
  for (const auto& e : lcs_corpus()) {
    CAPTURE(e.name);
    auto k = kind(e.L, e.omega, e.theta);
    CHECK((k == LcsKind::first) == oracle_first_kind(e.L, e.omega, e.theta));
    (k == LcsKind::first ? first : second)++;
    auto g = automorphism_algebra(e.L, e.omega);
    CHECK(g.dim() == oracle_automorphisms(e.L, e.omega).rows());
  }
  CHECK(first > 0);
  CHECK(second > 0);
}

TEST_CASE("almost abelian LCK algebras are of the second kind") {
  auto a = load<Q>(almost_abelian_lck(2, Q(1), frac(-1, 4), {Q(0), Q(0)}));
  CHECK(kind(a.L, *a.omega, *a.theta) == LcsKind::second);
  CHECK_FALSE(is_exact_lcs(a.L, *a.omega, *a.theta));
  auto h = load<Q>(heisenberg_r(2, Q(1)));
  CHECK(kind(h.L, *h.omega, *h.theta) == LcsKind::first);
}

TEST_CASE("exactness and its relation to the kind on unimodular algebras") {
  for (const auto& e : lcs_corpus()) {
    CAPTURE(e.name);
    auto eta = is_exact_lcs(e.L, e.omega, e.theta);
    if (eta) CHECK(approx_equal(d(e.L, *eta) - wedge(e.theta, *eta), e.omega));
    if (is_unimodular(e.L)) CHECK(eta.has_value() == (kind(e.L, e.omega, e.theta) == LcsKind::first));
    if (kind(e.L, e.omega, e.theta) == LcsKind::first) CHECK(eta.has_value());
  }
}

TEST_CASE("Lee vector") {
  for (const auto& e : lcs_corpus()) {
    CAPTURE(e.name);
    auto V = lee_vector(e.omega, e.theta);
    CHECK(approx_equal(interior(V, e.omega), e.theta));
  }
  auto w = wedge(KForm<Q>::basis_covector(4, 0), KForm<Q>::basis_covector(4, 1));
  CHECK_THROWS_AS(lee_vector(w, KForm<Q>::basis_covector(4, 0)), MathError);
}

TEST_CASE("contact forms and Reeb vectors") {
  for (int n = 1; n <= 3; ++n) {
    auto h = heis(n);
    const int dim = 2 * n + 1;
    auto eta = KForm<Q>::basis_covector(dim, dim - 1);
    REQUIRE(is_contact(h, eta));
    auto R = reeb(h, eta);
    CHECK(dot(eta.covector(), R) == Q(1));
    CHECK(interior(R, d(h, eta)).is_zero());
    CHECK(R == unit_vec<Q>(dim, dim - 1));
    CHECK_FALSE(is_contact(h, KForm<Q>::basis_covector(dim, 0)));
  }
  LieAlgebra<Q> ab(3, {"a", "b", "c"}, {});
  CHECK_FALSE(is_contact(ab, KForm<Q>::basis_covector(3, 2)));
  CHECK_THROWS_AS(reeb(ab, KForm<Q>::basis_covector(3, 2)), MathError);
  CHECK_THROWS_AS(is_contact(h3xr(), KForm<Q>::basis_covector(4, 0)), std::invalid_argument);
}

TEST_CASE("LCS from a contact algebra") {
  auto h = heis(2);
  auto eta = KForm<Q>::basis_covector(5, 4);
  // D X1 = X1, D Y1 = -Y1 preserves eta
  Matrix<Q> D(5, 5);
  D(0, 0) = Q(1);
  D(2, 2) = Q(-1);
  auto s = lcs_from_contact(h, eta, D);
  CHECK(s.L.is_lie());
  CHECK(s.L.labels().front() == "U");
  CHECK(is_lcs(s.L, s.omega, s.theta).ok());
  CHECK(approx_equal(d(s.L, s.eta) - wedge(s.theta, s.eta), s.omega));
  CHECK(kind(s.L, s.omega, s.theta) == LcsKind::first);
  CHECK(oracle_first_kind(s.L, s.omega, s.theta));
  CHECK(approx_equal(interior(s.lee, s.omega), s.theta));

  Matrix<Q> bad(5, 5);
  bad(4, 4) = Q(1);
  CHECK_THROWS_AS(lcs_from_contact(h, eta, bad), MathError);
  Matrix<Q> notder(5, 5);
  notder(0, 0) = Q(1);
  CHECK_THROWS_WITH_AS(lcs_from_contact(h, eta, notder), "D is not a derivation of h", MathError);
}

TEST_CASE("LCS from a symplectic algebra") {
  LieAlgebra<Q> s(2, {"p", "q"}, {});
  auto beta = wedge(KForm<Q>::basis_covector(2, 0), KForm<Q>::basis_covector(2, 1));
  Matrix<Q> E(2, 2);
  E(0, 0) = Q(1);
  E(1, 1) = Q(-1);
  auto r = lcs_from_symplectic(s, beta, E);
  CHECK(r.L.dim() == 4);
  CHECK(is_lcs(r.L, r.omega, r.theta).ok());
  CHECK(kind(r.L, r.omega, r.theta) == LcsKind::first);
  CHECK(is_exact_lcs(r.L, r.omega, r.theta));

  LieAlgebra<Q> clash(2, {"R", "U"}, {});
  auto c = lcs_from_symplectic(clash, beta, E);
  CHECK(c.L.labels() == std::vector<std::string>{"U'", "R", "U", "R'"});

  E(1, 1) = Q(1);
  CHECK_THROWS_AS(lcs_from_symplectic(s, beta, E), MathError);
  CHECK_THROWS_AS(lcs_from_symplectic(s, KForm<Q>(2, 2), Matrix<Q>(2, 2)), MathError);
}
