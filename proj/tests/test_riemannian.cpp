#include "doctest.h"
#include "lck/corpus.hpp"
#include "lck/riemannian.hpp"

#include <random>

using namespace lck;

namespace {

using Q = Rational;

struct Entry {
  std::string name;
  LieAlgebra<Q> L;
  Metric<Q> g;
};

std::vector<Entry> metric_corpus() {
  std::vector<Entry> r;
  for (const auto& f : standard_corpus()) {
    if (f.mode != ScalarMode::exact || !f.metric || f.dim > 8) continue;
    auto a = load<Q>(f);
    r.push_back({f.name, a.L, *a.g});
  }
  return r;
}

// 2 g(nabla_x y, z) = g([x, y], z) - g([y, z], x) + g([z, x], y)
Vec<Q> koszul(const LieAlgebra<Q>& L, const Metric<Q>& g, int x, int y) {
  const int n = L.dim();
  Vec<Q> rhs(static_cast<std::size_t>(n));
  auto e = [&](int i) { return unit_vec<Q>(n, i); };
  for (int z = 0; z < n; ++z)
    rhs[static_cast<std::size_t>(z)] = (g.inner(L.bracket_basis(x, y), e(z)) - g.inner(L.bracket_basis(y, z), e(x)) +
                                        g.inner(L.bracket_basis(z, x), e(y))) /
                                       Q(2);
  return g.inverse() * rhs;
}

// s = -1/4 |c|^2 - 1/2 tr_g B - |H|^2 with g(H, x) = tr ad_x.
Q oracle_scalar(const LieAlgebra<Q>& L, const Metric<Q>& g) {
  const int n = L.dim();
  const auto& G = g.gram();
  const auto& Gi = g.inverse();
  Q c2(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
          if (Gi(i, l) == 0 || Gi(j, m) == 0) continue;
          Q s(0);
          for (int k = 0; k < n; ++k)
            for (int p = 0; p < n; ++p) s += G(k, p) * L.c(i, j, k) * L.c(l, m, p);
          c2 += Gi(i, l) * Gi(j, m) * s;
        }
  Q trB(0), h2(0);
  Vec<Q> h(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) h[static_cast<std::size_t>(i)] = L.ad_basis(i).trace();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      trB += Gi(i, j) * (L.ad_basis(i) * L.ad_basis(j)).trace();
      h2 += Gi(i, j) * h[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(j)];
    }
  return -c2 / Q(4) - trB / Q(2) - h2;
}

// Induced inner product on k-forms: <e^I, e^J> = det(G^{-1}[I, J]).
Q form_inner(const Metric<Q>& g, const KForm<Q>& a, const KForm<Q>& b) {
  Q s(0);
  for (const auto& [I, x] : a.terms())
    for (const auto& [J, y] : b.terms()) {
      const int k = static_cast<int>(I.size());
      Matrix<Q> m(k, k);
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) m(r, c) = g.inverse()(I[static_cast<std::size_t>(r)], J[static_cast<std::size_t>(c)]);
      s += x * y * (k == 0 ? Q(1) : determinant(m));
    }
  return s;
}

KForm<Q> random_form(std::mt19937_64& rng, int n, int k) {
  std::uniform_int_distribution<int> d(-2, 2);
  KForm<Q> f(n, k);
  for (auto& c : f.coeffs()) c = Q(d(rng));
  return f;
}

}  // namespace

TEST_CASE("metric validation") {
  Matrix<Q> bad(2, 2);
  bad(0, 0) = Q(1);
  bad(1, 1) = Q(-1);
  CHECK_THROWS_AS(Metric<Q>{bad}, MathError);
  bad(1, 1) = Q(1);
  bad(0, 1) = Q(1);
  CHECK_THROWS_AS(Metric<Q>{bad}, MathError);
}

TEST_CASE("Levi-Civita agrees with the Koszul formula") {
  for (const auto& e : metric_corpus()) {
    CAPTURE(e.name);
    LeviCivita<Q> nabla(e.L, e.g);
    const int n = e.L.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(nabla.nabla(i).col(j) == koszul(e.L, e.g, i, j));
  }
}

TEST_CASE("Levi-Civita is torsion free and metric") {
  for (const auto& e : metric_corpus()) {
    LeviCivita<Q> nabla(e.L, e.g);
    const int n = e.L.dim();
    for (int i = 0; i < n; ++i) {
      CHECK(is_skew(nabla.nabla(i), e.g));
      for (int j = 0; j < n; ++j)
        CHECK(nabla.nabla(i).col(j) - nabla.nabla(j).col(i) == e.L.bracket_basis(i, j));
    }
  }
}

TEST_CASE("scalar curvature agrees with the structure-constant formula") {
  for (const auto& e : metric_corpus()) {
    CAPTURE(e.name);
    CHECK(scalar_curvature(e.L, e.g) == oracle_scalar(e.L, e.g));
    CHECK((ricci(e.L, e.g) - ricci(e.L, e.g).transpose()).is_zero());
  }
}

TEST_CASE("Heisenberg scalar curvature") {
  for (int n = 1; n <= 3; ++n) {
    auto a = load<Q>(heisenberg_r(n, Q(1)));
    CHECK(scalar_curvature(a.L, *a.g) == frac(-n, 2));
  }
  for (Q lambda : {Q(2), frac(1, 2), Q(3)}) {
    auto a = load<Q>(heisenberg_r(1, lambda));
    CHECK(scalar_curvature(a.L, *a.g) == Q(-1) / (Q(2) * lambda));
  }
}

TEST_CASE("flatness") {
  auto t = load<Q>(surface(SurfaceKind::torus));
  CHECK(is_flat(t.L, *t.g));
  auto h = load<Q>(surface(SurfaceKind::hyperelliptic));
  CHECK(is_flat(h.L, *h.g));
  auto k = load<Q>(surface(SurfaceKind::kodaira1));
  CHECK_FALSE(is_flat(k.L, *k.g));
}

TEST_CASE("codifferential is the adjoint of d on unimodular algebras") {
  std::mt19937_64 rng(21);
  for (const auto& e : metric_corpus()) {
    if (!is_unimodular(e.L) || e.L.dim() > 6) continue;
    CAPTURE(e.name);
    const int n = e.L.dim();
    for (int k = 1; k <= 3; ++k) {
      auto a = random_form(rng, n, k), b = random_form(rng, n, k - 1);
      CHECK(form_inner(e.g, codifferential(e.L, e.g, a), b) == form_inner(e.g, a, d(e.L, b)));
    }
  }
}

TEST_CASE("Killing vectors") {
  auto a = load<Q>(heisenberg_r(1, Q(1)));
  CHECK(is_killing(a.L, *a.g, unit_vec<Q>(4, 3)));
  CHECK(is_killing(a.L, *a.g, unit_vec<Q>(4, 2)));
  auto s = load<Q>(surface(SurfaceKind::inoue_splus));
  CHECK_FALSE(is_killing(s.L, *s.g, unit_vec<Q>(4, 0)));
}
