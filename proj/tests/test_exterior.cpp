#include "doctest.h"
#include "lck/corpus.hpp"
#include "lck/exterior.hpp"

#include <algorithm>
#include <functional>
#include <random>

using namespace lck;

namespace {

using Q = Rational;

// Value of a form on basis vectors e_{idx[0]}, ..., read from its sorted terms.
Q eval_basis(const std::map<std::vector<int>, Q>& f, std::vector<int> idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
      if (idx[j] == idx[j + 1]) return Q(0);
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
    }
  for (std::size_t j = 0; j + 1 < idx.size(); ++j)
    if (idx[j] == idx[j + 1]) return Q(0);
  auto it = f.find(idx);
  return it == f.end() ? Q(0) : Q(sign * it->second);
}

std::map<std::vector<int>, Q> as_map(const KForm<Q>& f) {
  std::map<std::vector<int>, Q> m;
  for (auto& [idx, c] : f.terms()) m[idx] = c;
  return m;
}

// Cartan formula: d a(x_0, ..., x_k) = sum_{i<j} (-1)^{i+j} a([x_i, x_j], x_0, ..^i..^j.., x_k).
Q oracle_d(const LieAlgebra<Q>& L, const KForm<Q>& a, const std::vector<int>& x) {
  auto f = as_map(a);
  const int k = static_cast<int>(x.size());
  Q s(0);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      std::vector<int> rest;
      for (int t = 0; t < k; ++t)
        if (t != i && t != j) rest.push_back(x[static_cast<std::size_t>(t)]);
      for (int m = 0; m < L.dim(); ++m) {
        const Q& c = L.c(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)], m);
        if (c == 0) continue;
        std::vector<int> args{m};
        args.insert(args.end(), rest.begin(), rest.end());
        Q v = c * eval_basis(f, args);
        s += ((i + j) % 2 == 0) ? v : Q(-v);
      }
    }
  return s;
}

// (theta ^ a)(x_0, ..., x_k) = sum_i (-1)^i theta(x_i) a(x_0, ..^i.., x_k)
Q oracle_wedge1(const Vec<Q>& theta, const KForm<Q>& a, const std::vector<int>& x) {
  auto f = as_map(a);
  Q s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<int> rest;
    for (std::size_t t = 0; t < x.size(); ++t)
      if (t != i) rest.push_back(x[t]);
    Q v = theta[static_cast<std::size_t>(x[i])] * eval_basis(f, rest);
    s += i % 2 == 0 ? v : Q(-v);
  }
  return s;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> r;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      r.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return r;
}

int oracle_rank(std::vector<std::vector<Q>> m) {
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    auto r = static_cast<std::size_t>(rank);
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++rank;
  }
  return rank;
}

// Twisted Betti numbers with d_theta built from the Cartan formula and an independent elimination.
std::vector<int> oracle_twisted_betti(const LieAlgebra<Q>& L, const Vec<Q>& theta) {
  const int n = L.dim();
  std::vector<int> ranks(static_cast<std::size_t>(n + 1), 0);
  for (int k = 0; k < n; ++k) {
    auto src = subsets(n, k), dst = subsets(n, k + 1);
    std::vector<std::vector<Q>> m(dst.size(), std::vector<Q>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c) {
      auto e = KForm<Q>::from_terms(n, k, {{src[c], Q(1)}});
      for (std::size_t r = 0; r < dst.size(); ++r) m[r][c] = oracle_d(L, e, dst[r]) - oracle_wedge1(theta, e, dst[r]);
    }
    ranks[static_cast<std::size_t>(k)] = oracle_rank(m);
  }
  std::vector<int> b;
  for (int k = 0; k <= n; ++k) {
    int dimk = static_cast<int>(subsets(n, k).size());
    b.push_back(dimk - ranks[static_cast<std::size_t>(k)] - (k > 0 ? ranks[static_cast<std::size_t>(k - 1)] : 0));
  }
  return b;
}

KForm<Q> random_form(std::mt19937_64& rng, int n, int k) {
  std::uniform_int_distribution<int> d(-3, 3);
  KForm<Q> f(n, k);
  for (auto& c : f.coeffs()) c = Q(d(rng));
  return f;
}

std::vector<LieAlgebra<Q>> exact_corpus() {
  std::vector<LieAlgebra<Q>> r;
  for (const auto& f : standard_corpus())
    if (f.mode == ScalarMode::exact && f.dim <= 8) r.push_back(load<Q>(f).L);
  return r;
}

}  // namespace

TEST_CASE("wedge basics") {
  auto e0 = KForm<Q>::basis_covector(4, 0), e1 = KForm<Q>::basis_covector(4, 1);
  CHECK(approx_equal(wedge(e0, e1), -wedge(e1, e0)));
  CHECK(wedge(e0, e0).is_zero());
  auto w = wedge(e0, e1) + wedge(KForm<Q>::basis_covector(4, 2), KForm<Q>::basis_covector(4, 3));
  auto w2 = wedge_power(w, 2);
  CHECK(w2.coeff({0, 1, 2, 3}) == Q(2));
  CHECK(is_nondegenerate(w));
  CHECK_FALSE(is_nondegenerate(wedge(e0, e1)));
}

TEST_CASE("wedge is associative and graded commutative") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_form(rng, 6, 1), b = random_form(rng, 6, 2), c = random_form(rng, 6, 2);
    CHECK(approx_equal(wedge(wedge(a, b), c), wedge(a, wedge(b, c))));
    CHECK(approx_equal(wedge(a, b), wedge(b, a)));
    auto a3 = random_form(rng, 6, 3), b1 = random_form(rng, 6, 1);
    CHECK(approx_equal(wedge(a3, b1), -wedge(b1, a3)));
  }
}

TEST_CASE("d agrees with the Cartan formula on every corpus algebra") {
  std::mt19937_64 rng(11);
  for (const auto& L : exact_corpus()) {
    const int n = L.dim();
    for (int k = 1; k <= std::min(n - 1, 3); ++k) {
      auto a = random_form(rng, n, k);
      auto da = d(L, a);
      const auto& fb = FormBasis::get(n);
      for (int idx = 0; idx < fb.count(k + 1); ++idx) {
        auto x = mask_indices(fb.mask(k + 1, idx));
        CHECK(da.coeff(x) == oracle_d(L, a, x));
      }
    }
  }
}

TEST_CASE("d on 1-forms is minus the dual of the bracket") {
  auto L = load<Q>(heisenberg_r(1, Q(1))).L;  // X1 Y1 Z1 Z2, [X1, Y1] = Z1
  auto dz1 = d(L, KForm<Q>::basis_covector(4, 2));
  CHECK(dz1.coeff({0, 1}) == Q(-1));
  CHECK(d(L, KForm<Q>::basis_covector(4, 0)).is_zero());
}

TEST_CASE("d squares to zero and satisfies Leibniz") {
  std::mt19937_64 rng(5);
  for (const auto& L : exact_corpus()) {
    const int n = L.dim();
    for (int k = 0; k + 2 <= n; ++k) {
      auto dd = differential_matrix(L, k + 1) * differential_matrix(L, k);
      CHECK(dd.is_zero());
    }
    if (n < 3) continue;
    auto a = random_form(rng, n, 1), b = random_form(rng, n, 2);
    CHECK(approx_equal(d(L, wedge(a, b)), wedge(d(L, a), b) - wedge(a, d(L, b))));
  }
}

TEST_CASE("interior product is an antiderivation") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> u(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_form(rng, 5, 2), b = random_form(rng, 5, 1);
    Vec<Q> v;
    for (int i = 0; i < 5; ++i) v.push_back(Q(u(rng)));
    CHECK(approx_equal(interior(v, wedge(a, b)), wedge(interior(v, a), b) + wedge(a, interior(v, b))));
  }
}

TEST_CASE("twisted differential squares to zero for closed theta") {
  for (const auto& L : exact_corpus()) {
    const int n = L.dim();
    auto z = betti(L);
    if (z[1] == 0) continue;
    // a closed 1-form: pick from the kernel of d on 1-forms
    auto ker = nullspace(differential_matrix(L, 1));
    REQUIRE(ker.rows() > 0);
    auto theta = KForm<Q>::from_covector(ker.row(0));
    for (int k = 0; k + 2 <= n; ++k) {
      auto dd = twisted_differential_matrix(L, theta, k + 1) * twisted_differential_matrix(L, theta, k);
      CHECK(dd.is_zero());
    }
  }
  auto L = load<Q>(heisenberg_r(1, Q(1))).L;
  CHECK_THROWS_AS(twisted_betti(L, KForm<Q>::basis_covector(4, 2)), MathError);
}

TEST_CASE("Betti numbers") {
  auto h3xr = load<Q>(heisenberg_r(1, Q(1))).L;
  CHECK(betti(h3xr) == std::vector<int>{1, 3, 4, 3, 1});
  CHECK(betti(load<Q>(surface(SurfaceKind::inoue_splus)).L) == std::vector<int>{1, 1, 0, 1, 1});
  CHECK(betti(load<Q>(surface(SurfaceKind::torus)).L) == std::vector<int>{1, 4, 6, 4, 1});
  CHECK(betti(load<Q>(heisenberg_r(2, Q(1))).L) == std::vector<int>{1, 5, 9, 10, 9, 5, 1});
  for (const auto& L : exact_corpus()) {
    auto b = betti(L);
    int euler = 0;
    for (std::size_t k = 0; k < b.size(); ++k) euler += (k % 2 ? -1 : 1) * b[k];
    CHECK(euler == 0);
    if (is_unimodular(L)) {
      auto r = b;
      std::reverse(r.begin(), r.end());
      CHECK(r == b);
    }
  }
}

TEST_CASE("twisted Betti numbers of the Inoue algebras") {
  auto sp = load<Q>(surface(SurfaceKind::inoue_splus)).L;
  auto alpha = KForm<Q>::basis_covector(4, 0);
  CHECK(twisted_betti(sp, -alpha) == std::vector<int>{0, 1, 2, 1, 0});
  CHECK(twisted_betti(sp, alpha) == std::vector<int>{0, 1, 2, 1, 0});
  CHECK(twisted_betti(sp, Q(2) * alpha) == std::vector<int>{0, 0, 0, 0, 0});
  auto s0 = load<Q>(surface(SurfaceKind::inoue_s0, frac(1, 3))).L;
  CHECK(twisted_betti(s0, alpha) == std::vector<int>{0, 0, 1, 1, 0});
  CHECK(twisted_betti(s0, -alpha) == std::vector<int>{0, 1, 1, 0, 0});
}

TEST_CASE("twisted Betti numbers agree with an independent Cartan-formula computation") {
  auto alpha = unit_vec<Q>(4, 0);
  Vec<Q> minus_alpha{Q(-1), Q(0), Q(0), Q(0)};
  auto sp = load<Q>(surface(SurfaceKind::inoue_splus)).L;
  CHECK(oracle_twisted_betti(sp, minus_alpha) == std::vector<int>{0, 1, 2, 1, 0});
  CHECK(oracle_twisted_betti(sp, minus_alpha) == twisted_betti(sp, KForm<Q>::from_covector(minus_alpha)));
  auto s0 = load<Q>(surface(SurfaceKind::inoue_s0, frac(1, 3))).L;
  CHECK(oracle_twisted_betti(s0, alpha) == std::vector<int>{0, 0, 1, 1, 0});
  auto ot11 = load<Q>(ot(1, 1, {{Q(1)}}, {{Q(0)}})).L;
  CHECK(oracle_twisted_betti(ot11, alpha) == twisted_betti(ot11, KForm<Q>::from_covector(alpha)));
  CHECK(oracle_twisted_betti(ot11, alpha) == std::vector<int>{0, 0, 1, 1, 0});
  for (const auto& f : standard_corpus()) {
    if (f.mode != ScalarMode::exact || !f.theta || f.dim > 6) continue;
    auto a = load<Q>(f);
    if (a.theta->is_zero()) continue;
    CAPTURE(f.name);
    CHECK(oracle_twisted_betti(a.L, a.theta->covector()) == twisted_betti(a.L, *a.theta));
  }
}

TEST_CASE("approx mode agrees with exact mode on the corpus") {
  for (const auto& f : standard_corpus()) {
    if (f.mode != ScalarMode::exact || f.dim > 8) continue;
    CAPTURE(f.name);
    CHECK(betti(load<double>(f).L) == betti(load<Q>(f).L));
  }
}
