#include "lck/riemannian.hpp"

namespace lck {

template <class T>
bool is_positive_definite(const Matrix<T>& g, const Tolerance& tol) {
  if (!g.square()) return false;
  const int n = g.rows();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!near_zero(T(g(i, j) - g(j, i)), tol)) return false;
  // Symmetric Gaussian elimination without pivoting; pivots are ratios of leading minors.
  Matrix<T> a = g;
  for (int k = 0; k < n; ++k) {
    if constexpr (is_exact_v<T>) {
      if (sgn(a(k, k)) <= 0) return false;
    } else {
      if (!(a(k, k) > tol.zero_eps)) return false;
    }
    for (int i = k + 1; i < n; ++i) {
      T f = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

template <class T>
Metric<T>::Metric(Matrix<T> gram, const Tolerance& tol) : g_(std::move(gram)) {
  if (!g_.square() || g_.rows() == 0) throw std::invalid_argument("metric must be a nonempty square matrix");
  if (!is_positive_definite(g_, tol)) throw MathError("metric is not symmetric positive definite");
  auto inv = lck::inverse(g_, tol);
  if (!inv) throw MathError("degenerate metric");
  ginv_ = std::move(*inv);
}

template <class T>
LeviCivita<T>::LeviCivita(const LieAlgebra<T>& L, const Metric<T>& g) {
  const int n = L.dim();
  if (g.dim() != n) throw std::invalid_argument("metric and algebra dimensions differ");
  const Matrix<T>& G = g.gram();
  // h(i, j) = G [e_i, e_j] as a covector, so <[e_i, e_j], e_k> = h(i, j)[k].
  std::vector<Vec<T>> h(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h[static_cast<std::size_t>(i * n + j)] = G * L.bracket_basis(i, j);
  auto H = [&](int i, int j, int k) -> const T& { return h[static_cast<std::size_t>(i * n + j)][static_cast<std::size_t>(k)]; };
  n_.assign(static_cast<std::size_t>(n), Matrix<T>(n, n));
  const T half = T(1) / T(2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec<T> b = zero_vec<T>(n);
      for (int k = 0; k < n; ++k) b[static_cast<std::size_t>(k)] = half * (H(i, j, k) - H(j, k, i) + H(k, i, j));
      n_[static_cast<std::size_t>(i)].set_col(j, g.inverse() * b);
    }
}

template <class T>
Matrix<T> LeviCivita<T>::nabla(const Vec<T>& x) const {
  const int n = dim();
  Matrix<T> m(n, n);
  for (int i = 0; i < n; ++i)
    if (x[static_cast<std::size_t>(i)] != T(0)) m += x[static_cast<std::size_t>(i)] * n_[static_cast<std::size_t>(i)];
  return m;
}

template <class T>
Curvature<T>::Curvature(const LieAlgebra<T>& L, const LeviCivita<T>& nabla) : n_(L.dim()) {
  r_.reserve(static_cast<std::size_t>(n_ * n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      r_.push_back(commutator(nabla.nabla(i), nabla.nabla(j)) - nabla.nabla(L.bracket_basis(i, j)));
}

template <class T>
bool Curvature<T>::is_zero(const Tolerance& tol) const {
  for (const auto& m : r_)
    if (!m.is_zero(tol)) return false;
  return true;
}

template <class T>
Matrix<T> ricci(const LieAlgebra<T>& L, const Metric<T>& g) {
  LeviCivita<T> nabla(L, g);
  Curvature<T> R(L, nabla);
  const int n = L.dim();
  Matrix<T> ric(n, n);
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) {
      T s(0);
      for (int x = 0; x < n; ++x) s += R(x, y)(x, z);
      ric(y, z) = s;
    }
  return ric;
}

template <class T>
T scalar_curvature(const LieAlgebra<T>& L, const Metric<T>& g) {
  Matrix<T> ric = ricci(L, g);
  T s(0);
  for (int i = 0; i < L.dim(); ++i)
    for (int j = 0; j < L.dim(); ++j) s += g.inverse()(i, j) * ric(i, j);
  return s;
}

template <class T>
bool is_flat(const LieAlgebra<T>& L, const Metric<T>& g) {
  LeviCivita<T> nabla(L, g);
  return Curvature<T>(L, nabla).is_zero(L.tolerance());
}

template <class T>
KForm<T> covariant_derivative(const LeviCivita<T>& nabla, const Vec<T>& x, const KForm<T>& f) {
  return derivation_action(nabla.nabla(x), f);
}

template <class T>
KForm<T> codifferential(const LieAlgebra<T>& L, const Metric<T>& g, const KForm<T>& f) {
  const int n = L.dim();
  if (f.degree() == 0) return KForm<T>::zero(n, 0);
  LeviCivita<T> nabla(L, g);
  KForm<T> r(n, f.degree() - 1);
  for (int b = 0; b < n; ++b) {
    KForm<T> nf = derivation_action(nabla.nabla(b), f);
    if (nf.is_zero()) continue;
    for (int a = 0; a < n; ++a) {
      const T& gab = g.inverse()(a, b);
      if (gab == T(0)) continue;
      r -= gab * interior(unit_vec<T>(n, a), nf);
    }
  }
  return r;
}

template <class T>
bool is_skew(const Matrix<T>& m, const Metric<T>& g, const Tolerance& tol) {
  return (g.gram() * m + m.transpose() * g.gram()).is_zero(tol);
}

template <class T>
bool is_killing(const LieAlgebra<T>& L, const Metric<T>& g, const Vec<T>& x) {
  return is_skew(L.ad(x), g, L.tolerance());
}

#define LCK_INSTANTIATE(T)                                                                  \
  template bool is_positive_definite(const Matrix<T>&, const Tolerance&);                   \
  template class Metric<T>;                                                                 \
  template class LeviCivita<T>;                                                             \
  template class Curvature<T>;                                                              \
  template Matrix<T> ricci(const LieAlgebra<T>&, const Metric<T>&);                         \
  template T scalar_curvature(const LieAlgebra<T>&, const Metric<T>&);                      \
  template bool is_flat(const LieAlgebra<T>&, const Metric<T>&);                            \
  template KForm<T> covariant_derivative(const LeviCivita<T>&, const Vec<T>&, const KForm<T>&); \
  template KForm<T> codifferential(const LieAlgebra<T>&, const Metric<T>&, const KForm<T>&); \
  template bool is_skew(const Matrix<T>&, const Metric<T>&, const Tolerance&);              \
  template bool is_killing(const LieAlgebra<T>&, const Metric<T>&, const Vec<T>&);

LCK_INSTANTIATE(Rational)
LCK_INSTANTIATE(double)

}  // namespace lck
