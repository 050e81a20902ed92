#ifndef LCK_RIEMANNIAN_HPP
#define LCK_RIEMANNIAN_HPP

#include "lck/exterior.hpp"

#include <vector>

namespace lck {

/// Inner product given by a symmetric positive definite Gram matrix.
template <class T>
class Metric {
 public:
  Metric(Matrix<T> gram, const Tolerance& tol = {});
  static Metric identity(int n) { return Metric(Matrix<T>::identity(n)); }

  int dim() const { return g_.rows(); }
  const Matrix<T>& gram() const { return g_; }
  const Matrix<T>& inverse() const { return ginv_; }

  T inner(const Vec<T>& x, const Vec<T>& y) const { return dot(x, g_ * y); }
  T norm2(const Vec<T>& x) const { return inner(x, x); }
  /// Covector g(x, .)
  Vec<T> flat(const Vec<T>& x) const { return g_ * x; }
  /// Vector dual to a covector.
  Vec<T> sharp(const Vec<T>& phi) const { return ginv_ * phi; }

 private:
  Matrix<T> g_;
  Matrix<T> ginv_;
};

/// True iff symmetric with all leading principal pivots positive.
template <class T>
bool is_positive_definite(const Matrix<T>& g, const Tolerance& tol = {});

/// Levi-Civita connection of a left-invariant metric: nabla(i) is the matrix of nabla_{e_i}.
template <class T>
class LeviCivita {
 public:
  LeviCivita(const LieAlgebra<T>& L, const Metric<T>& g);

  int dim() const { return static_cast<int>(n_.size()); }
  const Matrix<T>& nabla(int i) const { return n_[static_cast<std::size_t>(i)]; }
  Matrix<T> nabla(const Vec<T>& x) const;
  Vec<T> covariant(const Vec<T>& x, const Vec<T>& y) const { return nabla(x) * y; }

 private:
  std::vector<Matrix<T>> n_;
};

/// R(e_i, e_j) = [nabla_i, nabla_j] - nabla_{[e_i, e_j]}
template <class T>
class Curvature {
 public:
  Curvature(const LieAlgebra<T>& L, const LeviCivita<T>& nabla);
  const Matrix<T>& operator()(int i, int j) const { return r_[static_cast<std::size_t>(i * n_ + j)]; }
  int dim() const { return n_; }
  bool is_zero(const Tolerance& tol = {}) const;

 private:
  int n_;
  std::vector<Matrix<T>> r_;
};

template <class T>
Matrix<T> ricci(const LieAlgebra<T>& L, const Metric<T>& g);

template <class T>
T scalar_curvature(const LieAlgebra<T>& L, const Metric<T>& g);

template <class T>
bool is_flat(const LieAlgebra<T>& L, const Metric<T>& g);

/// Covariant derivative of a form: (nabla_x f)(y_1, ...) = -sum_j f(..., nabla_x y_j, ...).
template <class T>
KForm<T> covariant_derivative(const LeviCivita<T>& nabla, const Vec<T>& x, const KForm<T>& f);

/// delta f = -sum_{a,b} g^{ab} i(e_a) nabla_{e_b} f
template <class T>
KForm<T> codifferential(const LieAlgebra<T>& L, const Metric<T>& g, const KForm<T>& f);

/// G ad(x) + ad(x)^T G == 0
template <class T>
bool is_killing(const LieAlgebra<T>& L, const Metric<T>& g, const Vec<T>& x);

/// g-skew: G M + M^T G == 0
template <class T>
bool is_skew(const Matrix<T>& m, const Metric<T>& g, const Tolerance& tol = {});

}  // namespace lck

#endif  // LCK_RIEMANNIAN_HPP
