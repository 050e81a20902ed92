#ifndef LCK_EXTERIOR_HPP
#define LCK_EXTERIOR_HPP

#include "lck/lie_algebra.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lck {

using IndexMask = std::uint32_t;
constexpr int max_form_dim = 16;

/// Enumeration of k-subsets of {0, ..., n-1} in lexicographic tuple order.
class FormBasis {
 public:
  static const FormBasis& get(int n);

  int dim() const { return n_; }
  int count(int k) const { return static_cast<int>(masks_[static_cast<std::size_t>(k)].size()); }
  IndexMask mask(int k, int idx) const { return masks_[static_cast<std::size_t>(k)][static_cast<std::size_t>(idx)]; }
  int index(IndexMask m) const { return index_[m]; }

 private:
  explicit FormBasis(int n);
  int n_;
  std::vector<std::vector<IndexMask>> masks_;
  std::vector<int> index_;
};

std::vector<int> mask_indices(IndexMask m);
IndexMask indices_mask(const std::vector<int>& idx);
/// Sign of e^a wedge e^b for disjoint masks, relative to the sorted product.
int wedge_sign(IndexMask a, IndexMask b);

/// Alternating k-form on T^n with coefficients on increasing index tuples.
template <class T>
class KForm {
 public:
  KForm() = default;
  KForm(int n, int k);

  static KForm zero(int n, int k) { return KForm(n, k); }
  static KForm scalar(int n, const T& c);
  static KForm basis_covector(int n, int i);
  static KForm from_covector(const Vec<T>& v);
  /// Terms on arbitrary (unsorted) index tuples; repeated indices contribute nothing.
  static KForm from_terms(int n, int k, const std::vector<std::pair<std::vector<int>, T>>& terms);
  /// sum_{i<j} M_ij e^i ^ e^j
  static KForm from_matrix(const Matrix<T>& m);

  int dim() const { return n_; }
  int degree() const { return k_; }
  const Vec<T>& coeffs() const { return c_; }
  Vec<T>& coeffs() { return c_; }
  const T& coeff_at(int idx) const { return c_[static_cast<std::size_t>(idx)]; }
  T coeff(const std::vector<int>& tuple) const;
  /// Covector coefficients of a 1-form.
  Vec<T> covector() const;
  /// Antisymmetric matrix of a 2-form, M_ij = f(e_i, e_j).
  Matrix<T> matrix() const;

  /// f(v_1, ..., v_k) with the determinant convention.
  T evaluate(const std::vector<Vec<T>>& vectors) const;

  bool is_zero(const Tolerance& tol = {}) const { return is_zero_vec(c_, tol); }
  std::vector<std::pair<std::vector<int>, T>> terms(const Tolerance& tol = {}) const;
  std::string to_string(const std::vector<std::string>& labels, const Tolerance& tol = {}) const;

  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  KForm& operator*=(const T& s);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(const T& s, KForm a) { return a *= s; }
  KForm operator-() const { return T(-1) * *this; }

 private:
  void check_compatible(const KForm& o) const;
  int n_ = 0;
  int k_ = 0;
  Vec<T> c_;
};

template <class T>
bool approx_equal(const KForm<T>& a, const KForm<T>& b, const Tolerance& tol = {}) {
  return a.dim() == b.dim() && a.degree() == b.degree() && (a - b).is_zero(tol);
}

template <class T>
KForm<T> wedge(const KForm<T>& a, const KForm<T>& b);

template <class T>
KForm<T> wedge_power(const KForm<T>& a, int m);

/// Interior product: (i_v f)(x_1, ...) = f(v, x_1, ...).
template <class T>
KForm<T> interior(const Vec<T>& v, const KForm<T>& f);

/// Derivation extension of an endomorphism E: (rho(E) f)(y_1, ..., y_k) = -sum_j f(..., E y_j, ...).
template <class T>
KForm<T> derivation_action(const Matrix<T>& e, const KForm<T>& f);

/// Chevalley-Eilenberg differential, with d(alpha)(x, y) = -alpha([x, y]) on 1-forms.
template <class T>
KForm<T> d(const LieAlgebra<T>& L, const KForm<T>& f);

/// d_theta f = d f - theta ^ f. Throws MathError when theta is not closed.
template <class T>
KForm<T> d_twisted(const LieAlgebra<T>& L, const KForm<T>& theta, const KForm<T>& f);

/// Matrix of d: Lambda^k -> Lambda^{k+1} in the lexicographic bases (columns are inputs).
template <class T>
Matrix<T> differential_matrix(const LieAlgebra<T>& L, int k);

template <class T>
Matrix<T> twisted_differential_matrix(const LieAlgebra<T>& L, const KForm<T>& theta, int k);

template <class T>
std::vector<int> betti(const LieAlgebra<T>& L);

template <class T>
std::vector<int> twisted_betti(const LieAlgebra<T>& L, const KForm<T>& theta);

template <class T>
bool is_nondegenerate(const KForm<T>& omega, const Tolerance& tol = {});

/// Complex-valued form as a pair of real forms.
template <class T>
struct ComplexForm {
  KForm<T> re;
  KForm<T> im;

  static ComplexForm real(KForm<T> r) {
    KForm<T> z = KForm<T>::zero(r.dim(), r.degree());
    return {std::move(r), std::move(z)};
  }
  int dim() const { return re.dim(); }
  int degree() const { return re.degree(); }
  bool is_zero(const Tolerance& tol = {}) const { return re.is_zero(tol) && im.is_zero(tol); }
};

template <class T>
ComplexForm<T> wedge(const ComplexForm<T>& a, const ComplexForm<T>& b) {
  return {wedge(a.re, b.re) - wedge(a.im, b.im), wedge(a.re, b.im) + wedge(a.im, b.re)};
}

template <class T>
ComplexForm<T> d(const LieAlgebra<T>& L, const ComplexForm<T>& f) {
  return {d(L, f.re), d(L, f.im)};
}

}  // namespace lck

#endif  // LCK_EXTERIOR_HPP
