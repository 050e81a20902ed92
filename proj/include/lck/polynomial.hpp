#ifndef LCK_POLYNOMIAL_HPP
#define LCK_POLYNOMIAL_HPP

#include "lck/numeric.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace lck {

/// Univariate polynomial, coefficients stored from the constant term upward.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(int degree, const T& coeff = T(1)) {
    std::vector<T> c(static_cast<std::size_t>(degree + 1), T(0));
    c.back() = coeff;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : T(0);
  }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  T operator()(const T& x) const {
    T r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (c_.empty()) return {};
    std::vector<T> d = c_;
    T l = c_.back();
    for (auto& x : d) x /= l;
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const T& s, const Polynomial& a) {
    std::vector<T> r = a.c_;
    for (auto& x : r) x *= s;
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; exact over a field.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<T> r = c_;
    int dd = d.degree();
    if (degree() < dd) return {Polynomial(), *this};
    std::vector<T> q(static_cast<std::size_t>(degree() - dd + 1), T(0));
    for (int k = degree() - dd; k >= 0; --k) {
      T f = r[static_cast<std::size_t>(k + dd)] / d.leading();
      q[static_cast<std::size_t>(k)] = f;
      for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(k + j)] -= f * d.c_[static_cast<std::size_t>(j)];
      r[static_cast<std::size_t>(k + dd)] = T(0);
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

using QPoly = Polynomial<Rational>;

/// det(xI - M) by the Faddeev-LeVerrier recursion.
template <class T>
Polynomial<T> charpoly(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("charpoly of non-square matrix");
  const int n = m.rows();
  std::vector<T> c(static_cast<std::size_t>(n + 1), T(0));
  c[static_cast<std::size_t>(n)] = T(1);
  Matrix<T> mk = Matrix<T>::identity(n);
  Matrix<T> ak(n, n);
  for (int k = 1; k <= n; ++k) {
    ak = m * mk;
    T ck = -ak.trace() / T(k);
    c[static_cast<std::size_t>(n - k)] = ck;
    mk = ak;
    for (int i = 0; i < n; ++i) mk(i, i) += ck;
  }
  return Polynomial<T>(std::move(c));
}

QPoly gcd(QPoly a, QPoly b);

/// Product of the distinct irreducible factors (monic).
QPoly squarefree_part(const QPoly& p);

/// Yun decomposition: factors[k] is the product of irreducible factors of multiplicity k+1.
std::vector<QPoly> squarefree_decomposition(const QPoly& p);

/// Number of distinct real roots in (lo, hi]; nullopt bounds mean -inf / +inf.
int count_real_roots(const QPoly& p, std::optional<Rational> lo = std::nullopt, std::optional<Rational> hi = std::nullopt);

/// True iff every complex root of p is real.
bool all_roots_real(const QPoly& p);

/// True iff every root of p lies on the imaginary axis.
bool all_roots_imaginary(const QPoly& p);

/// All complex roots with multiplicity (companion eigenvalues plus Aberth polishing).
std::vector<std::complex<double>> roots(const std::vector<double>& coeffs_low_to_high);

template <class T>
std::vector<std::complex<double>> roots(const Polynomial<T>& p) {
  std::vector<double> c;
  for (const auto& x : p.coeffs()) c.push_back(Field<T>::to_double(x));
  return roots(c);
}

/// Complex eigenvalues of a real square matrix.
std::vector<std::complex<double>> eigenvalues(const Matrix<double>& m);

}  // namespace lck

#endif  // LCK_POLYNOMIAL_HPP
