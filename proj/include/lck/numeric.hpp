#ifndef LCK_NUMERIC_HPP
#define LCK_NUMERIC_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace lck {

using Rational = mpq_class;

enum class ScalarMode { exact, approx };

/// Zero and integrality thresholds for approximate arithmetic. Ignored in exact mode.
struct Tolerance {
  double zero_eps = 1e-9;
  double integrality_eps = 1e-6;

  void validate() const {
    if (!(zero_eps > 0.0) || !(integrality_eps > 0.0))
      throw std::invalid_argument("tolerances must be strictly positive");
  }
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical check or precondition failed (invalid structure, missing property).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonicalized p/q.
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text);
double parse_double(std::string_view text);
std::string format_rational(const Rational& x);
std::string format_double(double x);

/// Per-scalar-type policy. Exact mode compares with zero literally; approx mode
/// uses Tolerance::zero_eps.
template <class T>
struct Field;

template <>
struct Field<Rational> {
  static constexpr ScalarMode mode = ScalarMode::exact;
  static bool is_zero(const Rational& x, const Tolerance&) { return sgn(x) == 0; }
  static Rational abs(const Rational& x) { return ::abs(x); }
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational from_int(long v) { return Rational(v); }
  static Rational from_rational(const Rational& q) { return q; }
  static Rational parse(std::string_view s) { return parse_rational(s); }
  static std::string format(const Rational& x) { return format_rational(x); }
};

template <>
struct Field<double> {
  static constexpr ScalarMode mode = ScalarMode::approx;
  static bool is_zero(double x, const Tolerance& tol) { return std::fabs(x) <= tol.zero_eps; }
  static double abs(double x) { return std::fabs(x); }
  static double to_double(double x) { return x; }
  static double from_int(long v) { return static_cast<double>(v); }
  static double from_rational(const Rational& q) { return q.get_d(); }
  static double parse(std::string_view s) { return parse_double(s); }
  static std::string format(double x) { return format_double(x); }
};

template <class T>
constexpr bool is_exact_v = Field<T>::mode == ScalarMode::exact;

template <class T>
bool near_zero(const T& x, const Tolerance& tol = {}) {
  return Field<T>::is_zero(x, tol);
}

template <class T>
using Vec = std::vector<T>;

template <class T>
Vec<T> zero_vec(int n) {
  return Vec<T>(static_cast<std::size_t>(n), T(0));
}

template <class T>
Vec<T> unit_vec(int n, int i) {
  Vec<T> v = zero_vec<T>(n);
  v[static_cast<std::size_t>(i)] = T(1);
  return v;
}

template <class T>
bool is_zero_vec(const Vec<T>& v, const Tolerance& tol = {}) {
  for (const auto& x : v)
    if (!near_zero(x, tol)) return false;
  return true;
}

template <class T>
Vec<T> axpy(const std::type_identity_t<T>& a, const Vec<T>& x, Vec<T> y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
  return y;
}

template <class T>
Vec<T> operator+(Vec<T> a, const Vec<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class T>
Vec<T> operator-(Vec<T> a, const Vec<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class T>
Vec<T> scaled(const std::type_identity_t<T>& s, Vec<T> a) {
  for (auto& x : a) x *= s;
  return a;
}

template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class T>
Vec<double> to_double(const Vec<T>& v) {
  Vec<double> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Field<T>::to_double(v[i]);
  return r;
}

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), T(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<T>>& rows, int cols = -1) {
    int c = cols >= 0 ? cols : (rows.empty() ? 0 : static_cast<int>(rows.front().size()));
    Matrix m(static_cast<int>(rows.size()), c);
    for (int i = 0; i < m.rows_; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
        throw std::invalid_argument("ragged matrix rows");
      for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<Vec<T>>& cols, int rows) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j)
      for (int i = 0; i < rows; ++i) m(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  Vec<T> row(int i) const {
    return Vec<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  Vec<T> col(int j) const {
    Vec<T> c(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, j);
    return c;
  }
  void set_row(int i, const Vec<T>& v) {
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = v[static_cast<std::size_t>(j)];
  }
  void set_col(int j, const Vec<T>& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[static_cast<std::size_t>(i)];
  }
  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    T s(0);
    for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  Vec<T> operator*(const Vec<T>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vec<T> r = zero_vec<T>(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  bool is_zero(const Tolerance& tol = {}) const {
    for (const auto& x : data_)
      if (!near_zero(x, tol)) return false;
    return true;
  }

  Matrix<double> to_double() const {
    Matrix<double> r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = Field<T>::to_double((*this)(i, j));
    return r;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

template <class T>
bool approx_equal(const Matrix<T>& a, const Matrix<T>& b, const Tolerance& tol = {}) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).is_zero(tol);
}

template <class T>
T max_abs(const Matrix<T>& m) {
  T best(0);
  for (const auto& x : m.data()) {
    T a = Field<T>::abs(x);
    if (a > best) best = a;
  }
  return best;
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

/// Reduced row echelon form with pivot columns.
template <class T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<int> pivots;
  int rank() const { return static_cast<int>(pivots.size()); }
};

/// Gauss-Jordan elimination. In approx mode pivots are chosen by magnitude and
/// anything below zero_eps relative to the largest entry is treated as zero.
template <class T>
Echelon<T> rref(Matrix<T> m, const Tolerance& tol = {}) {
  Echelon<T> out;
  const int rows = m.rows(), cols = m.cols();
  double scale = 1.0;
  if constexpr (!is_exact_v<T>) {
    scale = std::max(1.0, Field<T>::to_double(max_abs(m)));
  }
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    if constexpr (is_exact_v<T>) {
      for (int i = r; i < rows; ++i)
        if (sgn(m(i, c)) != 0) {
          piv = i;
          break;
        }
    } else {
      double best = tol.zero_eps * scale;
      for (int i = r; i < rows; ++i)
        if (std::fabs(m(i, c)) > best) {
          best = std::fabs(m(i, c));
          piv = i;
        }
    }
    if (piv < 0) {
      if constexpr (!is_exact_v<T>)
        for (int i = r; i < rows; ++i) m(i, c) = 0.0;
      continue;
    }
    m.swap_rows(r, piv);
    T inv = T(1) / m(r, c);
    for (int j = c; j < cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      T f = m(i, c);
      if (f == T(0)) continue;
      for (int j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
      if constexpr (!is_exact_v<T>) m(i, c) = 0.0;
    }
    out.pivots.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = T(0);
  out.reduced = std::move(m);
  return out;
}

int bareiss_rank(std::vector<std::vector<mpz_class>> rows);

/// Row rank. Exact mode clears denominators row by row and runs fraction-free
/// (Bareiss) elimination over the integers; approx mode uses scaled partial
/// pivoting with a pivot threshold of zero_eps relative to the largest pivot.
template <class T>
int rank(const Matrix<T>& m, const Tolerance& tol = {}) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if constexpr (is_exact_v<T>) {
    std::vector<std::vector<mpz_class>> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) {
      mpz_class lcm = 1;
      bool any = false;
      for (int j = 0; j < m.cols(); ++j)
        if (sgn(m(i, j)) != 0) {
          any = true;
          mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
        }
      if (!any) continue;
      std::vector<mpz_class> row(static_cast<std::size_t>(m.cols()));
      for (int j = 0; j < m.cols(); ++j) {
        const Rational& q = m(i, j);
        row[static_cast<std::size_t>(j)] = q.get_num() * (lcm / q.get_den());
      }
      rows.push_back(std::move(row));
    }
    return bareiss_rank(std::move(rows));
  } else {
    const int rows = m.rows(), cols = m.cols();
    Matrix<double> a = m.to_double();
    // Row scaling factors for scaled partial pivoting.
    std::vector<double> s(static_cast<std::size_t>(rows), 0.0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) s[static_cast<std::size_t>(i)] = std::max(s[static_cast<std::size_t>(i)], std::fabs(a(i, j)));
    int r = 0;
    double largest_pivot = 0.0;
    for (int c = 0; c < cols && r < rows; ++c) {
      int piv = -1;
      double best = 0.0;
      const double floor = tol.zero_eps * std::max(largest_pivot, 1.0);
      for (int i = r; i < rows; ++i) {
        double ai = std::fabs(a(i, c));
        if (ai <= floor) continue;
        double v = ai / s[static_cast<std::size_t>(i)];
        if (v > best) {
          best = v;
          piv = i;
        }
      }
      if (piv < 0) continue;
      largest_pivot = std::max(largest_pivot, std::fabs(a(piv, c)));
      a.swap_rows(r, piv);
      std::swap(s[static_cast<std::size_t>(r)], s[static_cast<std::size_t>(piv)]);
      for (int i = r + 1; i < rows; ++i) {
        double f = a(i, c) / a(r, c);
        if (f == 0.0) continue;
        for (int j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        a(i, c) = 0.0;
      }
      ++r;
    }
    return r;
  }
}

/// Basis of {x : M x = 0}, one vector per row of the result.
template <class T>
Matrix<T> nullspace(const Matrix<T>& m, const Tolerance& tol = {}) {
  const int cols = m.cols();
  Echelon<T> e = rref(m, tol);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vec<T>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec<T> v = zero_vec<T>(cols);
    v[static_cast<std::size_t>(f)] = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[static_cast<std::size_t>(e.pivots[r])] = -e.reduced(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return Matrix<T>::from_rows(basis, cols);
}

/// Some solution of A x = b, or nullopt when the system is inconsistent.
template <class T>
std::optional<Vec<T>> solve(const Matrix<T>& a, const Vec<T>& b, const Tolerance& tol = {}) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[static_cast<std::size_t>(i)];
  }
  Echelon<T> e = rref(aug, tol);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec<T> x = zero_vec<T>(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    x[static_cast<std::size_t>(e.pivots[r])] = e.reduced(static_cast<int>(r), a.cols());
  if constexpr (!is_exact_v<T>) {
    Vec<T> res = a * x - b;
    double bn = 1.0;
    for (const auto& v : b) bn = std::max(bn, std::fabs(v));
    for (const auto& v : res)
      if (std::fabs(v) > 1e3 * tol.zero_eps * bn) return std::nullopt;
  }
  return x;
}

template <class T>
T determinant(Matrix<T> m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  T det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    if constexpr (is_exact_v<T>) {
      for (int i = c; i < n; ++i)
        if (sgn(m(i, c)) != 0) {
          piv = i;
          break;
        }
    } else {
      double best = 0.0;
      for (int i = c; i < n; ++i)
        if (std::fabs(m(i, c)) > best) {
          best = std::fabs(m(i, c));
          piv = i;
        }
    }
    if (piv < 0 || m(piv, c) == T(0)) return T(0);
    if (piv != c) {
      m.swap_rows(piv, c);
      det = -det;
    }
    det *= m(c, c);
    for (int i = c + 1; i < n; ++i) {
      T f = m(i, c) / m(c, c);
      if (f == T(0)) continue;
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m, const Tolerance& tol = {}) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  Echelon<T> e = rref(aug, tol);
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Coordinates of v in the basis given by the rows of `basis`, if v lies in their span.
template <class T>
std::optional<Vec<T>> coordinates(const Matrix<T>& basis, const Vec<T>& v, const Tolerance& tol = {}) {
  return solve(basis.transpose(), v, tol);
}

}  // namespace lck

#endif  // LCK_NUMERIC_HPP
