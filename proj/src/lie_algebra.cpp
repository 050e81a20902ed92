#include "lck/lie_algebra.hpp"

#include "lck/polynomial.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace lck {

template <class T>
LieAlgebra<T>::LieAlgebra(int dim, std::vector<std::string> labels, std::vector<BracketEntry<T>> brackets, Tolerance tol)
    : n_(dim), labels_(std::move(labels)), tol_(tol), defect_(0) {
  if (n_ <= 0) throw std::invalid_argument("Lie algebra dimension must be positive");
  if (labels_.empty())
    for (int i = 0; i < n_; ++i) labels_.push_back("e" + std::to_string(i + 1));
  if (static_cast<int>(labels_.size()) != n_) throw std::invalid_argument("wrong number of basis labels");
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (labels_[static_cast<std::size_t>(i)] == labels_[static_cast<std::size_t>(j)])
        throw std::invalid_argument("duplicate basis label '" + labels_[static_cast<std::size_t>(i)] + "'");
  c_.assign(static_cast<std::size_t>(n_ * n_ * n_), T(0));
  std::vector<bool> seen(static_cast<std::size_t>(n_ * n_), false);
  for (auto& b : brackets) {
    if (b.i < 0 || b.j < 0 || b.i >= n_ || b.j >= n_) throw std::invalid_argument("bracket index out of range");
    if (static_cast<int>(b.coeffs.size()) != n_) throw std::invalid_argument("bracket coefficient vector has wrong length");
    if (b.i == b.j) {
      if (!is_zero_vec(b.coeffs, tol_)) throw std::invalid_argument("[e_i, e_i] must vanish");
      continue;
    }
    if (b.i > b.j) {
      std::swap(b.i, b.j);
      for (auto& x : b.coeffs) x = -x;
    }
    auto key = static_cast<std::size_t>(b.i * n_ + b.j);
    if (seen[key]) throw std::invalid_argument("duplicate bracket entry for (" + labels_[static_cast<std::size_t>(b.i)] + ", " + labels_[static_cast<std::size_t>(b.j)] + ")");
    seen[key] = true;
    if (is_zero_vec(b.coeffs, tol_)) continue;
    for (int k = 0; k < n_; ++k) {
      c_[static_cast<std::size_t>((b.i * n_ + b.j) * n_ + k)] = b.coeffs[static_cast<std::size_t>(k)];
      c_[static_cast<std::size_t>((b.j * n_ + b.i) * n_ + k)] = -b.coeffs[static_cast<std::size_t>(k)];
    }
    brackets_.push_back(std::move(b));
  }
  std::sort(brackets_.begin(), brackets_.end(), [](const auto& a, const auto& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });

  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = j + 1; k < n_; ++k) {
        Vec<T> s = bracket(bracket_basis(i, j), unit_vec<T>(n_, k)) + bracket(bracket_basis(j, k), unit_vec<T>(n_, i)) +
                   bracket(bracket_basis(k, i), unit_vec<T>(n_, j));
        for (const auto& x : s) {
          T a = Field<T>::abs(x);
          if (a > defect_) defect_ = a;
        }
        if (!violation_ && !is_zero_vec(s, tol_)) violation_ = std::array<int, 3>{i, j, k};
      }
}

template <class T>
LieAlgebra<T> LieAlgebra<T>::abelian(int dim, Tolerance tol) {
  return LieAlgebra(dim, {}, {}, tol);
}

template <class T>
Vec<T> LieAlgebra<T>::bracket_basis(int i, int j) const {
  auto first = c_.begin() + (i * n_ + j) * n_;
  return Vec<T>(first, first + n_);
}

template <class T>
Vec<T> LieAlgebra<T>::bracket(const Vec<T>& x, const Vec<T>& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
    throw std::invalid_argument("bracket: dimension mismatch");
  Vec<T> r = zero_vec<T>(n_);
  for (const auto& b : brackets_) {
    T w = x[static_cast<std::size_t>(b.i)] * y[static_cast<std::size_t>(b.j)] - x[static_cast<std::size_t>(b.j)] * y[static_cast<std::size_t>(b.i)];
    if (w == T(0)) continue;
    for (int k = 0; k < n_; ++k) r[static_cast<std::size_t>(k)] += w * b.coeffs[static_cast<std::size_t>(k)];
  }
  return r;
}

template <class T>
Matrix<T> LieAlgebra<T>::ad(const Vec<T>& x) const {
  if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("ad: dimension mismatch");
  Matrix<T> m(n_, n_);
  for (int i = 0; i < n_; ++i) {
    if (x[static_cast<std::size_t>(i)] == T(0)) continue;
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) m(k, j) += x[static_cast<std::size_t>(i)] * c(i, j, k);
  }
  return m;
}

template <class T>
Matrix<T> LieAlgebra<T>::ad_basis(int i) const {
  return ad(unit_vec<T>(n_, i));
}

template <class T>
void LieAlgebra<T>::require_lie() const {
  if (!violation_) return;
  const auto& v = *violation_;
  throw MathError("Jacobi identity fails on (" + labels_[static_cast<std::size_t>(v[0])] + ", " +
                  labels_[static_cast<std::size_t>(v[1])] + ", " + labels_[static_cast<std::size_t>(v[2])] +
                  "), defect " + Field<T>::format(defect_));
}

template <class T>
int LieAlgebra<T>::label_index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::invalid_argument("unknown basis label '" + label + "'");
  return static_cast<int>(it - labels_.begin());
}

// ---- Subspace ----

template <class T>
Subspace<T> Subspace<T>::from_matrix(const Matrix<T>& rows, const Tolerance& tol) {
  Echelon<T> e = rref(rows, tol);
  Matrix<T> b(e.rank(), rows.cols());
  for (int i = 0; i < e.rank(); ++i) b.set_row(i, e.reduced.row(i));
  return Subspace(rows.cols(), std::move(b));
}

template <class T>
Subspace<T> Subspace<T>::span(int ambient, const std::vector<Vec<T>>& vectors, const Tolerance& tol) {
  if (vectors.empty()) return zero(ambient);
  return from_matrix(Matrix<T>::from_rows(vectors, ambient), tol);
}

template <class T>
std::vector<Vec<T>> Subspace<T>::vectors() const {
  std::vector<Vec<T>> v;
  for (int i = 0; i < basis_.rows(); ++i) v.push_back(basis_.row(i));
  return v;
}

template <class T>
bool Subspace<T>::contains(const Vec<T>& v, const Tolerance& tol) const {
  if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("subspace membership: dimension mismatch");
  if (dim() == 0) return is_zero_vec(v, tol);
  return coordinates(basis_, v, tol).has_value();
}

template <class T>
bool Subspace<T>::contains(const Subspace& other, const Tolerance& tol) const {
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i), tol)) return false;
  return true;
}

template <class T>
Subspace<T> Subspace<T>::sum(const Subspace& other, const Tolerance& tol) const {
  auto v = vectors();
  for (auto& w : other.vectors()) v.push_back(std::move(w));
  return span(n_, v, tol);
}

template <class T>
Subspace<T> Subspace<T>::intersect(const Subspace& other, const Tolerance& tol) const {
  if (dim() == 0 || other.dim() == 0) return zero(n_);
  // Solve sum a_i u_i = sum b_j w_j.
  Matrix<T> m(n_, dim() + other.dim());
  for (int i = 0; i < dim(); ++i) m.set_col(i, basis_.row(i));
  for (int j = 0; j < other.dim(); ++j) m.set_col(dim() + j, scaled(T(-1), other.basis_.row(j)));
  Matrix<T> ns = nullspace(m, tol);
  std::vector<Vec<T>> vs;
  for (int r = 0; r < ns.rows(); ++r) {
    Vec<T> v = zero_vec<T>(n_);
    for (int i = 0; i < dim(); ++i) v = axpy(ns(r, i), basis_.row(i), std::move(v));
    vs.push_back(std::move(v));
  }
  return span(n_, vs, tol);
}

template <class T>
Subspace<T> Subspace<T>::orthogonal_complement(const Matrix<T>& gram, const Tolerance& tol) const {
  if (dim() == 0) return full(n_);
  return from_matrix(nullspace(basis_ * gram, tol), tol);
}

template <class T>
Subspace<T> Subspace<T>::image(const Matrix<T>& m, const Tolerance& tol) const {
  std::vector<Vec<T>> vs;
  for (int i = 0; i < dim(); ++i) vs.push_back(m * basis_.row(i));
  return span(m.rows(), vs, tol);
}

// ---- structure ----

template <class T>
Subspace<T> center(const LieAlgebra<T>& L) {
  const int n = L.dim();
  Matrix<T> stacked(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) stacked(i * n + k, j) = L.c(i, j, k);
  return Subspace<T>::from_matrix(nullspace(stacked, L.tolerance()), L.tolerance());
}

template <class T>
Subspace<T> bracket_span(const LieAlgebra<T>& L, const Subspace<T>& U, const Subspace<T>& V) {
  std::vector<Vec<T>> vs;
  for (const auto& u : U.vectors())
    for (const auto& v : V.vectors()) {
      auto b = L.bracket(u, v);
      if (!is_zero_vec(b, L.tolerance())) vs.push_back(std::move(b));
    }
  return Subspace<T>::span(L.dim(), vs, L.tolerance());
}

template <class T>
Subspace<T> commutator_ideal(const LieAlgebra<T>& L) {
  std::vector<Vec<T>> vs;
  for (const auto& b : L.brackets()) vs.push_back(b.coeffs);
  return Subspace<T>::span(L.dim(), vs, L.tolerance());
}

template <class T>
bool is_subalgebra(const LieAlgebra<T>& L, const Subspace<T>& U) {
  return U.contains(bracket_span(L, U, U), L.tolerance());
}

template <class T>
bool is_ideal(const LieAlgebra<T>& L, const Subspace<T>& U) {
  return U.contains(bracket_span(L, Subspace<T>::full(L.dim()), U), L.tolerance());
}

template <class T>
bool is_abelian_subspace(const LieAlgebra<T>& L, const Subspace<T>& U) {
  return bracket_span(L, U, U).dim() == 0;
}

template <class T>
SeriesInfo series(const LieAlgebra<T>& L) {
  SeriesInfo s;
  const int n = L.dim();
  auto full = Subspace<T>::full(n);
  Subspace<T> cur = full;
  s.derived_dims.push_back(n);
  while (true) {
    Subspace<T> next = bracket_span(L, cur, cur);
    if (next.dim() == cur.dim()) break;
    cur = next;
    s.derived_dims.push_back(cur.dim());
  }
  s.is_solvable = cur.dim() == 0;
  if (s.is_solvable) s.derived_length = static_cast<int>(s.derived_dims.size()) - 1;

  cur = full;
  s.lower_central_dims.push_back(n);
  while (true) {
    Subspace<T> next = bracket_span(L, full, cur);
    if (next.dim() == cur.dim()) break;
    cur = next;
    s.lower_central_dims.push_back(cur.dim());
  }
  s.is_nilpotent = cur.dim() == 0;
  if (s.is_nilpotent) s.nilpotency_step = static_cast<int>(s.lower_central_dims.size()) - 1;
  return s;
}

template <class T>
bool is_unimodular(const LieAlgebra<T>& L) {
  for (int i = 0; i < L.dim(); ++i) {
    T tr(0);
    for (int k = 0; k < L.dim(); ++k) tr += L.c(i, k, k);
    if (!near_zero(tr, L.tolerance())) return false;
  }
  return true;
}

std::string fresh_label(const std::vector<std::string>& taken, std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "'";
  return base;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "unknown";
  }
}

namespace {

template <class T>
Verdict real_spectrum(const Matrix<T>& m, const Tolerance& tol) {
  if constexpr (is_exact_v<T>) {
    return all_roots_real(charpoly(m)) ? Verdict::yes : Verdict::no;
  } else {
    auto ev = eigenvalues(m);
    double scale = 1.0, worst = 0.0;
    for (auto z : ev) {
      scale = std::max(scale, std::abs(z));
      worst = std::max(worst, std::fabs(z.imag()));
    }
    if (worst <= std::sqrt(tol.zero_eps) * scale) return Verdict::yes;
    if (worst > 1e-3 * scale) return Verdict::no;
    return Verdict::unknown;
  }
}

}  // namespace

template <class T>
CompleteSolvability is_completely_solvable(const LieAlgebra<T>& L, int sample_count, std::uint64_t seed) {
  L.require_lie();
  if (!series(L).is_solvable) throw MathError("complete solvability requires a solvable algebra");
  CompleteSolvability out{Verdict::yes, "every ad(e_i) has real spectrum"};
  const int n = L.dim();
  for (int i = 0; i < n; ++i) {
    Verdict v = real_spectrum(L.ad_basis(i), L.tolerance());
    if (v == Verdict::no) return {Verdict::no, "ad(" + L.labels()[static_cast<std::size_t>(i)] + ") has a nonreal eigenvalue"};
    if (v == Verdict::unknown) out = {Verdict::unknown, "spectrum of ad(" + L.labels()[static_cast<std::size_t>(i)] + ") is borderline"};
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int s = 0; s < sample_count; ++s) {
    Vec<T> x = zero_vec<T>(n);
    for (auto& c : x) c = T(d(rng));
    if (real_spectrum(L.ad(x), L.tolerance()) == Verdict::no)
      return {Verdict::no, "sampled ad(x) has a nonreal eigenvalue"};
  }
  return out;
}

template <class T>
bool verify_almost_abelian(const LieAlgebra<T>& L, const Subspace<T>& u) {
  if (u.ambient() != L.dim()) throw std::invalid_argument("subspace lives in a different ambient space");
  return u.dim() == L.dim() - 1 && is_abelian_subspace(L, u) && is_ideal(L, u);
}

template <class T>
std::optional<Subspace<T>> find_codim1_abelian_ideal(const LieAlgebra<T>& L) {
  const int n = L.dim();
  if (n == 1) return Subspace<T>::zero(1);
  std::vector<Vec<T>> rows;
  // d(phi) = 0: sum_k phi_k c_ij^k = 0.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<T> r = zero_vec<T>(n);
      for (int k = 0; k < n; ++k) r[static_cast<std::size_t>(k)] = L.c(i, j, k);
      if (!is_zero_vec(r)) rows.push_back(std::move(r));
    }
  // phi wedge beta_k = 0 with beta_k(a, b) = c_ab^k.
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) {
          Vec<T> r = zero_vec<T>(n);
          r[static_cast<std::size_t>(a)] += L.c(b, c, k);
          r[static_cast<std::size_t>(b)] -= L.c(a, c, k);
          r[static_cast<std::size_t>(c)] += L.c(a, b, k);
          if (!is_zero_vec(r)) rows.push_back(std::move(r));
        }
  Matrix<T> sol = rows.empty() ? Matrix<T>::identity(n) : nullspace(Matrix<T>::from_rows(rows, n), L.tolerance());
  if (sol.rows() == 0) return std::nullopt;
  Matrix<T> phi(1, n);
  phi.set_row(0, sol.row(0));
  auto u = Subspace<T>::from_matrix(nullspace(phi, L.tolerance()), L.tolerance());
  if (!verify_almost_abelian(L, u)) throw MathError("internal: codimension-one ideal candidate failed verification");
  return u;
}

template <class T>
Matrix<T> restrict_to(const Matrix<T>& m, const Subspace<T>& U, const Tolerance& tol) {
  const int d = U.dim();
  Matrix<T> r(d, d);
  for (int i = 0; i < d; ++i) {
    auto coords = coordinates(U.basis(), m * U.basis().row(i), tol);
    if (!coords) throw MathError("linear map does not preserve the subspace");
    r.set_col(i, *coords);
  }
  return r;
}

template <class T>
bool is_derivation(const LieAlgebra<T>& L, const Matrix<T>& D) {
  const int n = L.dim();
  if (D.rows() != n || D.cols() != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<T> lhs = D * L.bracket_basis(i, j);
      Vec<T> rhs = L.bracket(D.col(i), unit_vec<T>(n, j)) + L.bracket(unit_vec<T>(n, i), D.col(j));
      if (!is_zero_vec(lhs - rhs, L.tolerance())) return false;
    }
  return true;
}

#define LCK_INSTANTIATE(T)                                                                                \
  template class LieAlgebra<T>;                                                                           \
  template class Subspace<T>;                                                                             \
  template Subspace<T> center(const LieAlgebra<T>&);                                                      \
  template Subspace<T> commutator_ideal(const LieAlgebra<T>&);                                            \
  template Subspace<T> bracket_span(const LieAlgebra<T>&, const Subspace<T>&, const Subspace<T>&);        \
  template bool is_subalgebra(const LieAlgebra<T>&, const Subspace<T>&);                                  \
  template bool is_ideal(const LieAlgebra<T>&, const Subspace<T>&);                                       \
  template bool is_abelian_subspace(const LieAlgebra<T>&, const Subspace<T>&);                            \
  template SeriesInfo series(const LieAlgebra<T>&);                                                       \
  template bool is_unimodular(const LieAlgebra<T>&);                                                      \
  template CompleteSolvability is_completely_solvable(const LieAlgebra<T>&, int, std::uint64_t);          \
  template bool verify_almost_abelian(const LieAlgebra<T>&, const Subspace<T>&);                          \
  template std::optional<Subspace<T>> find_codim1_abelian_ideal(const LieAlgebra<T>&);                    \
  template Matrix<T> restrict_to(const Matrix<T>&, const Subspace<T>&, const Tolerance&);                 \
  template bool is_derivation(const LieAlgebra<T>&, const Matrix<T>&);

LCK_INSTANTIATE(Rational)
LCK_INSTANTIATE(double)

}  // namespace lck
