#include "lck/exterior.hpp"

#include <array>
#include <bit>
#include <cctype>
#include <memory>
#include <mutex>
#include <sstream>

namespace lck {

// ---- index bookkeeping ----

namespace {

void enumerate(int n, int k, int start, IndexMask cur, std::vector<IndexMask>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n - k; ++i) enumerate(n, k - 1, i + 1, cur | (IndexMask{1} << i), out);
}

int parity(int x) { return (x & 1) ? -1 : 1; }

// Number of indices in m strictly below i.
int count_below(IndexMask m, int i) { return std::popcount(m & ((IndexMask{1} << i) - 1)); }

}  // namespace

FormBasis::FormBasis(int n) : n_(n), masks_(static_cast<std::size_t>(n + 1)), index_(std::size_t{1} << n, -1) {
  for (int k = 0; k <= n; ++k) {
    auto& v = masks_[static_cast<std::size_t>(k)];
    enumerate(n, k, 0, 0, v);
    for (std::size_t i = 0; i < v.size(); ++i) index_[v[i]] = static_cast<int>(i);
  }
}

const FormBasis& FormBasis::get(int n) {
  if (n < 0 || n > max_form_dim) throw std::invalid_argument("exterior algebra supports dimension at most 16");
  static std::array<std::once_flag, max_form_dim + 1> flags;
  static std::array<std::unique_ptr<FormBasis>, max_form_dim + 1> tables;
  std::call_once(flags[static_cast<std::size_t>(n)], [n] { tables[static_cast<std::size_t>(n)].reset(new FormBasis(n)); });
  return *tables[static_cast<std::size_t>(n)];
}

std::vector<int> mask_indices(IndexMask m) {
  std::vector<int> v;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) v.push_back(i);
  return v;
}

IndexMask indices_mask(const std::vector<int>& idx) {
  IndexMask m = 0;
  for (int i : idx) m |= IndexMask{1} << i;
  return m;
}

int wedge_sign(IndexMask a, IndexMask b) {
  int inversions = 0;
  for (IndexMask bb = b; bb; bb &= bb - 1) {
    int j = std::countr_zero(bb);
    inversions += std::popcount(a >> (j + 1));
  }
  return parity(inversions);
}

namespace {

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

}  // namespace

// ---- KForm ----

template <class T>
KForm<T>::KForm(int n, int k) : n_(n), k_(k) {
  if (n < 0 || n > max_form_dim) throw std::invalid_argument("exterior algebra supports dimension at most 16");
  if (k < 0 || k > n) throw std::invalid_argument("form degree out of range");
  c_.assign(static_cast<std::size_t>(binomial(n, k)), T(0));
}

template <class T>
KForm<T> KForm<T>::scalar(int n, const T& c) {
  KForm f(n, 0);
  f.c_[0] = c;
  return f;
}

template <class T>
KForm<T> KForm<T>::basis_covector(int n, int i) {
  KForm f(n, 1);
  f.c_[static_cast<std::size_t>(i)] = T(1);
  return f;
}

template <class T>
KForm<T> KForm<T>::from_covector(const Vec<T>& v) {
  KForm f(static_cast<int>(v.size()), 1);
  f.c_ = v;
  return f;
}

template <class T>
KForm<T> KForm<T>::from_terms(int n, int k, const std::vector<std::pair<std::vector<int>, T>>& terms) {
  KForm f(n, k);
  const auto& fb = FormBasis::get(n);
  for (const auto& [idx, c] : terms) {
    if (static_cast<int>(idx.size()) != k) throw std::invalid_argument("form term has wrong degree");
    IndexMask m = 0;
    int sign = 1;
    bool repeated = false;
    for (int i : idx) {
      if (i < 0 || i >= n) throw std::invalid_argument("form index out of range");
      IndexMask bit = IndexMask{1} << i;
      if (m & bit) {
        repeated = true;
        break;
      }
      sign *= parity(std::popcount(m >> (i + 1)));
      m |= bit;
    }
    if (repeated) continue;
    f.c_[static_cast<std::size_t>(fb.index(m))] += sign > 0 ? c : T(-c);
  }
  return f;
}

template <class T>
KForm<T> KForm<T>::from_matrix(const Matrix<T>& m) {
  KForm f(m.rows(), 2);
  const auto& fb = FormBasis::get(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.rows(); ++j) f.c_[static_cast<std::size_t>(fb.index((IndexMask{1} << i) | (IndexMask{1} << j)))] = m(i, j);
  return f;
}

template <class T>
T KForm<T>::coeff(const std::vector<int>& tuple) const {
  return evaluate([&] {
    std::vector<Vec<T>> vs;
    for (int i : tuple) vs.push_back(unit_vec<T>(n_, i));
    return vs;
  }());
}

template <class T>
Vec<T> KForm<T>::covector() const {
  if (k_ != 1) throw std::invalid_argument("covector() needs a 1-form");
  return c_;
}

template <class T>
Matrix<T> KForm<T>::matrix() const {
  if (k_ != 2) throw std::invalid_argument("matrix() needs a 2-form");
  Matrix<T> m(n_, n_);
  const auto& fb = FormBasis::get(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const T& v = c_[static_cast<std::size_t>(fb.index((IndexMask{1} << i) | (IndexMask{1} << j)))];
      m(i, j) = v;
      m(j, i) = -v;
    }
  return m;
}

template <class T>
T KForm<T>::evaluate(const std::vector<Vec<T>>& vectors) const {
  if (static_cast<int>(vectors.size()) != k_) throw std::invalid_argument("form evaluated on wrong number of vectors");
  if (k_ == 0) return c_[0];
  const auto& fb = FormBasis::get(n_);
  T total(0);
  for (int idx = 0; idx < static_cast<int>(c_.size()); ++idx) {
    if (c_[static_cast<std::size_t>(idx)] == T(0)) continue;
    auto rows = mask_indices(fb.mask(k_, idx));
    Matrix<T> sub(k_, k_);
    for (int a = 0; a < k_; ++a)
      for (int b = 0; b < k_; ++b) sub(a, b) = vectors[static_cast<std::size_t>(b)][static_cast<std::size_t>(rows[static_cast<std::size_t>(a)])];
    total += c_[static_cast<std::size_t>(idx)] * determinant(sub);
  }
  return total;
}

template <class T>
std::vector<std::pair<std::vector<int>, T>> KForm<T>::terms(const Tolerance& tol) const {
  std::vector<std::pair<std::vector<int>, T>> out;
  const auto& fb = FormBasis::get(n_);
  for (int idx = 0; idx < static_cast<int>(c_.size()); ++idx)
    if (!near_zero(c_[static_cast<std::size_t>(idx)], tol)) out.emplace_back(mask_indices(fb.mask(k_, idx)), c_[static_cast<std::size_t>(idx)]);
  return out;
}

template <class T>
std::string KForm<T>::to_string(const std::vector<std::string>& labels, const Tolerance& tol) const {
  auto ts = terms(tol);
  if (ts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : ts) {
    std::string cs = Field<T>::format(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (idx.empty()) {
      os << cs;
      continue;
    }
    if (cs != "1") os << cs << " ";
    for (std::size_t p = 0; p < idx.size(); ++p) {
      if (p) os << "^";
      std::string l = labels.at(static_cast<std::size_t>(idx[p]));
      for (auto& ch : l) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      os << l;
    }
  }
  return os.str();
}

template <class T>
void KForm<T>::check_compatible(const KForm& o) const {
  if (n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("forms of different dimension or degree");
}

template <class T>
KForm<T>& KForm<T>::operator+=(const KForm& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

template <class T>
KForm<T>& KForm<T>::operator-=(const KForm& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

template <class T>
KForm<T>& KForm<T>::operator*=(const T& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

// ---- operations ----

template <class T>
KForm<T> wedge(const KForm<T>& a, const KForm<T>& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge of forms on different spaces");
  const int n = a.dim(), k = a.degree() + b.degree();
  if (k > n) return KForm<T>::zero(n, n);
  KForm<T> r(n, k);
  const auto& fb = FormBasis::get(n);
  for (int i = 0; i < static_cast<int>(a.coeffs().size()); ++i) {
    const T& ca = a.coeff_at(i);
    if (ca == T(0)) continue;
    IndexMask ma = fb.mask(a.degree(), i);
    for (int j = 0; j < static_cast<int>(b.coeffs().size()); ++j) {
      const T& cb = b.coeff_at(j);
      if (cb == T(0)) continue;
      IndexMask mb = fb.mask(b.degree(), j);
      if (ma & mb) continue;
      T v = ca * cb;
      auto& slot = r.coeffs()[static_cast<std::size_t>(fb.index(ma | mb))];
      if (wedge_sign(ma, mb) > 0)
        slot += v;
      else
        slot -= v;
    }
  }
  return r;
}

template <class T>
KForm<T> wedge_power(const KForm<T>& a, int m) {
  if (m < 0) throw std::invalid_argument("negative wedge power");
  KForm<T> r = KForm<T>::scalar(a.dim(), T(1));
  for (int i = 0; i < m; ++i) r = wedge(r, a);
  return r;
}

template <class T>
KForm<T> interior(const Vec<T>& v, const KForm<T>& f) {
  const int n = f.dim(), k = f.degree();
  if (static_cast<int>(v.size()) != n) throw std::invalid_argument("interior product: dimension mismatch");
  if (k == 0) throw std::invalid_argument("interior product of a 0-form");
  KForm<T> r(n, k - 1);
  const auto& fb = FormBasis::get(n);
  for (int idx = 0; idx < static_cast<int>(f.coeffs().size()); ++idx) {
    const T& c = f.coeff_at(idx);
    if (c == T(0)) continue;
    IndexMask m = fb.mask(k, idx);
    for (IndexMask mm = m; mm; mm &= mm - 1) {
      int a = std::countr_zero(mm);
      const T& va = v[static_cast<std::size_t>(a)];
      if (va == T(0)) continue;
      T term = c * va;
      auto& slot = r.coeffs()[static_cast<std::size_t>(fb.index(m & ~(IndexMask{1} << a)))];
      if (count_below(m, a) % 2 == 0)
        slot += term;
      else
        slot -= term;
    }
  }
  return r;
}

template <class T>
KForm<T> derivation_action(const Matrix<T>& e, const KForm<T>& f) {
  const int n = f.dim(), k = f.degree();
  if (e.rows() != n || e.cols() != n) throw std::invalid_argument("derivation action: dimension mismatch");
  KForm<T> r(n, k);
  const auto& fb = FormBasis::get(n);
  for (int idx = 0; idx < static_cast<int>(f.coeffs().size()); ++idx) {
    const T& c = f.coeff_at(idx);
    if (c == T(0)) continue;
    IndexMask m = fb.mask(k, idx);
    int p = 0;
    for (IndexMask mm = m; mm; mm &= mm - 1, ++p) {
      int ip = std::countr_zero(mm);
      IndexMask rest = m & ~(IndexMask{1} << ip);
      // rho(E) e^{ip} = -sum_j E_{ip j} e^j placed at position p.
      for (int j = 0; j < n; ++j) {
        const T& ej = e(ip, j);
        if (ej == T(0)) continue;
        IndexMask bit = IndexMask{1} << j;
        if (rest & bit) continue;
        int sign = parity(p + count_below(rest, j));
        T term = c * ej;
        auto& slot = r.coeffs()[static_cast<std::size_t>(fb.index(rest | bit))];
        if (sign > 0)
          slot -= term;
        else
          slot += term;
      }
    }
  }
  return r;
}

namespace {

template <class T>
struct DTable {
  // de^k = sum over (a, b, c) of -c e^a ^ e^b
  std::vector<std::vector<std::pair<IndexMask, T>>> terms;
};

template <class T>
DTable<T> make_dtable(const LieAlgebra<T>& L) {
  DTable<T> t;
  t.terms.resize(static_cast<std::size_t>(L.dim()));
  for (const auto& b : L.brackets())
    for (int k = 0; k < L.dim(); ++k) {
      const T& c = b.coeffs[static_cast<std::size_t>(k)];
      if (c == T(0)) continue;
      t.terms[static_cast<std::size_t>(k)].emplace_back((IndexMask{1} << b.i) | (IndexMask{1} << b.j), T(-c));
    }
  return t;
}

// Adds coeff * d(e^I) into out.
template <class T>
void add_d_basis(const DTable<T>& t, const FormBasis& fb, IndexMask m, const T& coeff, Vec<T>& out) {
  int p = 0;
  for (IndexMask mm = m; mm; mm &= mm - 1, ++p) {
    int ip = std::countr_zero(mm);
    IndexMask rest = m & ~(IndexMask{1} << ip);
    for (const auto& [ab, c] : t.terms[static_cast<std::size_t>(ip)]) {
      if (ab & rest) continue;
      int sign = parity(p) * wedge_sign(ab, rest);
      T v = coeff * c;
      auto& slot = out[static_cast<std::size_t>(fb.index(ab | rest))];
      if (sign > 0)
        slot += v;
      else
        slot -= v;
    }
  }
}

template <class T>
void require_closed(const LieAlgebra<T>& L, const KForm<T>& theta) {
  if (theta.degree() != 1 || theta.dim() != L.dim()) throw std::invalid_argument("twisting form must be a 1-form on the algebra");
  if (!d(L, theta).is_zero(L.tolerance())) throw MathError("twisting 1-form is not closed");
}

}  // namespace

template <class T>
KForm<T> d(const LieAlgebra<T>& L, const KForm<T>& f) {
  const int n = L.dim(), k = f.degree();
  if (f.dim() != n) throw std::invalid_argument("form and algebra dimensions differ");
  if (k == n) return KForm<T>::zero(n, n);
  KForm<T> r(n, k + 1);
  if (k == 0) return r;
  const auto& fb = FormBasis::get(n);
  auto t = make_dtable(L);
  for (int idx = 0; idx < static_cast<int>(f.coeffs().size()); ++idx) {
    const T& c = f.coeff_at(idx);
    if (c == T(0)) continue;
    add_d_basis(t, fb, fb.mask(k, idx), c, r.coeffs());
  }
  return r;
}

template <class T>
KForm<T> d_twisted(const LieAlgebra<T>& L, const KForm<T>& theta, const KForm<T>& f) {
  require_closed(L, theta);
  if (f.degree() == L.dim()) return KForm<T>::zero(L.dim(), L.dim());
  return d(L, f) - wedge(theta, f);
}

template <class T>
Matrix<T> differential_matrix(const LieAlgebra<T>& L, int k) {
  const int n = L.dim();
  const auto& fb = FormBasis::get(n);
  if (k < 0 || k >= n) throw std::invalid_argument("differential degree out of range");
  Matrix<T> m(fb.count(k + 1), fb.count(k));
  if (k == 0) return m;
  auto t = make_dtable(L);
  Vec<T> col = zero_vec<T>(fb.count(k + 1));
  for (int j = 0; j < fb.count(k); ++j) {
    std::fill(col.begin(), col.end(), T(0));
    add_d_basis(t, fb, fb.mask(k, j), T(1), col);
    m.set_col(j, col);
  }
  return m;
}

template <class T>
Matrix<T> twisted_differential_matrix(const LieAlgebra<T>& L, const KForm<T>& theta, int k) {
  require_closed(L, theta);
  const int n = L.dim();
  const auto& fb = FormBasis::get(n);
  Matrix<T> m = differential_matrix(L, k);
  for (int j = 0; j < fb.count(k); ++j) {
    KForm<T> e(n, k);
    e.coeffs()[static_cast<std::size_t>(j)] = T(1);
    KForm<T> w = wedge(theta, e);
    for (int i = 0; i < fb.count(k + 1); ++i) m(i, j) -= w.coeff_at(i);
  }
  return m;
}

namespace {

template <class T>
std::vector<int> cohomology_dims(int n, const std::vector<int>& ranks) {
  const auto& fb = FormBasis::get(n);
  std::vector<int> b(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    int out = k < n ? ranks[static_cast<std::size_t>(k)] : 0;
    int in = k > 0 ? ranks[static_cast<std::size_t>(k - 1)] : 0;
    b[static_cast<std::size_t>(k)] = fb.count(k) - out - in;
  }
  return b;
}

}  // namespace

template <class T>
std::vector<int> betti(const LieAlgebra<T>& L) {
  L.require_lie();
  std::vector<int> ranks;
  for (int k = 0; k < L.dim(); ++k) ranks.push_back(rank(differential_matrix(L, k), L.tolerance()));
  return cohomology_dims<T>(L.dim(), ranks);
}

template <class T>
std::vector<int> twisted_betti(const LieAlgebra<T>& L, const KForm<T>& theta) {
  L.require_lie();
  require_closed(L, theta);
  std::vector<int> ranks;
  for (int k = 0; k < L.dim(); ++k) ranks.push_back(rank(twisted_differential_matrix(L, theta, k), L.tolerance()));
  return cohomology_dims<T>(L.dim(), ranks);
}

template <class T>
bool is_nondegenerate(const KForm<T>& omega, const Tolerance& tol) {
  if (omega.degree() != 2) throw std::invalid_argument("nondegeneracy is defined for 2-forms");
  if (omega.dim() % 2 != 0) return false;
  return rank(omega.matrix(), tol) == omega.dim();
}

#define LCK_INSTANTIATE(T)                                                              \
  template class KForm<T>;                                                              \
  template KForm<T> wedge(const KForm<T>&, const KForm<T>&);                            \
  template KForm<T> wedge_power(const KForm<T>&, int);                                  \
  template KForm<T> interior(const Vec<T>&, const KForm<T>&);                           \
  template KForm<T> derivation_action(const Matrix<T>&, const KForm<T>&);               \
  template KForm<T> d(const LieAlgebra<T>&, const KForm<T>&);                           \
  template KForm<T> d_twisted(const LieAlgebra<T>&, const KForm<T>&, const KForm<T>&);  \
  template Matrix<T> differential_matrix(const LieAlgebra<T>&, int);                    \
  template Matrix<T> twisted_differential_matrix(const LieAlgebra<T>&, const KForm<T>&, int); \
  template std::vector<int> betti(const LieAlgebra<T>&);                                \
  template std::vector<int> twisted_betti(const LieAlgebra<T>&, const KForm<T>&);       \
  template bool is_nondegenerate(const KForm<T>&, const Tolerance&);

LCK_INSTANTIATE(Rational)
LCK_INSTANTIATE(double)

}  // namespace lck
