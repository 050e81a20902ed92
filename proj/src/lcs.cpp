#include "lck/lcs.hpp"

namespace lck {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

}  // namespace

template <class T>
LcsCheck is_lcs(const LieAlgebra<T>& L, const KForm<T>& omega, const KForm<T>& theta) {
  if (omega.degree() != 2 || theta.degree() != 1 || omega.dim() != L.dim() || theta.dim() != L.dim())
    throw std::invalid_argument("is_lcs expects a 2-form and a 1-form on the algebra");
  const Tolerance& tol = L.tolerance();
  LcsCheck r;
  r.theta_closed = d(L, theta).is_zero(tol);
  r.identity = approx_equal(d(L, omega), wedge(theta, omega), tol);
  r.nondegenerate = is_nondegenerate(omega, tol);
  if (!r.nondegenerate)
    r.failure = "omega is degenerate";
  else if (!r.theta_closed)
    r.failure = "theta is not closed";
  else if (!r.identity)
    r.failure = "d omega != theta ^ omega";
  return r;
}

template <class T>
Subspace<T> automorphism_algebra(const LieAlgebra<T>& L, const KForm<T>& omega) {
  const int n = L.dim();
  const Tolerance& tol = L.tolerance();
  Matrix<T> W = omega.matrix();
  // Row (a, b), column i: omega([e_i, e_a], e_b) + omega(e_a, [e_i, e_b]).
  Matrix<T> M(n * (n - 1) / 2, n);
  int row = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b, ++row)
      for (int i = 0; i < n; ++i) {
        T s(0);
        for (int k = 0; k < n; ++k) s += L.c(i, a, k) * W(k, b) + L.c(i, b, k) * W(a, k);
        M(row, i) = s;
      }
  Subspace<T> g = Subspace<T>::from_matrix(nullspace(M, tol), tol);
  if (!is_subalgebra(L, g)) throw MathError("infinitesimal automorphisms are not bracket-closed");
  return g;
}

std::string to_string(LcsKind k) { return k == LcsKind::first ? "first" : "second"; }

template <class T>
LcsKind kind(const LieAlgebra<T>& L, const KForm<T>& omega, const KForm<T>& theta) {
  auto chk = is_lcs(L, omega, theta);
  if (!chk.ok()) throw MathError("not LCS: " + chk.failure);
  Vec<T> th = theta.covector();
  for (const auto& x : automorphism_algebra(L, omega).vectors())
    if (!near_zero(dot(th, x), L.tolerance())) return LcsKind::first;
  return LcsKind::second;
}

template <class T>
std::optional<KForm<T>> is_exact_lcs(const LieAlgebra<T>& L, const KForm<T>& omega, const KForm<T>& theta) {
  auto chk = is_lcs(L, omega, theta);
  if (!chk.ok()) throw MathError("not LCS: " + chk.failure);
  auto eta = solve(twisted_differential_matrix(L, theta, 1), omega.coeffs(), L.tolerance());
  if (!eta) return std::nullopt;
  return KForm<T>::from_covector(*eta);
}

template <class T>
Vec<T> lee_vector(const KForm<T>& omega, const KForm<T>& theta, const Tolerance& tol) {
  // (i_V omega)(y) = sum_i V_i omega(e_i, y)
  auto v = solve(omega.matrix().transpose(), theta.covector(), tol);
  if (!v || !is_nondegenerate(omega, tol)) throw MathError("omega is degenerate");
  return *v;
}

template <class T>
bool is_contact(const LieAlgebra<T>& h, const KForm<T>& eta) {
  const int n = h.dim();
  if (n % 2 == 0) throw std::invalid_argument("contact forms live on odd-dimensional algebras");
  if (eta.degree() != 1 || eta.dim() != n) throw std::invalid_argument("eta must be a 1-form on the algebra");
  return !wedge(eta, wedge_power(d(h, eta), (n - 1) / 2)).is_zero(h.tolerance());
}

template <class T>
Vec<T> reeb(const LieAlgebra<T>& h, const KForm<T>& eta) {
  if (!is_contact(h, eta)) throw MathError("eta is not a contact form");
  const int n = h.dim();
  Matrix<T> de = d(h, eta).matrix();
  Matrix<T> A(n + 1, n);
  Vec<T> b = zero_vec<T>(n + 1);
  A.set_row(0, eta.covector());
  b[0] = T(1);
  for (int y = 0; y < n; ++y)
    for (int i = 0; i < n; ++i) A(y + 1, i) = de(i, y);
  auto r = solve(A, b, h.tolerance());
  if (!r) throw MathError("Reeb equations are inconsistent");
  return *r;
}

template <class T>
LcsStructure<T> lcs_from_contact(const LieAlgebra<T>& h, const KForm<T>& eta, const Matrix<T>& D) {
  const int m = h.dim();
  const Tolerance& tol = h.tolerance();
  if (D.rows() != m || D.cols() != m) throw std::invalid_argument("D has the wrong size");
  if (!is_contact(h, eta)) throw MathError("eta is not a contact form");
  if (!is_derivation(h, D)) throw MathError("D is not a derivation of h");
  if (!is_zero_vec(D.transpose() * eta.covector(), tol)) throw MathError("eta o D != 0");

  const int n = m + 1;
  auto lift = [&](const Vec<T>& v) {
    Vec<T> r = zero_vec<T>(n);
    for (int i = 0; i < m; ++i) r[sz(i + 1)] = v[sz(i)];
    return r;
  };
  std::vector<BracketEntry<T>> br;
  for (int j = 0; j < m; ++j) br.push_back({0, j + 1, lift(D.col(j))});
  for (const auto& e : h.brackets()) br.push_back({e.i + 1, e.j + 1, lift(e.coeffs)});
  std::vector<std::string> labels{fresh_label(h.labels(), "U")};
  for (const auto& l : h.labels()) labels.push_back(l);
  LieAlgebra<T> L(n, std::move(labels), std::move(br), tol);
  L.require_lie();
  KForm<T> theta = KForm<T>::basis_covector(n, 0);
  KForm<T> e = KForm<T>::from_covector(lift(eta.covector()));
  KForm<T> omega = d(L, e) - wedge(theta, e);
  Vec<T> lee = lee_vector(omega, theta, tol);
  return {std::move(L), std::move(omega), std::move(theta), std::move(e), std::move(lee)};
}

template <class T>
LcsStructure<T> lcs_from_symplectic(const LieAlgebra<T>& s, const KForm<T>& beta, const Matrix<T>& E) {
  const int m = s.dim();
  const Tolerance& tol = s.tolerance();
  if (beta.degree() != 2 || beta.dim() != m) throw std::invalid_argument("beta must be a 2-form on the algebra");
  if (E.rows() != m || E.cols() != m) throw std::invalid_argument("E has the wrong size");
  if (!d(s, beta).is_zero(tol)) throw MathError("beta is not closed");
  if (!is_nondegenerate(beta, tol)) throw MathError("beta is degenerate");
  if (!is_derivation(s, E)) throw MathError("E is not a derivation of s");
  Matrix<T> B = beta.matrix();
  if (!(E.transpose() * B + B * E).is_zero(tol)) throw MathError("beta(Ex, y) + beta(x, Ey) != 0");

  const int n = m + 1;
  auto ext = [&](const Vec<T>& v) {
    Vec<T> r = v;
    r.push_back(T(0));
    return r;
  };
  std::vector<BracketEntry<T>> br;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Vec<T> v = ext(s.bracket_basis(i, j));
      v[sz(m)] = B(i, j);
      if (!is_zero_vec(v, tol)) br.push_back({i, j, std::move(v)});
    }
  std::vector<std::string> labels = s.labels();
  labels.push_back(fresh_label(s.labels(), "R"));
  LieAlgebra<T> h(n, std::move(labels), std::move(br), tol);
  Matrix<T> D(n, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) D(i, j) = E(i, j);
  return lcs_from_contact(h, KForm<T>::basis_covector(n, m), D);
}

#define LCK_INSTANTIATE(T)                                                                             \
  template LcsCheck is_lcs(const LieAlgebra<T>&, const KForm<T>&, const KForm<T>&);                    \
  template Subspace<T> automorphism_algebra(const LieAlgebra<T>&, const KForm<T>&);                    \
  template LcsKind kind(const LieAlgebra<T>&, const KForm<T>&, const KForm<T>&);                       \
  template std::optional<KForm<T>> is_exact_lcs(const LieAlgebra<T>&, const KForm<T>&, const KForm<T>&); \
  template Vec<T> lee_vector(const KForm<T>&, const KForm<T>&, const Tolerance&);                       \
  template bool is_contact(const LieAlgebra<T>&, const KForm<T>&);                                     \
  template Vec<T> reeb(const LieAlgebra<T>&, const KForm<T>&);                                         \
  template LcsStructure<T> lcs_from_contact(const LieAlgebra<T>&, const KForm<T>&, const Matrix<T>&);  \
  template LcsStructure<T> lcs_from_symplectic(const LieAlgebra<T>&, const KForm<T>&, const Matrix<T>&);

LCK_INSTANTIATE(Rational)
LCK_INSTANTIATE(double)

}  // namespace lck
