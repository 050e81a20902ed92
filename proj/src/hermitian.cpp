#include "lck/hermitian.hpp"

#include <cmath>

namespace lck {

template <class T>
ComplexStructure<T>::ComplexStructure(Matrix<T> j, const Tolerance& tol) : j_(std::move(j)) {
  if (!j_.square()) throw std::invalid_argument("complex structure must be square");
  if (j_.rows() % 2 != 0) throw MathError("complex structure needs even dimension");
  Matrix<T> sq = j_ * j_;
  sq += Matrix<T>::identity(j_.rows());
  if (!sq.is_zero(tol)) throw MathError("J^2 != -Id");
}

template <class T>
Vec<T> nijenhuis(const LieAlgebra<T>& L, const ComplexStructure<T>& J, const Vec<T>& x, const Vec<T>& y) {
  Vec<T> jx = J(x), jy = J(y);
  return L.bracket(jx, jy) - L.bracket(x, y) - J(L.bracket(jx, y) + L.bracket(x, jy));
}

template <class T>
bool is_integrable(const LieAlgebra<T>& L, const ComplexStructure<T>& J) {
  const int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!is_zero_vec(nijenhuis(L, J, unit_vec<T>(n, i), unit_vec<T>(n, j)), L.tolerance())) return false;
  return true;
}

template <class T>
bool is_abelian_J(const LieAlgebra<T>& L, const ComplexStructure<T>& J) {
  const int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<T> x = unit_vec<T>(n, i), y = unit_vec<T>(n, j);
      if (!is_zero_vec(L.bracket(J(x), J(y)) - L.bracket(x, y), L.tolerance())) return false;
    }
  return true;
}

template <class T>
bool is_compatible(const ComplexStructure<T>& J, const Metric<T>& g, const Tolerance& tol) {
  return approx_equal(J.matrix().transpose() * g.gram() * J.matrix(), g.gram(), tol);
}

template <class T>
KForm<T> fundamental_form(const Metric<T>& g, const ComplexStructure<T>& J) {
  return KForm<T>::from_matrix(J.matrix().transpose() * g.gram());
}

template <class T>
std::optional<KForm<T>> lee_form_solve(const LieAlgebra<T>& L, const KForm<T>& omega) {
  const int n = L.dim();
  if (!is_nondegenerate(omega, L.tolerance())) throw MathError("2-form is degenerate");
  KForm<T> domega = d(L, omega);
  if (domega.is_zero(L.tolerance())) return KForm<T>::zero(n, 1);
  const int rows = static_cast<int>(domega.coeffs().size());
  Matrix<T> m(rows, n);
  for (int i = 0; i < n; ++i) m.set_col(i, wedge(KForm<T>::basis_covector(n, i), omega).coeffs());
  auto sol = solve(m, domega.coeffs(), L.tolerance());
  if (!sol) return std::nullopt;
  return KForm<T>::from_covector(*sol);
}

template <class T>
KForm<T> lee_form_formula(const LieAlgebra<T>& L, const Metric<T>& g, const ComplexStructure<T>& J) {
  const int n = L.dim();
  if (n < 4) throw MathError("the codifferential formula for the Lee form needs dimension at least 4");
  KForm<T> omega = fundamental_form(g, J);
  KForm<T> delta = codifferential(L, g, omega);
  Vec<T> v = J.pullback(delta.covector());
  T factor = T(-1) / T(n / 2 - 1);
  return KForm<T>::from_covector(scaled(factor, v));
}

std::string to_string(HermitianKind k) {
  switch (k) {
    case HermitianKind::kahler: return "Kahler";
    case HermitianKind::lck: return "LCK";
    default: return "non-LCK";
  }
}

template <class T>
Classification<T> classify(const LieAlgebra<T>& L, const Metric<T>& g, const ComplexStructure<T>& J) {
  L.require_lie();
  const int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!is_zero_vec(nijenhuis(L, J, unit_vec<T>(n, i), unit_vec<T>(n, j)), L.tolerance()))
        throw MathError("J is not integrable: N_J(" + L.labels()[static_cast<std::size_t>(i)] + ", " +
                        L.labels()[static_cast<std::size_t>(j)] + ") != 0");
  if (!is_compatible(J, g, L.tolerance())) throw MathError("J is not orthogonal for the metric");
  Classification<T> c;
  KForm<T> omega = fundamental_form(g, J);
  if (d(L, omega).is_zero(L.tolerance())) {
    c.kind = HermitianKind::kahler;
    c.theta = KForm<T>::zero(n, 1);
    c.theta_closed = true;
    c.detail = "d(omega) = 0";
    return c;
  }
  auto theta = lee_form_solve(L, omega);
  if (!theta) {
    c.detail = "d(omega) = theta ^ omega has no solution";
    return c;
  }
  c.theta_closed = d(L, *theta).is_zero(L.tolerance());
  if (!c.theta_closed) {
    c.detail = "the solution theta = " + theta->to_string(L.labels(), L.tolerance()) + " is not closed";
    c.theta = std::move(theta);
    return c;
  }
  c.kind = HermitianKind::lck;
  c.detail = "theta = " + theta->to_string(L.labels(), L.tolerance());
  c.theta = std::move(theta);
  return c;
}

template <class T>
VaismanTest<T> is_vaisman(const LieAlgebra<T>& L, const Metric<T>& g, const ComplexStructure<T>& J) {
  auto c = classify(L, g, J);
  if (c.kind != HermitianKind::lck) throw MathError("structure is not strictly LCK (" + to_string(c.kind) + ")");
  const int n = L.dim();
  VaismanTest<T> r;
  r.theta = *c.theta;
  r.lee_vector = g.sharp(r.theta.covector());
  r.killing = is_killing(L, g, r.lee_vector);
  LeviCivita<T> nabla(L, g);
  // Matrix P(i, j) = (nabla_{e_i} theta)(e_j)
  Matrix<T> P(n, n);
  for (int i = 0; i < n; ++i) P.set_row(i, covariant_derivative(nabla, unit_vec<T>(n, i), r.theta).covector());
  r.parallel = P.is_zero(L.tolerance());
  r.vaisman = r.killing && r.parallel;
  const auto& lab = L.labels();
  if (r.parallel) {
    r.certificate = "ad of the Lee vector is skew and nabla theta = 0";
  } else {
    std::optional<std::pair<int, int>> at;
    for (int i = 0; i < n && !at; ++i)
      if (!near_zero(P(i, i), L.tolerance())) at = std::pair(i, i);
    for (int i = 0; i < n && !at; ++i)
      for (int j = 0; j < n && !at; ++j)
        if (!near_zero(P(i, j), L.tolerance())) at = std::pair(i, j);
    auto [i, j] = *at;
    r.certificate = "(nabla_" + lab[static_cast<std::size_t>(i)] + " theta)(" + lab[static_cast<std::size_t>(j)] +
                    ") = " + Field<T>::format(P(i, j));
  }
  if (r.killing != r.parallel) r.certificate += "; Killing and parallel routes disagree";
  return r;
}

template <class T>
bool u_membership(const Matrix<T>& D, const Matrix<T>& J, const Matrix<T>& gram, const Tolerance& tol) {
  if (!(gram * D + D.transpose() * gram).is_zero(tol)) return false;
  return commutator(D, J).is_zero(tol);
}

template <class T>
bool su_membership(const Matrix<T>& D, const Matrix<T>& J, const Matrix<T>& gram, const Tolerance& tol) {
  return u_membership(D, J, gram, tol) && near_zero((J * D).trace(), tol);
}

template <class T>
AlmostAbelianLck<T> check_almost_abelian_lck(const LieAlgebra<T>& L, const Metric<T>& g,
                                             const ComplexStructure<T>& J, std::optional<Subspace<T>> ideal) {
  L.require_lie();
  const Tolerance& tol = L.tolerance();
  const int n = L.dim();
  AlmostAbelianLck<T> r;
  if (!ideal) ideal = find_codim1_abelian_ideal(L);
  if (!ideal) throw MathError("algebra has no codimension-one abelian ideal");
  if (!verify_almost_abelian(L, *ideal)) throw MathError("supplied subspace is not a codimension-one abelian ideal");
  auto fail = [&](std::string s) { r.failures.push_back(std::move(s)); };

  auto cls = classify(L, g, J);
  if (cls.kind != HermitianKind::lck) fail("Hermitian structure is not strictly LCK");
  r.unimodular = is_unimodular(L);

  auto perp = ideal->orthogonal_complement(g.gram(), tol);
  r.f1 = perp.basis().row(0);
  r.f2 = J(r.f1);
  r.f1_norm2 = g.norm2(r.f1);
  const double s = std::sqrt(Field<T>::to_double(r.f1_norm2));

  auto derived = commutator_ideal(L);
  if (derived.dim() == 1) {
    r.clause = 1;
    r.fingerprint = series(L).is_nilpotent ? "h3 x R" : "aff(R) x R^2";
    r.shape_ok = r.failures.empty();
    return r;
  }
  r.clause = 2;
  auto plane = Subspace<T>::span(n, {r.f1, r.f2}, tol);
  r.a = plane.orthogonal_complement(g.gram(), tol);
  const int m = r.a.dim() / 2;
  if (!r.a.contains(r.a.image(J.matrix(), tol), tol)) fail("a is not J-invariant");
  if (!is_abelian_subspace(L, r.a)) fail("a is not abelian");

  Vec<T> br = L.bracket(r.f1, r.f2);
  r.mu_raw = g.inner(br, r.f2) / g.norm2(r.f2);
  if (!is_zero_vec(br - scaled(r.mu_raw, r.f2), tol)) fail("[f1, f2] is not a multiple of f2");
  r.mu = Field<T>::to_double(r.mu_raw) / s;

  for (const auto& v : r.a.vectors())
    if (!is_zero_vec(L.bracket(r.f2, v), tol)) {
      fail("ad(f2) does not vanish on a");
      break;
    }

  Matrix<T> M;
  try {
    M = restrict_to(L.ad(r.f1), r.a, tol);
  } catch (const MathError&) {
    fail("ad(f1) does not preserve a");
    r.shape_ok = false;
    return r;
  }
  r.lambda_raw = M.trace() / T(2 * m);
  r.lambda = Field<T>::to_double(r.lambda_raw) / s;
  r.B = M - r.lambda_raw * Matrix<T>::identity(2 * m);
  const Matrix<T>& A = r.a.basis();
  Matrix<T> Ga = A * g.gram() * A.transpose();
  Matrix<T> Ja = restrict_to(J.matrix(), r.a, tol);
  r.b_unitary = u_membership(r.B, Ja, Ga, tol);
  if (!r.b_unitary) fail("B is not in u(n)");
  if (near_zero(r.lambda_raw, tol)) fail("lambda = 0");

  Vec<T> expected = scaled(T(-2) * r.lambda_raw / r.f1_norm2, g.flat(r.f1));
  r.theta_matches = cls.theta && is_zero_vec(cls.theta->covector() - expected, tol);
  if (!r.theta_matches) fail("Lee form differs from -2 lambda f^1");

  r.unimodular_formula = near_zero(T(r.lambda_raw * T(2 * m) + r.mu_raw), tol);
  r.consistent = r.unimodular == r.unimodular_formula;
  if (!r.consistent) fail("unimodularity does not match lambda = -mu/2n");
  r.shape_ok = r.failures.empty();
  return r;
}

#define LCK_INSTANTIATE(T)                                                                                  \
  template class ComplexStructure<T>;                                                                       \
  template Vec<T> nijenhuis(const LieAlgebra<T>&, const ComplexStructure<T>&, const Vec<T>&, const Vec<T>&); \
  template bool is_integrable(const LieAlgebra<T>&, const ComplexStructure<T>&);                            \
  template bool is_abelian_J(const LieAlgebra<T>&, const ComplexStructure<T>&);                             \
  template bool is_compatible(const ComplexStructure<T>&, const Metric<T>&, const Tolerance&);              \
  template KForm<T> fundamental_form(const Metric<T>&, const ComplexStructure<T>&);                         \
  template std::optional<KForm<T>> lee_form_solve(const LieAlgebra<T>&, const KForm<T>&);                   \
  template KForm<T> lee_form_formula(const LieAlgebra<T>&, const Metric<T>&, const ComplexStructure<T>&);   \
  template Classification<T> classify(const LieAlgebra<T>&, const Metric<T>&, const ComplexStructure<T>&);  \
  template VaismanTest<T> is_vaisman(const LieAlgebra<T>&, const Metric<T>&, const ComplexStructure<T>&);   \
  template bool su_membership(const Matrix<T>&, const Matrix<T>&, const Matrix<T>&, const Tolerance&);      \
  template bool u_membership(const Matrix<T>&, const Matrix<T>&, const Matrix<T>&, const Tolerance&);       \
  template AlmostAbelianLck<T> check_almost_abelian_lck(const LieAlgebra<T>&, const Metric<T>&,             \
                                                        const ComplexStructure<T>&, std::optional<Subspace<T>>);

LCK_INSTANTIATE(Rational)
LCK_INSTANTIATE(double)

}  // namespace lck
