#include "lck/vaisman.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

namespace lck {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

template <class T>
Matrix<T> restricted_gram(const Matrix<T>& gram, const Subspace<T>& U) {
  const Matrix<T>& B = U.basis();
  return B * gram * B.transpose();
}

// Orthonormal basis u_1, Ju_1, u_2, Ju_2, ... of a J-invariant subspace spanned by `span`.
std::vector<Vec<double>> j_adapted_orthonormal(const std::vector<Vec<double>>& span, const Matrix<double>& G,
                                               const Matrix<double>& J) {
  std::vector<Vec<double>> out;
  auto project_out = [&](Vec<double> v) {
    for (const auto& u : out) v = axpy(-dot(u, G * v), u, v);
    return v;
  };
  for (const auto& s : span) {
    Vec<double> v = project_out(project_out(s));
    double n2 = dot(v, G * v);
    if (n2 <= 1e-18 * std::max(1.0, dot(s, G * s))) continue;
    v = scaled(1.0 / std::sqrt(n2), v);
    Vec<double> jv = J * v;
    out.push_back(v);
    out.push_back(jv);
  }
  return out;
}

struct Blocks {
  std::vector<Vec<double>> w;                  // unit vectors; blocks are (w, Jw)
  std::vector<std::vector<double>> constants;  // constants[op][block]
};

// Simultaneous 2x2-block form of commuting skew J-commuting operators on a J-invariant subspace.
Blocks block_diagonalize(const std::vector<Vec<double>>& span, const std::vector<Matrix<double>>& ops,
                         const Matrix<double>& G, const Matrix<double>& J) {
  Blocks b;
  b.constants.assign(ops.size(), {});
  auto u = j_adapted_orthonormal(span, G, J);
  const int p = static_cast<int>(u.size()) / 2;
  if (p == 0) return b;
  const int n = G.rows();
  Matrix<double> T(n, n);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    Matrix<double> o = ops[i];
    o *= std::sqrt(2.0 + static_cast<double>(i));
    T += o;
  }
  Eigen::MatrixXcd H(p, p);
  for (int j = 0; j < p; ++j)
    for (int k = 0; k < p; ++k) {
      Vec<double> tu = T * u[sz(2 * k)];
      std::complex<double> m(dot(tu, G * u[sz(2 * j)]), dot(tu, G * u[sz(2 * j + 1)]));
      H(j, k) = std::complex<double>(0, -1) * m;
    }
  Eigen::MatrixXcd Hs = (H + H.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Hs);
  for (int e = 0; e < p; ++e) {
    Vec<double> w = zero_vec<double>(n);
    for (int k = 0; k < p; ++k) {
      std::complex<double> c = es.eigenvectors()(k, e);
      w = axpy(c.real(), u[sz(2 * k)], w);
      w = axpy(c.imag(), u[sz(2 * k + 1)], w);
    }
    w = scaled(1.0 / std::sqrt(dot(w, G * w)), w);
    b.w.push_back(w);
  }
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (const auto& w : b.w) b.constants[i].push_back(dot(ops[i] * w, G * (J * w)));
  // Deterministic order: ascending constants, first operator first.
  std::vector<std::size_t> order(b.w.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    for (const auto& c : b.constants)
      if (std::fabs(c[x] - c[y]) > 1e-9) return c[x] < c[y];
    return false;
  });
  Blocks s;
  s.constants.assign(ops.size(), {});
  for (auto i : order) {
    s.w.push_back(b.w[i]);
    for (std::size_t o = 0; o < ops.size(); ++o) s.constants[o].push_back(b.constants[o][i]);
  }
  return s;
}

template <class T>
std::vector<Vec<double>> to_double_vectors(const Subspace<T>& U) {
  std::vector<Vec<double>> r;
  for (const auto& v : U.vectors()) r.push_back(to_double(v));
  return r;
}

template <class T>
AdaptedBasis adapted_basis(const HermitianAlgebra<T>& s, const VaismanDecomposition<T>& dec) {
  AdaptedBasis ab;
  const auto& kp = dec.kpart;
  const MilnorReport<T>& m = dec.milnor;
  const Tolerance& tol = s.L.tolerance();
  Matrix<double> Gk = kp.g.gram().to_double();
  Matrix<double> Jk = kp.J.matrix().to_double();
  const double norm = std::sqrt(Field<T>::to_double(dec.theta_norm2));
  Matrix<double> Dn = dec.D.to_double();
  Dn *= 1.0 / norm;

  Subspace<T> jz = m.z.image(kp.J.matrix(), tol);
  Subspace<T> z0 = m.z.intersect(jz, tol);
  Subspace<T> hs = z0.orthogonal_complement(kp.g.gram(), tol).intersect(m.z.sum(m.h, tol), tol);

  Blocks zb = block_diagonalize(to_double_vectors(z0), {Dn}, Gk, Jk);
  auto hbasis = j_adapted_orthonormal(to_double_vectors(hs), Gk, Jk);
  LieAlgebra<double> kd = to_double(kp.L);
  std::vector<Matrix<double>> ops{Dn};
  for (const auto& hv : hbasis) ops.push_back(kd.ad(hv));
  Blocks eb = block_diagonalize(to_double_vectors(m.kprime), ops, Gk, Jk);

  const int n = s.L.dim();
  Matrix<double> U = dec.k.basis().to_double();  // rows
  Matrix<double> Ut = U.transpose();
  Matrix<double> J = s.J.matrix().to_double();
  std::vector<Vec<double>> cols;
  Vec<double> A = scaled(1.0 / norm, to_double(dec.A0));
  cols.push_back(A);
  cols.push_back(J * A);
  for (const auto& w : zb.w) {
    cols.push_back(Ut * w);
    cols.push_back(Ut * (Jk * w));
  }
  for (std::size_t j = 0; j + 1 < hbasis.size(); j += 2) {
    cols.push_back(Ut * hbasis[j]);
    cols.push_back(Ut * hbasis[j + 1]);
  }
  for (const auto& w : eb.w) {
    cols.push_back(Ut * w);
    cols.push_back(Ut * (Jk * w));
  }
  ab.vectors = Matrix<double>::from_columns(cols, n);
  ab.z_pairs = static_cast<int>(zb.w.size());
  ab.h_pairs = static_cast<int>(hbasis.size()) / 2;
  ab.e_pairs = static_cast<int>(eb.w.size());
  if (!zb.constants.empty()) ab.c = zb.constants[0];
  ab.a = eb.constants[0];
  for (std::size_t j = 1; j < eb.constants.size(); ++j) ab.lambda.push_back(eb.constants[j]);
  return ab;
}

}  // namespace

template <class T>
KahlerFlatReport<T> verify_kahler_flat(const HermitianAlgebra<T>& k) {
  KahlerFlatReport<T> r;
  const Tolerance& tol = k.L.tolerance();
  r.jacobi = k.L.is_lie();
  if (!r.jacobi) r.failures.push_back("induced bracket violates Jacobi");
  r.integrable = is_integrable(k.L, k.J);
  if (!r.integrable) r.failures.push_back("J is not integrable for the induced bracket");
  r.closed = d(k.L, fundamental_form(k.g, k.J)).is_zero(tol);
  if (!r.closed) r.failures.push_back("induced Kahler form is not closed");
  r.flat = is_flat(k.L, k.g);
  if (!r.flat) r.failures.push_back("induced metric is not flat");
  return r;
}

template <class T>
MilnorReport<T> milnor_decomposition(const HermitianAlgebra<T>& k) {
  MilnorReport<T> r;
  const LieAlgebra<T>& L = k.L;
  const Tolerance& tol = L.tolerance();
  const int d = L.dim();
  const Matrix<T>& G = k.g.gram();
  const Matrix<T>& J = k.J.matrix();
  r.z = center(L);
  r.kprime = commutator_ideal(L);
  Subspace<T> zk = r.z.sum(r.kprime, tol);
  r.h = zk.orthogonal_complement(G, tol);
  auto fail = [&](std::string s) { r.failures.push_back(std::move(s)); };

  r.kprime_abelian = is_abelian_subspace(L, r.kprime);
  if (!r.kprime_abelian) fail("k' is not abelian");
  r.kprime_even = r.kprime.dim() % 2 == 0;
  if (!r.kprime_even) fail("k' has odd dimension");

  Matrix<T> Gkp = restricted_gram(G, r.kprime);
  Matrix<T> Jkp;
  bool jkp_ok = true;
  try {
    Jkp = restrict_to(J, r.kprime, tol);
  } catch (const MathError&) {
    jkp_ok = false;
  }

  // (1) and (5)
  std::vector<Vec<T>> flat_rows;
  bool skew = true, preserved = true;
  r.j_commuting = jkp_ok;
  for (const auto& hv : r.h.vectors()) {
    Matrix<T> R;
    try {
      R = restrict_to(L.ad(hv), r.kprime, tol);
    } catch (const MathError&) {
      preserved = false;
      r.j_commuting = false;
      continue;
    }
    if (!(Gkp * R + R.transpose() * Gkp).is_zero(tol)) skew = false;
    if (jkp_ok && !commutator(R, Jkp).is_zero(tol)) r.j_commuting = false;
    flat_rows.push_back(R.data());
  }
  int rk = flat_rows.empty() ? 0 : rank(Matrix<T>::from_rows(flat_rows), tol);
  r.injective = preserved && skew && rk == r.h.dim();
  if (!r.injective) fail("(1) ad: h -> so(k') is not injective");

  // (2)
  LeviCivita<T> nabla(L, k.g);
  r.ad_is_nabla = true;
  for (const auto& x : r.z.sum(r.h, tol).vectors())
    if (!approx_equal(L.ad(x), nabla.nabla(x), tol)) r.ad_is_nabla = false;
  if (!r.ad_is_nabla) fail("(2) ad_x differs from nabla_x on z + h");

  // (3)
  Matrix<T> N(d * d, d);
  for (int i = 0; i < d; ++i) {
    const auto& m = nabla.nabla(i).data();
    for (int a = 0; a < d * d; ++a) N(a, i) = m[sz(a)];
  }
  Matrix<T> ker = nullspace(N, tol);
  r.nabla_kernel = Subspace<T>::from_matrix(ker, tol).same_as(zk, tol);
  if (!r.nabla_kernel) fail("(3) kernel of x -> nabla_x differs from z + k'");

  // (4)
  Subspace<T> zh = r.z.sum(r.h, tol);
  r.j_invariant = zh.image(J, tol).same_as(zh, tol) && r.kprime.image(J, tol).same_as(r.kprime, tol);
  if (!r.j_invariant) fail("(4) z + h or k' is not J-invariant");
  if (!r.j_commuting) fail("(5) ad_H does not commute with J on k'");
  return r;
}

template <class T>
VaismanDecomposition<T> decompose(const HermitianAlgebra<T>& s) {
  using R = DecompositionError::Reason;
  const LieAlgebra<T>& L = s.L;
  L.require_lie();
  const Tolerance& tol = L.tolerance();
  const int n = L.dim();
  VaismanTest<T> vt;
  try {
    vt = is_vaisman(L, s.g, s.J);
  } catch (const MathError& e) {
    throw DecompositionError(R::not_vaisman, std::string("not Vaisman: ") + e.what());
  }
  if (!vt.vaisman) throw DecompositionError(R::not_vaisman, "not Vaisman: " + vt.certificate);
  if (!is_unimodular(L)) throw DecompositionError(R::not_unimodular, "not unimodular");
  if (!series(L).is_solvable) throw DecompositionError(R::not_solvable, "not solvable");

  Vec<T> A0 = vt.lee_vector;
  T n2 = s.g.norm2(A0);
  Vec<T> xi = s.J(A0);
  Subspace<T> k = Subspace<T>::span(n, {A0, xi}, tol).orthogonal_complement(s.g.gram(), tol);
  const int dk = k.dim();
  const Matrix<T>& U = k.basis();

  std::vector<std::string> failures;
  KForm<T> omega = fundamental_form(s.g, s.J);
  std::vector<std::string> labels;
  for (int i = 0; i < dk; ++i) {
    int p = 0;
    while (p < n && near_zero(U(i, p), tol)) ++p;
    labels.push_back(L.labels()[sz(p)]);
  }
  std::vector<BracketEntry<T>> br;
  bool identity = true;
  for (int i = 0; i < dk; ++i)
    for (int j = i + 1; j < dk; ++j) {
      Vec<T> ui = U.row(i), uj = U.row(j);
      Vec<T> w = L.bracket(ui, uj);
      T ca = s.g.inner(w, A0) / n2;
      T cx = s.g.inner(w, xi) / n2;
      T om = omega.evaluate({ui, uj});
      if (!near_zero(ca, tol) || !near_zero(T(cx - om), tol)) identity = false;
      Vec<T> proj = axpy(-cx, xi, axpy(-ca, A0, w));
      auto c = coordinates(U, proj, tol);
      if (!c) throw DecompositionError(R::inconsistent, "projected bracket leaves k");
      br.push_back({i, j, std::move(*c)});
    }
  if (!identity) failures.push_back("[x,y] != omega(x,y) JA + [x,y]_k on k");

  Matrix<T> Jk, D;
  try {
    Jk = restrict_to(s.J.matrix(), k, tol);
    D = restrict_to(L.ad(A0), k, tol);
  } catch (const MathError& e) {
    throw DecompositionError(R::inconsistent, std::string("k is not invariant: ") + e.what());
  }
  HermitianAlgebra<T> kpart{LieAlgebra<T>(dk, labels, std::move(br), tol),
                            Metric<T>(restricted_gram(s.g.gram(), k), tol), ComplexStructure<T>(Jk, tol)};
  VaismanDecomposition<T> r{vt.theta, n2, A0, xi, k, std::move(kpart), D, 0, {}, {}, {}, {}};
  r.failures = std::move(failures);
  auto fail = [&](std::string m) { r.failures.push_back(std::move(m)); };

  if (!L.ad(xi).is_zero(tol)) fail("JA is not central");
  r.center_dim = center(L).dim();
  if (r.center_dim > 2) fail("center has dimension > 2");
  if (!commutator(L.ad(A0), s.J.matrix()).is_zero(tol)) fail("ad_A does not commute with J");
  if (!is_skew(D, r.kpart.g, tol)) fail("D is not skew-symmetric");
  if (!commutator(D, Jk).is_zero(tol)) fail("D does not commute with J");
  if (!is_derivation(r.kpart.L, D)) fail("D is not a derivation of k");

  r.kahler_flat = verify_kahler_flat(r.kpart);
  if (r.kahler_flat.jacobi) {
    r.milnor = milnor_decomposition(r.kpart);
    for (const auto& hv : r.milnor.h.vectors()) {
      if (!is_zero_vec(D * hv, tol) || !is_zero_vec(D * (Jk * hv), tol)) {
        fail("[A,H] or [A,JH] is nonzero for some H in h");
        break;
      }
    }
    if (r.ok()) r.adapted = adapted_basis(s, r);
  }
  return r;
}

template <class T>
Fingerprint<T> fingerprint(const HermitianAlgebra<T>& kpart, const Matrix<T>& D) {
  Fingerprint<T> f;
  const Tolerance& tol = kpart.L.tolerance();
  Subspace<T> z = center(kpart.L);
  Subspace<T> kp = commutator_ideal(kpart.L);
  f.z = z.dim();
  f.kprime = kp.dim();
  f.h = kpart.L.dim() - z.sum(kp, tol).dim();
  f.d_charpoly = charpoly(D);
  return f;
}

template <class T>
bool same_fingerprint(const Fingerprint<T>& a, const Fingerprint<T>& b, const Tolerance& tol) {
  if (a.z != b.z || a.h != b.h || a.kprime != b.kprime) return false;
  if (a.d_charpoly.degree() != b.d_charpoly.degree()) return false;
  for (int i = 0; i <= a.d_charpoly.degree(); ++i)
    if (!near_zero(T(a.d_charpoly.coeff(i) - b.d_charpoly.coeff(i)), tol)) return false;
  return true;
}

template <class T>
std::string to_string(const Fingerprint<T>& f) {
  std::ostringstream os;
  os << "dim z = " << f.z << ", dim h = " << f.h << ", dim k' = " << f.kprime << ", charpoly(D) = [";
  for (int i = 0; i <= f.d_charpoly.degree(); ++i) os << (i ? ", " : "") << Field<T>::format(f.d_charpoly.coeff(i));
  os << "]";
  return os.str();
}

template <class T>
HermitianAlgebra<T> build_from_pair(const HermitianAlgebra<T>& k, const Matrix<T>& D) {
  const LieAlgebra<T>& K = k.L;
  const Tolerance& tol = K.tolerance();
  const int d = K.dim();
  if (d % 2 != 0) throw std::invalid_argument("k must have even dimension");
  if (D.rows() != d || D.cols() != d) throw std::invalid_argument("D has the wrong size");
  auto kf = verify_kahler_flat(k);
  if (!kf.ok()) throw MathError("k is not Kahler flat: " + kf.failures.front());
  if (!is_skew(D, k.g, tol)) throw MathError("D is not skew-symmetric");
  if (!commutator(D, k.J.matrix()).is_zero(tol)) throw MathError("D does not commute with J");
  if (!is_derivation(K, D)) throw MathError("D is not a derivation of k");

  const int n = d + 2;
  auto lift = [&](const Vec<T>& v) {
    Vec<T> r = zero_vec<T>(n);
    for (int i = 0; i < d; ++i) r[sz(i + 2)] = v[sz(i)];
    return r;
  };
  std::vector<BracketEntry<T>> br;
  for (int j = 0; j < d; ++j) br.push_back({0, j + 2, lift(D.col(j))});
  Matrix<T> om = fundamental_form(k.g, k.J).matrix();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec<T> v = lift(K.bracket_basis(i, j));
      v[1] += om(i, j);
      br.push_back({i + 2, j + 2, std::move(v)});
    }
  std::vector<std::string> labels{fresh_label(K.labels(), "A"), fresh_label(K.labels(), "JA")};
  for (const auto& l : K.labels()) labels.push_back(l);
  Matrix<T> G(n, n), J(n, n);
  G(0, 0) = T(1);
  G(1, 1) = T(1);
  J(1, 0) = T(1);
  J(0, 1) = T(-1);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      G(i + 2, j + 2) = k.g.gram()(i, j);
      J(i + 2, j + 2) = k.J.matrix()(i, j);
    }
  return {LieAlgebra<T>(n, std::move(labels), std::move(br), tol), Metric<T>(G, tol), ComplexStructure<T>(J, tol)};
}

template <class T>
CanonicalResult<T> canonical_form(const HermitianAlgebra<T>& s, const VaismanDecomposition<T>& dec) {
  const LieAlgebra<T>& L = s.L;
  const Tolerance& tol = L.tolerance();
  const int n = L.dim();
  CanonicalResult<T> r;

  // (n/2, 0)-form from e^i - i (e^i o J), greedily keeping independent factors.
  ComplexForm<T> eta = ComplexForm<T>::real(KForm<T>::scalar(n, T(1)));
  for (int i = 0; i < n && eta.degree() < n / 2; ++i) {
    Vec<T> e = unit_vec<T>(n, i);
    ComplexForm<T> phi{KForm<T>::from_covector(e), -KForm<T>::from_covector(s.J.pullback(e))};
    ComplexForm<T> next = wedge(eta, phi);
    if (!next.is_zero(tol)) eta = std::move(next);
  }
  r.eta = eta;
  r.closed = d(L, eta).is_zero(tol);

  const Matrix<T>& J = s.J.matrix();
  Matrix<T> adA = L.ad(dec.A0);
  r.sum_ca_raw = -(J * adA).trace() / T(2);
  r.sums_zero = near_zero(r.sum_ca_raw, tol);
  r.su_A = su_membership(adA, J, s.g.gram(), tol);
  r.su_all = r.su_A;

  const auto& kp = dec.kpart;
  const Subspace<T>& kprime = dec.milnor.kprime;
  Matrix<T> Gkp = restricted_gram(kp.g.gram(), kprime);
  Matrix<T> Jkp = kprime.dim() ? restrict_to(kp.J.matrix(), kprime, tol) : Matrix<T>(0, 0);
  std::optional<std::string> lambda_note;
  for (const auto& hv : dec.milnor.h.vectors()) {
    Matrix<T> R = restrict_to(kp.L.ad(hv), kprime, tol);
    T sum = -(Jkp * R).trace() / T(2);
    if (!near_zero(sum, tol)) {
      r.sums_zero = false;
      if (!lambda_note) lambda_note = "sum_k lambda_k(H) = " + Field<T>::format(sum) + " for some H in h";
    }
    r.lambda_sums.push_back(sum);
    bool su = su_membership(R, Jkp, Gkp, tol);
    r.su_H.push_back(su);
    r.su_all = r.su_all && su;
  }
  r.equivalent = r.closed == r.sums_zero && r.sums_zero == r.su_all;

  if (dec.adapted.vectors.rows() == n) {
    auto P = inverse(dec.adapted.vectors);
    if (P) {
      LieAlgebra<double> Ld = to_double(L);
      ComplexForm<double> e = ComplexForm<double>::real(KForm<double>::scalar(n, 1.0));
      for (int p = 0; p + 1 < n; p += 2)
        e = wedge(e, ComplexForm<double>{KForm<double>::from_covector(P->row(p)),
                                         KForm<double>::from_covector(P->row(p + 1))});
      ComplexForm<double> de = d(Ld, e);
      r.adapted_eta_defect = std::max(max_abs(Matrix<double>::from_rows({de.re.coeffs()})),
                                      max_abs(Matrix<double>::from_rows({de.im.coeffs()})));
    }
  }

  std::ostringstream os;
  if (r.sums_zero) {
    os << "sums = 0";
  } else {
    if (!near_zero(r.sum_ca_raw, tol)) {
      os << "sum c + sum a = ";
      if (dec.theta_norm2 == T(1))
        os << Field<T>::format(r.sum_ca_raw);
      else
        os << Field<T>::format(r.sum_ca_raw) << "/|theta| with |theta|^2 = " << Field<T>::format(dec.theta_norm2);
    }
    if (lambda_note) os << (near_zero(r.sum_ca_raw, tol) ? "" : "; ") << *lambda_note;
  }
  os << (r.closed ? "; d eta = 0" : "; d eta != 0");
  if (!r.equivalent) os << "; routes disagree";
  r.certificate = os.str();
  return r;
}

template <class T>
SpectrumCheck imaginary_spectrum_check(const LieAlgebra<T>& L, int samples, std::uint64_t seed) {
  const int n = L.dim();
  const Tolerance& tol = L.tolerance();
  SpectrumCheck r;
  r.pass = true;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  auto check = [&](const Vec<T>& x, const std::string& name) {
    ++r.checked;
    Matrix<T> ad = L.ad(x);
    bool ok;
    if constexpr (is_exact_v<T>) {
      ok = all_roots_imaginary(charpoly(ad));
    } else {
      double scale = std::max(1.0, max_abs(ad));
      ok = true;
      for (const auto& ev : eigenvalues(ad))
        if (std::fabs(ev.real()) > std::sqrt(tol.zero_eps) * scale) ok = false;
    }
    if (!ok && r.pass) {
      r.pass = false;
      r.certificate = "ad_" + name + " has an eigenvalue with nonzero real part";
    }
  };
  for (int i = 0; i < n; ++i) check(unit_vec<T>(n, i), L.labels()[sz(i)]);
  for (int s = 0; s < samples; ++s) {
    Vec<T> x = zero_vec<T>(n);
    for (auto& c : x) c = T(coef(rng));
    check(x, "x (sample " + std::to_string(s) + ")");
  }
  if (r.pass) r.certificate = "all " + std::to_string(r.checked) + " sampled spectra are imaginary";
  return r;
}

#define LCK_INSTANTIATE(T)                                                                            \
  template KahlerFlatReport<T> verify_kahler_flat(const HermitianAlgebra<T>&);                        \
  template MilnorReport<T> milnor_decomposition(const HermitianAlgebra<T>&);                          \
  template VaismanDecomposition<T> decompose(const HermitianAlgebra<T>&);                             \
  template Fingerprint<T> fingerprint(const HermitianAlgebra<T>&, const Matrix<T>&);                  \
  template bool same_fingerprint(const Fingerprint<T>&, const Fingerprint<T>&, const Tolerance&);     \
  template std::string to_string(const Fingerprint<T>&);                                              \
  template HermitianAlgebra<T> build_from_pair(const HermitianAlgebra<T>&, const Matrix<T>&);         \
  template CanonicalResult<T> canonical_form(const HermitianAlgebra<T>&, const VaismanDecomposition<T>&); \
  template SpectrumCheck imaginary_spectrum_check(const LieAlgebra<T>&, int, std::uint64_t);

LCK_INSTANTIATE(Rational)
LCK_INSTANTIATE(double)

}  // namespace lck
