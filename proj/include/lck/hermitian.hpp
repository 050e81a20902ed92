#ifndef LCK_HERMITIAN_HPP
#define LCK_HERMITIAN_HPP

#include "lck/riemannian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lck {

/// Endomorphism with J^2 = -Id on an even-dimensional space.
template <class T>
class ComplexStructure {
 public:
  ComplexStructure(Matrix<T> j, const Tolerance& tol = {});
  int dim() const { return j_.rows(); }
  const Matrix<T>& matrix() const { return j_; }
  Vec<T> operator()(const Vec<T>& x) const { return j_ * x; }
  /// phi o J as a covector.
  Vec<T> pullback(const Vec<T>& phi) const { return j_.transpose() * phi; }

 private:
  Matrix<T> j_;
};

/// Lie algebra with a metric and a complex structure on the same basis.
template <class T>
struct HermitianAlgebra {
  LieAlgebra<T> L;
  Metric<T> g;
  ComplexStructure<T> J;
};

/// N_J(x, y) = [Jx, Jy] - [x, y] - J([Jx, y] + [x, Jy])
template <class T>
Vec<T> nijenhuis(const LieAlgebra<T>& L, const ComplexStructure<T>& J, const Vec<T>& x, const Vec<T>& y);

template <class T>
bool is_integrable(const LieAlgebra<T>& L, const ComplexStructure<T>& J);

/// [Jx, Jy] == [x, y] on basis pairs.
template <class T>
bool is_abelian_J(const LieAlgebra<T>& L, const ComplexStructure<T>& J);

/// J^T G J == G
template <class T>
bool is_compatible(const ComplexStructure<T>& J, const Metric<T>& g, const Tolerance& tol = {});

/// omega(x, y) = g(Jx, y)
template <class T>
KForm<T> fundamental_form(const Metric<T>& g, const ComplexStructure<T>& J);

/// Solves d(omega) = theta ^ omega. Throws MathError if omega is degenerate.
template <class T>
std::optional<KForm<T>> lee_form_solve(const LieAlgebra<T>& L, const KForm<T>& omega);

/// theta = -1/(m-1) (delta omega) o J for dim = 2m >= 4.
template <class T>
KForm<T> lee_form_formula(const LieAlgebra<T>& L, const Metric<T>& g, const ComplexStructure<T>& J);

enum class HermitianKind { kahler, lck, non_lck };
std::string to_string(HermitianKind k);

template <class T>
struct Classification {
  HermitianKind kind = HermitianKind::non_lck;
  std::optional<KForm<T>> theta;  ///< set for kahler (zero) and lck
  bool theta_closed = false;
  std::string detail;
};

/// Requires an integrable J compatible with g (MathError otherwise).
template <class T>
Classification<T> classify(const LieAlgebra<T>& L, const Metric<T>& g, const ComplexStructure<T>& J);

template <class T>
struct VaismanTest {
  bool vaisman = false;
  bool killing = false;   ///< ad of the Lee vector is g-skew
  bool parallel = false;  ///< nabla theta == 0
  KForm<T> theta;
  Vec<T> lee_vector;
  std::string certificate;
};

/// Throws MathError when the structure is not strictly LCK.
template <class T>
VaismanTest<T> is_vaisman(const LieAlgebra<T>& L, const Metric<T>& g, const ComplexStructure<T>& J);

/// D g-skew, DJ == JD and tr(J D) == 0.
template <class T>
bool su_membership(const Matrix<T>& D, const Matrix<T>& J, const Matrix<T>& gram, const Tolerance& tol = {});

/// D g-skew and DJ == JD.
template <class T>
bool u_membership(const Matrix<T>& D, const Matrix<T>& J, const Matrix<T>& gram, const Tolerance& tol = {});

template <class T>
struct AlmostAbelianLck {
  int clause = 0;  ///< 1 when dim g' == 1, 2 otherwise
  bool shape_ok = false;
  std::vector<std::string> failures;
  std::string fingerprint;  ///< clause 1 only
  Vec<T> f1;                ///< spans the orthogonal complement of the abelian ideal, not normalized
  Vec<T> f2;
  T f1_norm2{};
  Subspace<T> a;
  T lambda_raw{};  ///< with respect to the unnormalized f1
  T mu_raw{};
  double lambda = 0.0;  ///< normalized to |f1| = 1
  double mu = 0.0;
  Matrix<T> B;
  bool b_unitary = false;
  bool theta_matches = false;
  bool unimodular = false;
  bool unimodular_formula = false;  ///< lambda == -mu / 2n
  bool consistent = false;          ///< unimodular <=> formula
};

template <class T>
AlmostAbelianLck<T> check_almost_abelian_lck(const LieAlgebra<T>& L, const Metric<T>& g,
                                             const ComplexStructure<T>& J,
                                             std::optional<Subspace<T>> ideal = std::nullopt);

}  // namespace lck

#endif  // LCK_HERMITIAN_HPP
