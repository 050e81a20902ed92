#ifndef LCK_LIE_ALGEBRA_HPP
#define LCK_LIE_ALGEBRA_HPP

#include "lck/numeric.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lck {

/// Structure constants [e_i, e_j] = sum_k c_ij^k e_k, stored for i < j.
template <class T>
struct BracketEntry {
  int i = 0;
  int j = 0;
  Vec<T> coeffs;
};

template <class T>
class LieAlgebra {
 public:
  LieAlgebra(int dim, std::vector<std::string> labels, std::vector<BracketEntry<T>> brackets, Tolerance tol = {});

  static LieAlgebra abelian(int dim, Tolerance tol = {});

  int dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<BracketEntry<T>>& brackets() const { return brackets_; }
  const Tolerance& tolerance() const { return tol_; }

  /// c_ij^k for any i, j.
  const T& c(int i, int j, int k) const { return c_[static_cast<std::size_t>((i * n_ + j) * n_ + k)]; }

  Vec<T> bracket_basis(int i, int j) const;
  Vec<T> bracket(const Vec<T>& x, const Vec<T>& y) const;
  Matrix<T> ad(const Vec<T>& x) const;
  Matrix<T> ad_basis(int i) const;

  /// Largest absolute component of the cyclic Jacobi sum over basis triples.
  const T& jacobi_defect() const { return defect_; }
  /// First basis triple violating Jacobi, if any.
  const std::optional<std::array<int, 3>>& jacobi_violation() const { return violation_; }
  bool is_lie() const { return !violation_.has_value(); }
  /// Throws MathError naming the violating triple.
  void require_lie() const;

  int label_index(const std::string& label) const;

 private:
  int n_;
  std::vector<std::string> labels_;
  std::vector<BracketEntry<T>> brackets_;
  Tolerance tol_;
  std::vector<T> c_;
  T defect_;
  std::optional<std::array<int, 3>> violation_;
};

template <class T>
LieAlgebra<double> to_double(const LieAlgebra<T>& L) {
  std::vector<BracketEntry<double>> b;
  for (const auto& e : L.brackets()) b.push_back({e.i, e.j, to_double(e.coeffs)});
  return LieAlgebra<double>(L.dim(), L.labels(), std::move(b), L.tolerance());
}

/// Linear subspace of T^n held by a reduced row echelon basis.
template <class T>
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(int ambient, const std::vector<Vec<T>>& vectors, const Tolerance& tol = {});
  static Subspace from_matrix(const Matrix<T>& rows, const Tolerance& tol = {});
  static Subspace zero(int ambient) { return Subspace(ambient, Matrix<T>(0, ambient)); }
  static Subspace full(int ambient) { return Subspace(ambient, Matrix<T>::identity(ambient)); }

  int ambient() const { return n_; }
  int dim() const { return basis_.rows(); }
  const Matrix<T>& basis() const { return basis_; }
  std::vector<Vec<T>> vectors() const;

  bool contains(const Vec<T>& v, const Tolerance& tol = {}) const;
  bool contains(const Subspace& other, const Tolerance& tol = {}) const;
  bool same_as(const Subspace& other, const Tolerance& tol = {}) const {
    return dim() == other.dim() && contains(other, tol);
  }

  Subspace sum(const Subspace& other, const Tolerance& tol = {}) const;
  Subspace intersect(const Subspace& other, const Tolerance& tol = {}) const;
  /// {x : g(u, x) = 0 for all u in this}, g given by its Gram matrix.
  Subspace orthogonal_complement(const Matrix<T>& gram, const Tolerance& tol = {}) const;
  Subspace image(const Matrix<T>& m, const Tolerance& tol = {}) const;

 private:
  Subspace(int n, Matrix<T> b) : n_(n), basis_(std::move(b)) {}
  int n_ = 0;
  Matrix<T> basis_;
};

template <class T>
Subspace<T> center(const LieAlgebra<T>& L);

template <class T>
Subspace<T> commutator_ideal(const LieAlgebra<T>& L);

/// span{[u, v] : u in U, v in V}
template <class T>
Subspace<T> bracket_span(const LieAlgebra<T>& L, const Subspace<T>& U, const Subspace<T>& V);

template <class T>
bool is_subalgebra(const LieAlgebra<T>& L, const Subspace<T>& U);

template <class T>
bool is_ideal(const LieAlgebra<T>& L, const Subspace<T>& U);

template <class T>
bool is_abelian_subspace(const LieAlgebra<T>& L, const Subspace<T>& U);

struct SeriesInfo {
  std::vector<int> derived_dims;
  std::vector<int> lower_central_dims;
  bool is_solvable = false;
  bool is_nilpotent = false;
  int derived_length = -1;  ///< -1 when not solvable
  int nilpotency_step = -1;  ///< -1 when not nilpotent
};

template <class T>
SeriesInfo series(const LieAlgebra<T>& L);

template <class T>
bool is_unimodular(const LieAlgebra<T>& L);

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

struct CompleteSolvability {
  Verdict verdict = Verdict::unknown;
  std::string certificate;
};

/// Lie's theorem puts every ad_x of a solvable algebra in simultaneous triangular
/// form over C, so the spectrum of ad_x is linear in x and real for all x iff it
/// is real on a basis. Random combinations are additionally sampled as a check.
template <class T>
CompleteSolvability is_completely_solvable(const LieAlgebra<T>& L, int sample_count, std::uint64_t seed);

template <class T>
bool verify_almost_abelian(const LieAlgebra<T>& L, const Subspace<T>& u);

/// A codimension-one abelian ideal is ker(phi) for a nonzero covector phi with
/// d(phi) = 0 and phi wedge d(e^k) = 0 for every k; both conditions are linear in phi.
template <class T>
std::optional<Subspace<T>> find_codim1_abelian_ideal(const LieAlgebra<T>& L);

/// D[x, y] == [Dx, y] + [x, Dy] on basis pairs.
template <class T>
bool is_derivation(const LieAlgebra<T>& L, const Matrix<T>& D);

/// base, with primes appended until it differs from every label in taken.
std::string fresh_label(const std::vector<std::string>& taken, std::string base);

/// Matrix of the restriction of a linear map M (which must preserve U) in the basis rows of U.
template <class T>
Matrix<T> restrict_to(const Matrix<T>& m, const Subspace<T>& U, const Tolerance& tol = {});

}  // namespace lck

#endif  // LCK_LIE_ALGEBRA_HPP
