#ifndef LCK_VAISMAN_HPP
#define LCK_VAISMAN_HPP

#include "lck/hermitian.hpp"
#include "lck/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lck {

class DecompositionError : public MathError {
 public:
  enum class Reason { not_vaisman, not_unimodular, not_solvable, inconsistent };
  DecompositionError(Reason r, const std::string& what) : MathError(what), reason_(r) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

template <class T>
struct KahlerFlatReport {
  bool jacobi = false;
  bool integrable = false;
  bool closed = false;
  bool flat = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

template <class T>
KahlerFlatReport<T> verify_kahler_flat(const HermitianAlgebra<T>& k);

template <class T>
struct MilnorReport {
  Subspace<T> z;
  Subspace<T> h;
  Subspace<T> kprime;
  bool injective = false;        ///< (1) ad: h -> so(k') injective
  bool ad_is_nabla = false;      ///< (2) ad_x == nabla_x on z + h
  bool nabla_kernel = false;     ///< (3) nabla_x == 0 iff x in z + k'
  bool j_invariant = false;      ///< (4)
  bool j_commuting = false;      ///< (5) ad_H commutes with J on k'
  bool kprime_abelian = false;
  bool kprime_even = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

template <class T>
MilnorReport<T> milnor_decomposition(const HermitianAlgebra<T>& k);

/// Orthonormal J-adapted basis A, JA, z-pairs, H-pairs, e-pairs (columns, ambient coordinates).
struct AdaptedBasis {
  Matrix<double> vectors;
  int z_pairs = 0;
  int h_pairs = 0;
  int e_pairs = 0;
  std::vector<double> c;                   ///< ad_A on z-pairs
  std::vector<double> a;                   ///< ad_A on e-pairs
  std::vector<std::vector<double>> lambda;  ///< lambda[j][k]: ad_{H_j} on e-pair k
};

/// Basis-free invariants of a pair (k, D).
template <class T>
struct Fingerprint {
  int z = 0;
  int h = 0;
  int kprime = 0;
  Polynomial<T> d_charpoly;
};

template <class T>
bool same_fingerprint(const Fingerprint<T>& a, const Fingerprint<T>& b, const Tolerance& tol = {});

template <class T>
std::string to_string(const Fingerprint<T>& f);

template <class T>
struct VaismanDecomposition {
  KForm<T> theta;
  T theta_norm2{};
  Vec<T> A0;  ///< g-dual of theta, |A0|^2 == theta_norm2
  Vec<T> xi;  ///< J A0
  Subspace<T> k;
  HermitianAlgebra<T> kpart;  ///< coordinates on the basis rows of k
  Matrix<T> D;                ///< ad_{A0} restricted to k; divide by |theta| for the unit-length A
  int center_dim = 0;
  KahlerFlatReport<T> kahler_flat;
  MilnorReport<T> milnor;
  AdaptedBasis adapted;
  std::vector<std::string> failures;  ///< violated invariants
  bool ok() const { return failures.empty() && kahler_flat.ok() && milnor.ok(); }
};

/// Throws DecompositionError (not Vaisman, not unimodular, not solvable).
template <class T>
VaismanDecomposition<T> decompose(const HermitianAlgebra<T>& s);

template <class T>
Fingerprint<T> fingerprint(const HermitianAlgebra<T>& kpart, const Matrix<T>& D);

template <class T>
Fingerprint<T> fingerprint(const VaismanDecomposition<T>& dec) {
  return fingerprint(dec.kpart, dec.D);
}

/// g = RA + RJA + k with [A, x] = Dx, JA central and [x, y] = omega_k(x, y) JA + [x, y]_k.
/// Throws MathError naming the failed precondition on D.
template <class T>
HermitianAlgebra<T> build_from_pair(const HermitianAlgebra<T>& k, const Matrix<T>& D);

template <class T>
struct CanonicalResult {
  ComplexForm<T> eta;       ///< wedge of (1,0)-forms e^i - i (e^i o J)
  bool closed = false;      ///< d eta == 0
  T sum_ca_raw{};           ///< -tr(J ad_{A0}) / 2 == |theta| (sum c + sum a)
  std::vector<T> lambda_sums;  ///< -tr(J ad_H|k') / 2 over the basis of h
  bool sums_zero = false;
  bool su_A = false;
  std::vector<bool> su_H;
  bool su_all = false;
  bool equivalent = false;  ///< closed == sums_zero == su_all
  double adapted_eta_defect = 0.0;  ///< max |d eta| for the adapted-basis eta
  std::string certificate;
};

template <class T>
CanonicalResult<T> canonical_form(const HermitianAlgebra<T>& s, const VaismanDecomposition<T>& dec);

template <class T>
CanonicalResult<T> canonical_form(const HermitianAlgebra<T>& s) {
  return canonical_form(s, decompose(s));
}

struct SpectrumCheck {
  bool pass = false;
  int checked = 0;
  std::string certificate;
};

/// Every sampled ad_x has purely imaginary spectrum.
template <class T>
SpectrumCheck imaginary_spectrum_check(const LieAlgebra<T>& L, int samples, std::uint64_t seed);

}  // namespace lck

#endif  // LCK_VAISMAN_HPP
