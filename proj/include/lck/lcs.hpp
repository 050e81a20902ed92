#ifndef LCK_LCS_HPP
#define LCK_LCS_HPP

#include "lck/exterior.hpp"

#include <optional>
#include <string>

namespace lck {

struct LcsCheck {
  bool theta_closed = false;
  bool identity = false;  ///< d omega == theta ^ omega
  bool nondegenerate = false;
  std::string failure;
  bool ok() const { return theta_closed && identity && nondegenerate; }
};

template <class T>
LcsCheck is_lcs(const LieAlgebra<T>& L, const KForm<T>& omega, const KForm<T>& theta);

/// g_omega = {x : omega([x,y],z) + omega(y,[x,z]) = 0 for all y, z}. Throws MathError if not bracket-closed.
template <class T>
Subspace<T> automorphism_algebra(const LieAlgebra<T>& L, const KForm<T>& omega);

enum class LcsKind { first, second };
std::string to_string(LcsKind k);

/// Throws MathError when (omega, theta) is not LCS.
template <class T>
LcsKind kind(const LieAlgebra<T>& L, const KForm<T>& omega, const KForm<T>& theta);

/// eta with omega == d eta - theta ^ eta, if one exists. Throws MathError when not LCS.
template <class T>
std::optional<KForm<T>> is_exact_lcs(const LieAlgebra<T>& L, const KForm<T>& omega, const KForm<T>& theta);

/// V with i_V omega == theta. Throws MathError when omega is degenerate.
template <class T>
Vec<T> lee_vector(const KForm<T>& omega, const KForm<T>& theta, const Tolerance& tol = {});

/// eta ^ (d eta)^m != 0 on an odd-dimensional algebra.
template <class T>
bool is_contact(const LieAlgebra<T>& h, const KForm<T>& eta);

/// eta(R) == 1 and i_R d eta == 0. Throws MathError when eta is not contact.
template <class T>
Vec<T> reeb(const LieAlgebra<T>& h, const KForm<T>& eta);

template <class T>
struct LcsStructure {
  LieAlgebra<T> L;
  KForm<T> omega;
  KForm<T> theta;
  KForm<T> eta;  ///< omega == d eta - theta ^ eta
  Vec<T> lee;    ///< i_lee omega == theta
};

/// g = RU + h with [U, x] = Dx, theta = u*, eta(U) = 0 and omega = d eta - theta ^ eta.
template <class T>
LcsStructure<T> lcs_from_contact(const LieAlgebra<T>& h, const KForm<T>& eta, const Matrix<T>& D);

/// Central extension h = s + RR by beta, D = E + 0, then lcs_from_contact.
template <class T>
LcsStructure<T> lcs_from_symplectic(const LieAlgebra<T>& s, const KForm<T>& beta, const Matrix<T>& E);

}  // namespace lck

#endif  // LCK_LCS_HPP
