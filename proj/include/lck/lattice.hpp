#ifndef LCK_LATTICE_HPP
#define LCK_LATTICE_HPP

#include "lck/lie_algebra.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace lck {

/// exp(M) by scaling and squaring with a truncated Taylor series.
Matrix<double> expm(const Matrix<double>& m);

/// exp(tM) as a finite sum when M is nilpotent.
template <class T>
std::optional<Matrix<T>> exp_nilpotent(const Matrix<T>& m, const T& t);

struct OneParam {
  Matrix<double> value;
  std::optional<Matrix<Rational>> exact;  ///< set for nilpotent input in exact mode
};

template <class T>
OneParam one_param(const Matrix<T>& m, const T& t);

/// exp(t ad_x)
template <class T>
OneParam one_param(const LieAlgebra<T>& L, const Vec<T>& x, const T& t) {
  return one_param(L.ad(x), t);
}

struct ScanCandidate {
  double t0 = 0.0;
  std::vector<long> coeffs;  ///< characteristic polynomial of exp(t0 D), low to high
  double residual = 0.0;     ///< largest distance of a coefficient to its integer
};

struct ScanResult {
  std::vector<ScanCandidate> candidates;
  bool degenerate = false;  ///< spectrum of D is zero: every t has (x - 1)^N
  long crossings = 0;       ///< integer crossings of the driving coefficient that were refined
  bool truncated = false;
  std::string note;
};

/// Searches t in (t_min, t_max] for exp(tD) with integer characteristic polynomial and constant term +-1.
/// Heuristic: tangential touches of an integer between grid points are not detected.
ScanResult integer_charpoly_scan(const Matrix<double>& D, double t_min, double t_max, long steps,
                                 const Tolerance& tol = {}, long max_crossings = 10'000'000);

struct RootLemmaCase {
  std::vector<long> coeffs;  ///< low to high
  std::vector<std::complex<double>> roots;
  bool hypothesis = false;
  bool conclusion = false;
  std::optional<double> x0;
};

/// Polynomial x^{2n+1} + ... - 1, n >= 2, with integer coefficients (low to high). Throws std::invalid_argument
/// on a leading coefficient other than 1, a constant term other than -1, even degree or degree below 5.
RootLemmaCase check_root_lemma(const std::vector<long>& coeffs, const Tolerance& tol = {},
                               double conclusion_eps = 1e-8);

struct InoueParams {
  double lambda = 0.0;  ///< real root > 1
  std::complex<double> beta;
  double t0 = 0.0;
  double b = 0.0;
  double consistency = 0.0;  ///< |beta|^2 lambda - 1
};

/// Cubic x^3 - m2 x^2 + m1 x - 1. Throws MathError without a complex pair or with lambda <= 1.
InoueParams recover_inoue_params(long m2, long m1);

}  // namespace lck

#endif  // LCK_LATTICE_HPP
