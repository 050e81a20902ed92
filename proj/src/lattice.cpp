#include "lck/lattice.hpp"

#include "lck/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace lck {

namespace {

double inf_norm(const Matrix<double>& m) {
  double r = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols(); ++j) s += std::fabs(m(i, j));
    r = std::max(r, s);
  }
  return r;
}

using cd = std::complex<double>;

// Real parts of prod (x - r_i), low to high.
std::vector<double> poly_from_roots(const std::vector<cd>& r) {
  std::vector<cd> p{cd(1.0)};
  for (const auto& z : r) {
    std::vector<cd> q(p.size() + 1, cd(0.0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= z * p[i];
    }
    p = std::move(q);
  }
  std::vector<double> out;
  for (const auto& c : p) out.push_back(c.real());
  return out;
}

double illinois(const std::function<double(double)>& f, double a, double b, double fa, double fb) {
  for (int it = 0; it < 200; ++it) {
    double c = (a * fb - b * fa) / (fb - fa);
    double lo = std::min(a, b), hi = std::max(a, b);
    if (!(c > lo && c < hi)) c = 0.5 * (a + b);
    double fc = f(c);
    if (fc == 0.0 || hi - lo <= 4e-16 * std::max(1.0, std::fabs(c))) return c;
    if ((fc < 0) != (fb < 0)) {
      a = b;
      fa = fb;
    } else {
      fa *= 0.5;
    }
    b = c;
    fb = fc;
  }
  return b;
}

// Every expected root has a distinct computed root nearby.
bool same_spectrum(std::vector<cd> expected, std::vector<cd> computed, double rel) {
  if (expected.size() != computed.size()) return false;
  for (const auto& e : expected) {
    auto best = computed.end();
    double bd = 0.0;
    for (auto it = computed.begin(); it != computed.end(); ++it) {
      double dd = std::abs(*it - e);
      if (best == computed.end() || dd < bd) {
        best = it;
        bd = dd;
      }
    }
    if (bd > rel * std::max(1.0, std::abs(e))) return false;
    computed.erase(best);
  }
  return true;
}

}  // namespace

Matrix<double> expm(const Matrix<double>& m) {
  const int n = m.rows();
  double nm = inf_norm(m);
  int s = 0;
  if (nm > 0.5) s = static_cast<int>(std::ceil(std::log2(nm / 0.5)));
  Matrix<double> a = m;
  a *= std::ldexp(1.0, -s);
  Matrix<double> sum = Matrix<double>::identity(n);
  Matrix<double> term = Matrix<double>::identity(n);
  for (int k = 1; k < 40; ++k) {
    term = term * a;
    term *= 1.0 / k;
    sum += term;
    if (inf_norm(term) <= 1e-18 * inf_norm(sum)) break;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

template <class T>
std::optional<Matrix<T>> exp_nilpotent(const Matrix<T>& m, const T& t) {
  const int n = m.rows();
  Matrix<T> sum = Matrix<T>::identity(n);
  Matrix<T> term = Matrix<T>::identity(n);
  for (int k = 1; k <= n; ++k) {
    term = term * m;
    term *= t / T(k);
    if (term.is_zero()) return sum;
    sum += term;
  }
  return std::nullopt;
}

template <class T>
OneParam one_param(const Matrix<T>& m, const T& t) {
  OneParam r;
  if constexpr (is_exact_v<T>) {
    r.exact = exp_nilpotent(m, t);
    if (r.exact) {
      r.value = r.exact->to_double();
      return r;
    }
  }
  Matrix<double> a = m.to_double();
  a *= Field<T>::to_double(t);
  r.value = expm(a);
  return r;
}

ScanResult integer_charpoly_scan(const Matrix<double>& D, double t_min, double t_max, long steps,
                                 const Tolerance& tol, long max_crossings) {
  if (!D.square() || D.rows() == 0) throw std::invalid_argument("scan needs a nonempty square matrix");
  if (!(t_max > t_min) || steps < 1) throw std::invalid_argument("scan needs t_max > t_min and steps >= 1");
  ScanResult r;
  const auto eig = eigenvalues(D);
  const int N = D.rows();
  double scale = std::max(1.0, max_abs(D));
  bool zero = std::all_of(eig.begin(), eig.end(), [&](cd z) { return std::abs(z) <= std::sqrt(tol.zero_eps) * scale; });
  if (zero) {
    r.degenerate = true;
    r.note = "spectrum of D is zero: exp(tD) has characteristic polynomial (x - 1)^" + std::to_string(N) +
             " for every t";
    return r;
  }
  auto spectrum = [&](double t) {
    std::vector<cd> s;
    for (const auto& z : eig) s.push_back(std::exp(t * z));
    return s;
  };
  auto coeffs = [&](double t) { return poly_from_roots(spectrum(t)); };
  const std::size_t drive = static_cast<std::size_t>(N - 1);

  const double h = (t_max - t_min) / static_cast<double>(steps);
  double a = t_min;
  double fa = coeffs(a)[drive];
  for (long i = 1; i <= steps && !r.truncated; ++i) {
    double b = i == steps ? t_max : t_min + h * static_cast<double>(i);
    double fb = coeffs(b)[drive];
    double lo = std::ceil(std::min(fa, fb)), hi = std::floor(std::max(fa, fb));
    for (double K = lo; K <= hi; K += 1.0) {
      double ga = fa - K, gb = fb - K;
      double t;
      if (gb == 0.0) {
        t = b;
      } else if (ga == 0.0 || (ga < 0) == (gb < 0)) {
        continue;
      } else {
        t = illinois([&](double x) { return coeffs(x)[drive] - K; }, a, b, ga, gb);
      }
      if (++r.crossings > max_crossings) {
        r.truncated = true;
        break;
      }
      auto c = coeffs(t);
      ScanCandidate cand;
      cand.t0 = t;
      for (double x : c) {
        cand.coeffs.push_back(std::lround(x));
        cand.residual = std::max(cand.residual, std::fabs(x - std::round(x)));
      }
      if (cand.residual > tol.integrality_eps || std::labs(cand.coeffs.front()) != 1) continue;
      std::vector<double> ic(cand.coeffs.begin(), cand.coeffs.end());
      if (!same_spectrum(spectrum(t), roots(ic), 1e-6)) continue;
      if (!r.candidates.empty() && std::fabs(r.candidates.back().t0 - t) < 1e-9) continue;
      r.candidates.push_back(std::move(cand));
    }
    a = b;
    fa = fb;
  }
  r.note = "heuristic grid scan over (" + format_double(t_min) + ", " + format_double(t_max) + "] with " +
           std::to_string(steps) + " steps; a candidate is not a lattice";
  if (r.truncated) r.note += "; truncated after " + std::to_string(max_crossings) + " crossings";
  return r;
}

RootLemmaCase check_root_lemma(const std::vector<long>& coeffs, const Tolerance& tol, double conclusion_eps) {
  if (coeffs.size() < 6 || coeffs.size() % 2 != 0) throw std::invalid_argument("degree must be 2n + 1 with n >= 2");
  if (coeffs.back() != 1) throw std::invalid_argument("leading coefficient must be 1");
  if (coeffs.front() != -1) throw std::invalid_argument("constant term must be -1");
  RootLemmaCase r;
  r.coeffs = coeffs;
  std::vector<Rational> q;
  for (long c : coeffs) q.emplace_back(c);
  QPoly p(q);
  auto factors = squarefree_decomposition(p);

  struct Root {
    cd z;
    bool simple;
  };
  std::vector<Root> all;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].degree() < 1) continue;
    for (const auto& z : roots(factors[k]))
      for (std::size_t m = 0; m <= k; ++m) all.push_back({z, k == 0});
  }
  for (const auto& x : all) r.roots.push_back(x.z);

  // Simple real roots: the count is exact (Sturm), the values come from the numeric roots.
  int real_simple = factors.empty() || factors[0].degree() < 1 ? 0 : count_real_roots(factors[0]);
  std::vector<std::size_t> simple_idx;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].simple) simple_idx.push_back(i);
  std::sort(simple_idx.begin(), simple_idx.end(),
            [&](std::size_t a, std::size_t b) { return std::fabs(all[a].z.imag()) < std::fabs(all[b].z.imag()); });
  simple_idx.resize(static_cast<std::size_t>(real_simple));
  std::sort(simple_idx.begin(), simple_idx.end(),
            [&](std::size_t a, std::size_t b) { return all[a].z.real() < all[b].z.real(); });

  for (std::size_t i0 : simple_idx) {
    double lo = INFINITY, hi = 0.0;
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (j == i0) continue;
      double m = std::abs(all[j].z);
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
    if (hi - lo > tol.integrality_eps * hi) continue;
    r.hypothesis = true;
    r.x0 = all[i0].z.real();
    r.conclusion = std::fabs(*r.x0 - 1.0) <= conclusion_eps;
    for (std::size_t j = 0; j < all.size(); ++j)
      if (j != i0 && std::fabs(std::abs(all[j].z) - 1.0) > conclusion_eps) r.conclusion = false;
    break;
  }
  return r;
}

InoueParams recover_inoue_params(long m2, long m1) {
  QPoly p(std::vector<Rational>{Rational(-1), Rational(m1), Rational(-m2), Rational(1)});
  if (count_real_roots(p) != 1 || squarefree_part(p).degree() != 3)
    throw MathError("cubic has no complex root pair; not a g_b case");
  auto rts = roots(p);
  std::sort(rts.begin(), rts.end(), [](cd a, cd b) { return std::fabs(a.imag()) < std::fabs(b.imag()); });
  InoueParams r;
  r.lambda = rts[0].real();
  if (r.lambda <= 1.0) throw MathError("real root " + format_double(r.lambda) + " is not > 1");
  r.beta = rts[1].imag() > 0 ? rts[1] : rts[2];
  r.t0 = std::log(r.lambda);
  r.b = std::fabs(std::arg(r.beta)) / r.t0;
  r.consistency = std::norm(r.beta) * r.lambda - 1.0;
  return r;
}

template std::optional<Matrix<Rational>> exp_nilpotent(const Matrix<Rational>&, const Rational&);
template std::optional<Matrix<double>> exp_nilpotent(const Matrix<double>&, const double&);
template OneParam one_param(const Matrix<Rational>&, const Rational&);
template OneParam one_param(const Matrix<double>&, const double&);

}  // namespace lck
