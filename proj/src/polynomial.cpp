#include "lck/polynomial.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace lck {

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 0) return p.monic();
  QPoly g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
  std::vector<QPoly> out;
  if (p.degree() <= 0) return out;
  QPoly f = p.monic();
  QPoly a = gcd(f, f.derivative());
  QPoly b = f.divmod(a).first;
  QPoly c = f.derivative().divmod(a).first;
  QPoly d = c - b.derivative();
  while (b.degree() > 0) {
    QPoly g = gcd(b, d);
    out.push_back(g);
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

namespace {

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    QPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(Rational(-1) * r);
  }
  return chain;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int variations_at(const std::vector<QPoly>& chain, const std::optional<Rational>& x, int inf_sign) {
  std::vector<int> signs;
  for (const auto& q : chain) {
    if (q.is_zero()) continue;
    if (x) {
      signs.push_back(sgn(q(*x)));
    } else {
      int s = sgn(q.leading());
      if (inf_sign < 0 && q.degree() % 2 == 1) s = -s;
      signs.push_back(s);
    }
  }
  return sign_changes(signs);
}

}  // namespace

int count_real_roots(const QPoly& p, std::optional<Rational> lo, std::optional<Rational> hi) {
  if (p.degree() <= 0) return 0;
  QPoly s = squarefree_part(p);
  if (s.degree() <= 0) return 0;
  auto chain = sturm_chain(s);
  return variations_at(chain, lo, -1) - variations_at(chain, hi, +1);
}

bool all_roots_real(const QPoly& p) {
  if (p.degree() <= 0) return true;
  QPoly s = squarefree_part(p);
  return count_real_roots(s) == s.degree();
}

bool all_roots_imaginary(const QPoly& p) {
  if (p.degree() <= 0) return true;
  const auto& c = p.coeffs();
  std::size_t e = 0;
  while (e < c.size() && sgn(c[e]) == 0) ++e;
  std::vector<Rational> q;
  for (std::size_t i = e; i < c.size(); ++i) {
    if ((i - e) % 2 == 1) {
      if (sgn(c[i]) != 0) return false;
    } else {
      q.push_back(c[i]);
    }
  }
  QPoly qp(std::move(q));
  if (qp.degree() <= 0) return true;
  QPoly s = squarefree_part(qp);
  return count_real_roots(s, std::nullopt, Rational(0)) == s.degree();
}

std::vector<std::complex<double>> eigenvalues(const Matrix<double>& m) {
  if (!m.square()) throw std::invalid_argument("eigenvalues of non-square matrix");
  const int n = m.rows();
  if (n == 0) return {};
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m(i, j);
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  return out;
}

namespace {

using cd = std::complex<double>;

std::pair<cd, cd> eval_with_derivative(const std::vector<double>& c, cd z) {
  cd p = 0.0, dp = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

}  // namespace

std::vector<std::complex<double>> roots(const std::vector<double>& coeffs) {
  std::vector<double> c = coeffs;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.size() <= 1) return {};
  const int n = static_cast<int>(c.size()) - 1;
  Matrix<double> comp(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  std::vector<cd> z = eigenvalues(comp);

  // Aberth polishing; an update is kept only if it lowers |p|.
  for (int iter = 0; iter < 50; ++iter) {
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      auto [p, dp] = eval_with_derivative(c, z[static_cast<std::size_t>(k)]);
      if (std::abs(p) == 0.0 || std::abs(dp) == 0.0) continue;
      cd ratio = p / dp;
      cd sum = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        cd diff = z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)];
        if (std::abs(diff) > 0.0) sum += 1.0 / diff;
      }
      cd w = ratio / (1.0 - ratio * sum);
      cd cand = z[static_cast<std::size_t>(k)] - w;
      if (std::abs(eval_with_derivative(c, cand).first) < std::abs(p)) {
        z[static_cast<std::size_t>(k)] = cand;
        worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(cand)));
      }
    }
    if (worst < 1e-16) break;
  }
  std::sort(z.begin(), z.end(), [](cd a, cd b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

}  // namespace lck
