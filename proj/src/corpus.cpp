#include "lck/corpus.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <set>
#include <sstream>

namespace lck {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

Rational q(long n, long d = 1) { return frac(n, d); }

std::string fmt(const Rational& x) { return format_rational(x); }

Json json_list(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

Json json_ints(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

Json json_q(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(fmt(x));
  return a;
}

template <class F>
auto parse_guard(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  std::vector<std::string> r;
  for (const auto& x : j) {
    if (x.is_string())
      r.push_back(x.get<std::string>());
    else if (x.is_number_integer())
      r.push_back(std::to_string(x.get<long long>()));
    else if (x.is_number())
      r.push_back(format_double(x.get<double>()));
    else
      throw ParseError(what + " entries must be numbers or numeric strings");
  }
  return r;
}

StringMatrix string_matrix(const Json& j, int dim, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) throw ParseError(what + " must have " + std::to_string(dim) + " rows");
  StringMatrix m;
  for (const auto& row : j) {
    auto r = string_list(row, what);
    if (static_cast<int>(r.size()) != dim) throw ParseError(what + " rows must have " + std::to_string(dim) + " entries");
    m.push_back(std::move(r));
  }
  return m;
}

Json matrix_json(const StringMatrix& m) {
  Json a = Json::array();
  for (const auto& r : m) a.push_back(json_list(r));
  return a;
}

template <class T>
Matrix<T> parse_matrix(const StringMatrix& m) {
  const int n = static_cast<int>(m.size());
  Matrix<T> r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = Field<T>::parse(m[sz(i)][sz(j)]);
  return r;
}

template <class T>
StringMatrix format_matrix(const Matrix<T>& m) {
  StringMatrix r;
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    for (int j = 0; j < m.cols(); ++j) row.push_back(Field<T>::format(m(i, j)));
    r.push_back(std::move(row));
  }
  return r;
}

// Exact Hermitian algebra from brackets given as (i, j, {k: coeff}).
struct Term {
  int i, j, k;
  Rational c;
};

LieAlgebra<Rational> algebra(int n, std::vector<std::string> labels, const std::vector<Term>& terms) {
  std::map<std::pair<int, int>, Vec<Rational>> m;
  for (const auto& t : terms) {
    auto& v = m[{t.i, t.j}];
    if (v.empty()) v = zero_vec<Rational>(n);
    v[sz(t.k)] += t.c;
  }
  std::vector<BracketEntry<Rational>> br;
  for (auto& [ij, v] : m) br.push_back({ij.first, ij.second, std::move(v)});
  return LieAlgebra<Rational>(n, std::move(labels), std::move(br));
}

// J from pairs (x, y) meaning Jx = y, Jy = -x.
Matrix<Rational> pairing_j(int n, const std::vector<std::pair<int, int>>& pairs) {
  Matrix<Rational> J(n, n);
  for (auto [x, y] : pairs) {
    J(y, x) = Rational(1);
    J(x, y) = Rational(-1);
  }
  return J;
}

AlgebraFile hermitian_file(std::string name, const LieAlgebra<Rational>& L, const Matrix<Rational>& G,
                           const Matrix<Rational>& J, bool with_theta) {
  Metric<Rational> g(G);
  ComplexStructure<Rational> cj(J);
  if (!is_compatible(cj, g)) throw std::logic_error("builder produced an incompatible J");
  KForm<Rational> omega = fundamental_form(g, cj);
  std::optional<KForm<Rational>> theta;
  if (with_theta) theta = lee_form_solve(L, omega);
  return make_file(std::move(name), L, std::optional(g), std::optional(cj), theta, std::optional(omega));
}

std::vector<int> heisenberg_betti(int n) {
  // h_{2n+1}: b_k = C(2n, k) - C(2n, k-2) for k <= n, symmetric; then times R.
  auto C = [](int a, int b) -> long {
    if (b < 0 || b > a) return 0;
    long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  const int m = 2 * n + 1;
  std::vector<int> h(sz(m + 1));
  for (int k = 0; k <= n; ++k) {
    h[sz(k)] = static_cast<int>(C(2 * n, k) - C(2 * n, k - 2));
    h[sz(m - k)] = h[sz(k)];
  }
  std::vector<int> r(sz(m + 2), 0);
  for (int k = 0; k <= m; ++k) {
    r[sz(k)] += h[sz(k)];
    r[sz(k + 1)] += h[sz(k)];
  }
  return r;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string r;
  for (std::size_t i = 0; i < v.size(); ++i) r += (i ? sep : "") + v[i];
  return r;
}

// key=value parameter helpers for the registry.
std::string param(const std::map<std::string, std::string>& p, const std::string& key, const std::string& def) {
  auto it = p.find(key);
  return it == p.end() ? def : it->second;
}

Rational q_param(const std::map<std::string, std::string>& p, const std::string& key, const std::string& def) {
  return parse_rational(param(p, key, def));
}

int int_param(const std::map<std::string, std::string>& p, const std::string& key, const std::string& def) {
  Rational r = q_param(p, key, def);
  if (r.get_den() != 1 || !r.get_num().fits_sint_p()) throw ParseError(key + " must be an integer");
  return static_cast<int>(r.get_num().get_si());
}

std::vector<Rational> q_list(const std::map<std::string, std::string>& p, const std::string& key,
                             const std::string& def) {
  std::string s = param(p, key, def);
  std::vector<Rational> r;
  if (s.empty()) return r;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) r.push_back(parse_rational(item));
  return r;
}

void check_keys(const std::map<std::string, std::string>& p, const std::set<std::string>& allowed) {
  for (const auto& [k, v] : p)
    if (!allowed.count(k)) throw ParseError("unknown parameter '" + k + "'");
}

}  // namespace

std::string to_string(ScalarMode m) { return m == ScalarMode::exact ? "exact" : "approx"; }

ScalarMode parse_mode(std::string_view s) {
  if (s == "exact") return ScalarMode::exact;
  if (s == "approx") return ScalarMode::approx;
  throw ParseError("mode must be 'exact' or 'approx', got '" + std::string(s) + "'");
}

AlgebraFile parse_algebra_file(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_guard("malformed algebra file", [&] {
    if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
    if (!j.contains("schema") || j["schema"] != schema_version)
      throw ParseError("unsupported or missing schema (expected " + std::to_string(schema_version) + ")");
    static const std::set<std::string> known{"schema", "name", "mode",  "dim",   "labels",  "brackets",
                                             "metric", "J",    "theta", "omega", "metadata"};
    for (const auto& [k, v] : j.items())
      if (!known.count(k)) throw ParseError("unknown field '" + k + "'");
    AlgebraFile f;
    f.name = j.at("name").get<std::string>();
    f.mode = parse_mode(j.value("mode", std::string("exact")));
    f.dim = j.at("dim").get<int>();
    if (f.dim < 1 || f.dim > max_form_dim) throw ParseError("dim must be between 1 and " + std::to_string(max_form_dim));
    for (const auto& l : j.at("labels")) f.labels.push_back(l.get<std::string>());
    if (static_cast<int>(f.labels.size()) != f.dim) throw ParseError("labels must have dim entries");
    std::set<std::string> uniq(f.labels.begin(), f.labels.end());
    if (static_cast<int>(uniq.size()) != f.dim) throw ParseError("labels must be distinct");
    std::set<std::pair<int, int>> seen;
    for (const auto& b : j.value("brackets", Json::array())) {
      BracketSpec s;
      s.i = b.at("i").get<int>();
      s.j = b.at("j").get<int>();
      if (s.i < 0 || s.j >= f.dim || s.i >= s.j)
        throw ParseError("bracket indices must satisfy 0 <= i < j < dim, got (" + std::to_string(s.i) + ", " +
                         std::to_string(s.j) + ")");
      if (!seen.insert({s.i, s.j}).second) throw ParseError("duplicate bracket entry");
      s.coeffs = string_list(b.at("coeffs"), "bracket coefficients");
      if (static_cast<int>(s.coeffs.size()) != f.dim) throw ParseError("bracket coefficient vector must have dim entries");
      f.brackets.push_back(std::move(s));
    }
    if (j.contains("metric")) f.metric = string_matrix(j["metric"], f.dim, "metric");
    if (j.contains("J")) f.J = string_matrix(j["J"], f.dim, "J");
    if (j.contains("theta")) {
      f.theta = string_list(j["theta"], "theta");
      if (static_cast<int>(f.theta->size()) != f.dim) throw ParseError("theta must have dim entries");
    }
    if (j.contains("omega")) {
      f.omega.emplace();
      for (const auto& t : j["omega"]) {
        OmegaTerm o;
        o.indices = t.at("indices").get<std::vector<int>>();
        if (o.indices.size() != 2) throw ParseError("omega terms need exactly two indices");
        for (int x : o.indices)
          if (x < 0 || x >= f.dim) throw ParseError("omega index out of range");
        const auto& c = t.at("coefficient");
        o.coefficient = c.is_string() ? c.get<std::string>() : string_list(Json::array({c}), "omega")[0];
        f.omega->push_back(std::move(o));
      }
    }
    if (j.contains("metadata")) {
      if (!j["metadata"].is_object()) throw ParseError("metadata must be an object");
      f.metadata = j["metadata"];
    }
    return f;
  });
}

std::string to_json_text(const AlgebraFile& f) {
  Json j;
  j["schema"] = schema_version;
  j["name"] = f.name;
  j["mode"] = to_string(f.mode);
  j["dim"] = f.dim;
  j["labels"] = json_list(f.labels);
  Json br = Json::array();
  for (const auto& b : f.brackets) br.push_back(Json{{"i", b.i}, {"j", b.j}, {"coeffs", json_list(b.coeffs)}});
  j["brackets"] = br;
  if (f.metric) j["metric"] = matrix_json(*f.metric);
  if (f.J) j["J"] = matrix_json(*f.J);
  if (f.theta) j["theta"] = json_list(*f.theta);
  if (f.omega) {
    Json om = Json::array();
    for (const auto& t : *f.omega) om.push_back(Json{{"indices", json_ints(t.indices)}, {"coefficient", t.coefficient}});
    j["omega"] = om;
  }
  j["metadata"] = f.metadata;
  return j.dump(2) + "\n";
}

AlgebraFile read_algebra_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + p.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra_file(ss.str());
}

void write_algebra_file(const std::filesystem::path& p, const AlgebraFile& f) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + p.string() + "'");
  out << to_json_text(f);
}

template <class T>
HermitianAlgebra<T> LoadedAlgebra<T>::hermitian() const {
  if (!g || !J) throw MathError("file has no metric and complex structure");
  return {L, *g, *J};
}

template <class T>
LoadedAlgebra<T> load(const AlgebraFile& f, const Tolerance& tol) {
  const int n = f.dim;
  std::vector<BracketEntry<T>> br;
  for (const auto& b : f.brackets) {
    Vec<T> v;
    for (const auto& c : b.coeffs) v.push_back(Field<T>::parse(c));
    br.push_back({b.i, b.j, std::move(v)});
  }
  LieAlgebra<T> L = parse_guard("invalid bracket table", [&] { return LieAlgebra<T>(n, f.labels, std::move(br), tol); });
  LoadedAlgebra<T> r{std::move(L), std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  if (f.metric) r.g.emplace(parse_matrix<T>(*f.metric), tol);
  if (f.J) r.J.emplace(parse_matrix<T>(*f.J), tol);
  if (f.theta) {
    Vec<T> v;
    for (const auto& c : *f.theta) v.push_back(Field<T>::parse(c));
    r.theta = KForm<T>::from_covector(v);
  }
  if (f.omega) {
    std::vector<std::pair<std::vector<int>, T>> terms;
    for (const auto& t : *f.omega) terms.emplace_back(t.indices, Field<T>::parse(t.coefficient));
    r.omega = KForm<T>::from_terms(n, 2, terms);
  }
  return r;
}

template <class T>
AlgebraFile make_file(std::string name, const LieAlgebra<T>& L, const std::optional<Metric<T>>& g,
                      const std::optional<ComplexStructure<T>>& J, const std::optional<KForm<T>>& theta,
                      const std::optional<KForm<T>>& omega) {
  AlgebraFile f;
  f.name = std::move(name);
  f.mode = Field<T>::mode;
  f.dim = L.dim();
  f.labels = L.labels();
  for (const auto& b : L.brackets()) {
    BracketSpec s{b.i, b.j, {}};
    for (const auto& c : b.coeffs) s.coeffs.push_back(Field<T>::format(c));
    f.brackets.push_back(std::move(s));
  }
  if (g) f.metric = format_matrix(g->gram());
  if (J) f.J = format_matrix(J->matrix());
  if (theta) {
    f.theta.emplace();
    for (const auto& c : theta->covector()) f.theta->push_back(Field<T>::format(c));
  }
  if (omega) {
    f.omega.emplace();
    for (const auto& [idx, c] : omega->terms(L.tolerance())) f.omega->push_back({idx, Field<T>::format(c)});
  }
  return f;
}

AlgebraFile heisenberg_r(int n, const Rational& lambda) {
  if (n < 1 || 2 * n + 2 > max_form_dim) throw std::invalid_argument("heisenberg_r needs 1 <= n <= 7");
  if (sgn(lambda) <= 0) throw std::invalid_argument("heisenberg_r needs lambda > 0");
  const int dim = 2 * n + 2, z1 = 2 * n, z2 = 2 * n + 1;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("X" + std::to_string(i));
  for (int i = 1; i <= n; ++i) labels.push_back("Y" + std::to_string(i));
  labels.push_back("Z1");
  labels.push_back("Z2");
  std::vector<Term> t;
  for (int i = 0; i < n; ++i) t.push_back({i, n + i, z1, q(1)});
  auto L = algebra(dim, labels, t);
  Matrix<Rational> G = Matrix<Rational>::identity(dim);
  G(z1, z1) = 1 / lambda;
  G(z2, z2) = 1 / lambda;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.push_back({i, n + i});
  pairs.push_back({z2, z1});  // J Z2 = Z1, J Z1 = -Z2
  Rational lam = lambda;
  lam.canonicalize();
  auto f = hermitian_file("heisenberg_r(" + std::to_string(n) + "," + fmt(lam) + ")", L, G, pairing_j(dim, pairs), true);
  std::vector<Rational> lee(sz(dim), q(0));
  lee[sz(z2)] = 1 / lam;
  Json& m = f.metadata;
  m["unimodular"] = true;
  m["nilpotent"] = true;
  m["solvable"] = true;
  m["lck"] = "LCK";
  m["lee_form"] = json_q(lee);
  m["vaisman"] = true;
  m["center_dim"] = 2;
  m["betti"] = json_ints(heisenberg_betti(n));
  m["twisted_betti_lee"] = json_ints(std::vector<int>(sz(dim + 1), 0));
  m["canonical_trivial"] = true;
  m["lcs_kind"] = "first";
  m["note"] = "R x h_" + std::to_string(2 * n + 1) + " with |Z1|^2 = |Z2|^2 = 1/lambda";
  return f;
}

SurfaceKind parse_surface_kind(std::string_view s) {
  if (s == "torus") return SurfaceKind::torus;
  if (s == "kodaira1") return SurfaceKind::kodaira1;
  if (s == "kodaira2") return SurfaceKind::kodaira2;
  if (s == "inoue_s0") return SurfaceKind::inoue_s0;
  if (s == "inoue_splus") return SurfaceKind::inoue_splus;
  if (s == "hyperelliptic") return SurfaceKind::hyperelliptic;
  throw ParseError("unknown surface kind '" + std::string(s) + "'");
}

std::string to_string(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::torus: return "torus";
    case SurfaceKind::kodaira1: return "kodaira1";
    case SurfaceKind::kodaira2: return "kodaira2";
    case SurfaceKind::inoue_s0: return "inoue_s0";
    case SurfaceKind::inoue_splus: return "inoue_splus";
    case SurfaceKind::hyperelliptic: return "hyperelliptic";
  }
  return "?";
}

AlgebraFile surface(SurfaceKind kind, const Rational& b) {
  enum { A, X, Y, Z };
  std::vector<Term> t;
  const Rational h = q(1, 2);
  switch (kind) {
    case SurfaceKind::torus: break;
    case SurfaceKind::kodaira1: t = {{X, Y, Z, q(1)}}; break;
    case SurfaceKind::kodaira2: t = {{X, Y, Z, q(1)}, {A, X, Y, q(1)}, {A, Y, X, q(-1)}}; break;
    case SurfaceKind::inoue_s0:
      t = {{A, X, X, -h}, {A, X, Y, b}, {A, Y, X, -b}, {A, Y, Y, -h}, {A, Z, Z, q(1)}};
      break;
    case SurfaceKind::inoue_splus: t = {{X, Z, Y, q(-1)}, {A, X, X, q(1)}, {A, Z, Z, q(-1)}}; break;
    case SurfaceKind::hyperelliptic: t = {{A, X, Y, q(-1)}, {A, Y, X, q(1)}}; break;
  }
  auto L = algebra(4, {"A", "X", "Y", "Z"}, t);
  std::string name = "surface(" + to_string(kind) + (kind == SurfaceKind::inoue_s0 ? "," + fmt(b) : "") + ")";
  auto f = hermitian_file(name, L, Matrix<Rational>::identity(4), pairing_j(4, {{X, Y}, {A, Z}}), true);
  Json& m = f.metadata;
  m["unimodular"] = true;
  m["solvable"] = true;
  const Json alpha = json_q({q(1), q(0), q(0), q(0)});
  const Json minus_alpha = json_q({q(-1), q(0), q(0), q(0)});
  switch (kind) {
    case SurfaceKind::torus:
      m["nilpotent"] = true;
      m["lck"] = "Kahler";
      m["betti"] = json_ints({1, 4, 6, 4, 1});
      m["center_dim"] = 4;
      m["note"] = "complex torus; the invariant structure is Kahler";
      break;
    case SurfaceKind::kodaira1:
      m["nilpotent"] = true;
      m["lck"] = "LCK";
      m["paper_lee_form"] = alpha;
      m["vaisman"] = true;
      m["betti"] = json_ints({1, 3, 4, 3, 1});
      m["center_dim"] = 2;
      m["canonical_trivial"] = true;
      m["note"] = "primary Kodaira surface";
      break;
    case SurfaceKind::kodaira2:
      m["nilpotent"] = false;
      m["lck"] = "LCK";
      m["paper_lee_form"] = alpha;
      m["vaisman"] = true;
      m["canonical_trivial"] = false;
      m["note"] = "secondary Kodaira surface";
      break;
    case SurfaceKind::inoue_s0:
      m["nilpotent"] = false;
      m["completely_solvable"] = sgn(b) == 0 ? "yes" : "no";
      m["lck"] = "LCK";
      m["paper_lee_form"] = alpha;
      m["vaisman"] = false;
      m["betti"] = json_ints({1, 1, 0, 1, 1});
      m["twisted_betti_lee"] = json_ints({0, 0, 1, 1, 0});
      m["note"] = "Inoue surface of type S0";
      break;
    case SurfaceKind::inoue_splus:
      m["nilpotent"] = false;
      m["completely_solvable"] = "yes";
      m["lck"] = "LCK";
      m["paper_lee_form"] = minus_alpha;
      m["vaisman"] = false;
      m["betti"] = json_ints({1, 1, 0, 1, 1});
      m["twisted_betti_lee"] = json_ints({0, 1, 2, 1, 0});
      m["note"] = "Inoue surface of type S+";
      break;
    case SurfaceKind::hyperelliptic:
      m["nilpotent"] = false;
      m["lck"] = "Kahler";
      m["note"] = "hyperelliptic surface; the invariant structure is Kahler";
      break;
  }
  return f;
}

AlgebraFile g_b(const Rational& b) {
  std::vector<Term> t{{0, 1, 1, q(1)}, {0, 2, 2, q(-1, 2)}, {0, 2, 3, b}, {0, 3, 2, -b}, {0, 3, 3, q(-1, 2)}};
  auto L = algebra(4, {"f1", "e1", "e2", "e3"}, t);
  auto f = make_file<Rational>("g_b(" + fmt(b) + ")", L);
  Json& m = f.metadata;
  m["unimodular"] = true;
  m["solvable"] = true;
  m["nilpotent"] = false;
  m["completely_solvable"] = sgn(b) == 0 ? "yes" : "no";
  m["note"] = "almost abelian R f1 x R^3 with ad_f1 = diag(1, [[-1/2, -b], [b, -1/2]])";
  return f;
}

AlgebraFile almost_abelian_lck(int n, const Rational& mu, const Rational& lambda, const std::vector<Rational>& b) {
  if (n < 1 || 2 * n + 2 > max_form_dim) throw std::invalid_argument("almost_abelian_lck needs 1 <= n <= 7");
  if (sgn(lambda) == 0) throw std::invalid_argument("almost_abelian_lck needs lambda != 0");
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("almost_abelian_lck needs n rotation constants");
  const int dim = 2 * n + 2;
  std::vector<std::string> labels{"f1", "f2"};
  for (int i = 1; i <= 2 * n; ++i) labels.push_back("a" + std::to_string(i));
  std::vector<Term> t{{0, 1, 1, mu}};
  std::vector<std::pair<int, int>> pairs{{0, 1}};
  for (int i = 0; i < n; ++i) {
    int x = 2 + 2 * i, y = x + 1;
    t.push_back({0, x, x, lambda});
    t.push_back({0, x, y, b[sz(i)]});
    t.push_back({0, y, x, -b[sz(i)]});
    t.push_back({0, y, y, lambda});
    pairs.push_back({x, y});
  }
  auto L = algebra(dim, labels, t);
  std::vector<std::string> bs;
  for (const auto& x : b) bs.push_back(fmt(x));
  std::string name = "almost_abelian_lck(" + std::to_string(n) + "," + fmt(mu) + "," + fmt(lambda) + ",[" + join(bs, ",") + "])";
  auto f = hermitian_file(name, L, Matrix<Rational>::identity(dim), pairing_j(dim, pairs), true);
  std::vector<Rational> lee(sz(dim), q(0));
  lee[0] = -2 * lambda;
  Json& m = f.metadata;
  bool unimodular = mu + 2 * n * lambda == 0;
  m["unimodular"] = unimodular;
  m["solvable"] = true;
  m["nilpotent"] = false;
  m["lck"] = "LCK";
  m["lee_form"] = json_q(lee);
  m["vaisman"] = false;
  if (n >= 2) m["lcs_kind"] = "second";
  m["note"] = "[f1,f2] = mu f2, ad_f1|a = lambda Id + B, B in u(n)";
  return f;
}

AlgebraFile ot(int s, int t, const std::vector<std::vector<Rational>>& b, const std::vector<std::vector<Rational>>& c) {
  if (s < 1 || t < 1 || 2 * (s + t) > max_form_dim) throw std::invalid_argument("ot needs s, t >= 1 and s + t <= 8");
  auto shape_ok = [&](const std::vector<std::vector<Rational>>& m) {
    if (static_cast<int>(m.size()) != s) return false;
    for (const auto& r : m)
      if (static_cast<int>(r.size()) != t) return false;
    return true;
  };
  if (!shape_ok(b) || !shape_ok(c)) throw std::invalid_argument("ot needs s x t matrices b and c");
  const int dim = 2 * (s + t);
  std::vector<std::string> labels;
  for (int j = 1; j <= s; ++j) labels.push_back("A" + std::to_string(j));
  for (int j = 1; j <= s; ++j) labels.push_back("B" + std::to_string(j));
  for (int k = 1; k <= 2 * t; ++k) labels.push_back("C" + std::to_string(k));
  std::vector<Term> terms;
  std::vector<std::pair<int, int>> pairs;
  const Rational h = q(1, 2);
  bool unimodular = true;
  for (int j = 0; j < s; ++j) {
    terms.push_back({j, s + j, s + j, q(1)});
    pairs.push_back({j, s + j});
    Rational tr(1);
    for (int k = 0; k < t; ++k) {
      int c1 = 2 * s + 2 * k, c2 = c1 + 1;
      const Rational& bjk = b[sz(j)][sz(k)];
      const Rational& cjk = c[sz(j)][sz(k)];
      terms.push_back({j, c1, c1, -h * bjk});
      terms.push_back({j, c1, c2, cjk});
      terms.push_back({j, c2, c1, -cjk});
      terms.push_back({j, c2, c2, -h * bjk});
      tr -= bjk;
    }
    if (tr != 0) unimodular = false;
  }
  for (int k = 0; k < t; ++k) pairs.push_back({2 * s + 2 * k, 2 * s + 2 * k + 1});
  auto L = algebra(dim, labels, terms);
  Matrix<Rational> J = pairing_j(dim, pairs);
  std::ostringstream name;
  name << "ot(" << s << "," << t << ",b=[";
  for (int j = 0; j < s; ++j)
    for (int k = 0; k < t; ++k) name << (j + k ? "," : "") << fmt(b[sz(j)][sz(k)]);
  name << "],c=[";
  for (int j = 0; j < s; ++j)
    for (int k = 0; k < t; ++k) name << (j + k ? "," : "") << fmt(c[sz(j)][sz(k)]);
  name << "])";
  AlgebraFile f;
  if (t == 1) {
    // omega = 2 sum a_i^b_i + sum_{i != j} a_i^b_j + c_1^c_2 and g = omega(., J .)
    Matrix<Rational> W(dim, dim);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        W(i, s + j) = i == j ? q(2) : q(1);
        W(s + j, i) = -W(i, s + j);
      }
    W(2 * s, 2 * s + 1) = q(1);
    W(2 * s + 1, 2 * s) = q(-1);
    Matrix<Rational> G = W * J;
    f = hermitian_file(name.str(), L, G, J, true);
    std::vector<Rational> lee(sz(dim), q(0));
    for (int i = 0; i < s; ++i) lee[sz(i)] = q(1);
    f.metadata["lck"] = "LCK";
    f.metadata["lee_form"] = json_q(lee);
    f.metadata["vaisman"] = false;
  } else {
    f = make_file<Rational>(name.str(), L, std::nullopt, std::optional(ComplexStructure<Rational>(J)));
  }
  f.metadata["unimodular"] = unimodular;
  f.metadata["solvable"] = true;
  f.metadata["nilpotent"] = false;
  f.metadata["note"] = "OT Lie algebra of type (s,t)";
  return f;
}

AlgebraFile fibrado(int n, const std::vector<Rational>& a) {
  if (n < 2 || 2 * n > max_form_dim) throw std::invalid_argument("fibrado needs 2 <= n <= 8");
  if (static_cast<int>(a.size()) != n - 1) throw std::invalid_argument("fibrado needs n - 1 constants");
  const int dim = 2 * n;
  std::vector<std::string> labels{"A", "B"};
  for (int i = 1; i <= 2 * n - 2; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<Term> t;
  std::vector<std::pair<int, int>> pairs{{0, 1}};
  Rational sum(0);
  bool zero = true;
  for (int i = 0; i < n - 1; ++i) {
    int x = 2 + 2 * i, y = x + 1;
    t.push_back({x, y, 1, q(1)});
    t.push_back({0, x, y, a[sz(i)]});
    t.push_back({0, y, x, -a[sz(i)]});
    pairs.push_back({x, y});
    sum += a[sz(i)];
    if (a[sz(i)] != 0) zero = false;
  }
  auto L = algebra(dim, labels, t);
  std::vector<std::string> as;
  for (const auto& x : a) as.push_back(fmt(x));
  auto f = hermitian_file("fibrado(" + std::to_string(n) + ",[" + join(as, ",") + "])", L,
                          Matrix<Rational>::identity(dim), pairing_j(dim, pairs), true);
  std::vector<Rational> lee(sz(dim), q(0));
  lee[0] = q(1);
  Json& m = f.metadata;
  m["unimodular"] = true;
  m["solvable"] = true;
  m["nilpotent"] = zero;
  m["lck"] = "LCK";
  m["lee_form"] = json_q(lee);
  m["vaisman"] = true;
  m["center_dim"] = zero ? 2 : 1;
  m["canonical_trivial"] = sum == 0;
  m["lcs_kind"] = "first";
  m["note"] = "R A x_D h_" + std::to_string(2 * n - 1) + " with D = rotations a_i";
  return f;
}

AlgebraFile sawai_ot6() {
  using cd = std::complex<double>;
  // Roots of x^4 - 2x^3 - 2x^2 + x + 1 to 30 significant digits.
  const std::string a1s = "0.775918595324391298293772709615";
  const std::string a2s = "2.56811485944015571005516191620";
  const std::string bre = "-0.672016727382273504174467312908";
  const std::string bim = "0.224138976542087655158059510791";
  const double a1 = parse_double(a1s), a2 = parse_double(a2s);
  const cd beta(parse_double(bre), parse_double(bim));
  auto prime = [](cd x) { return 1.0 / x + 1.0 / (x * x); };
  const double a1p = prime(a1).real(), a2p = prime(a2).real();
  const cd betap = prime(beta);
  // A_j = sum_a M_ja T_a with M = L^{-1}, L = [[log a1, log a2], [log a1', log a2']] so that [A_j, B_i] = delta_ij B_i.
  const double l11 = std::log(a1), l12 = std::log(a2), l21 = std::log(a1p), l22 = std::log(a2p);
  const double det = l11 * l22 - l12 * l21;
  const double M[2][2] = {{l22 / det, -l12 / det}, {-l21 / det, l11 / det}};
  double re[2], im[2];
  for (int j = 0; j < 2; ++j) {
    re[j] = M[j][0] * std::log(std::abs(beta)) + M[j][1] * std::log(std::abs(betap));
    im[j] = M[j][0] * std::arg(beta) + M[j][1] * std::arg(betap);
  }
  const int dim = 6;
  auto e = [&](int k, double v) {
    Vec<double> x = zero_vec<double>(dim);
    x[sz(k)] = v;
    return x;
  };
  std::vector<BracketEntry<double>> br;
  for (int j = 0; j < 2; ++j) {
    br.push_back({j, 2 + j, e(2 + j, 1.0)});
    // multiplication by re + i im on C1 + i C2
    Vec<double> c1 = e(4, re[j]);
    c1[5] = im[j];
    Vec<double> c2 = e(4, -im[j]);
    c2[5] = re[j];
    br.push_back({j, 4, c1});
    br.push_back({j, 5, c2});
  }
  LieAlgebra<double> L(dim, {"A1", "A2", "B1", "B2", "C1", "C2"}, std::move(br));
  Matrix<double> J(dim, dim);
  for (auto [x, y] : std::vector<std::pair<int, int>>{{0, 2}, {1, 3}, {4, 5}}) {
    J(y, x) = 1.0;
    J(x, y) = -1.0;
  }
  Matrix<double> W(dim, dim);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      W(i, 2 + j) = i == j ? 2.0 : 1.0;
      W(2 + j, i) = -W(i, 2 + j);
    }
  W(4, 5) = 1.0;
  W(5, 4) = -1.0;
  Metric<double> g(W * J);
  ComplexStructure<double> cj(J);
  KForm<double> omega = fundamental_form(g, cj);
  auto theta = lee_form_solve(L, omega);
  auto f = make_file<double>("sawai_ot6", L, std::optional(g), std::optional(cj), theta, std::optional(omega));
  Json& m = f.metadata;
  m["unimodular"] = true;
  m["solvable"] = true;
  m["nilpotent"] = false;
  m["lck"] = "LCK";
  m["lee_form"] = json_list({"1", "1", "0", "0", "0", "0"});
  m["vaisman"] = false;
  m["betti"] = json_ints({1, 2, 1, 0, 1, 2, 1});
  m["twisted_betti_lee"] = json_ints({0, 0, 1, 2, 1, 0, 0});
  m["note"] = "OT type (2,1) from f1 = x^4-2x^3-2x^2+x+1 and f2 = x^4-4x^3+4x^2-3x+1 (roots of f2 are a^-1 + a^-2)";
  m["roots"] = json_list({a1s, a2s, bre + "+" + bim + "i", bre + "-" + bim + "i"});
  return f;
}

const std::vector<CorpusEntry>& corpus_registry() {
  using P = std::map<std::string, std::string>;
  static const std::vector<CorpusEntry> reg{
      {"heisenberg_r", "n=1 lambda=1",
       [](const P& p) {
         check_keys(p, {"n", "lambda"});
         return heisenberg_r(int_param(p, "n", "1"), q_param(p, "lambda", "1"));
       }},
      {"surface", "kind=torus|kodaira1|kodaira2|inoue_s0|inoue_splus|hyperelliptic b=0",
       [](const P& p) {
         check_keys(p, {"kind", "b"});
         return surface(parse_surface_kind(param(p, "kind", "inoue_splus")), q_param(p, "b", "0"));
       }},
      {"g_b", "b=0",
       [](const P& p) {
         check_keys(p, {"b"});
         return g_b(q_param(p, "b", "0"));
       }},
      {"almost_abelian_lck", "n=2 mu=1 lambda=-1/4 b=0,0",
       [](const P& p) {
         check_keys(p, {"n", "mu", "lambda", "b"});
         int n = int_param(p, "n", "2");
         auto b = q_list(p, "b", join(std::vector<std::string>(sz(n), "0"), ","));
         return almost_abelian_lck(n, q_param(p, "mu", "1"), q_param(p, "lambda", "-1/4"), b);
       }},
      {"ot", "s=2 t=1 b=1,1 c=3/7,-2/5 (b, c row-major s x t)",
       [](const P& p) {
         check_keys(p, {"s", "t", "b", "c"});
         int s = int_param(p, "s", "2"), t = int_param(p, "t", "1");
         auto fb = q_list(p, "b", "1,1"), fc = q_list(p, "c", "3/7,-2/5");
         if (s < 1 || t < 1 || static_cast<int>(fb.size()) != s * t || static_cast<int>(fc.size()) != s * t)
           throw ParseError("b and c need s*t entries");
         std::vector<std::vector<Rational>> b(sz(s)), c(sz(s));
         for (int j = 0; j < s; ++j)
           for (int k = 0; k < t; ++k) {
             b[sz(j)].push_back(fb[sz(j * t + k)]);
             c[sz(j)].push_back(fc[sz(j * t + k)]);
           }
         return ot(s, t, b, c);
       }},
      {"fibrado", "n=3 a=1,-1",
       [](const P& p) {
         check_keys(p, {"n", "a"});
         return fibrado(int_param(p, "n", "3"), q_list(p, "a", "1,-1"));
       }},
      {"sawai_ot6", "",
       [](const P& p) {
         check_keys(p, {});
         return sawai_ot6();
       }},
  };
  return reg;
}

AlgebraFile emit(const std::string& name, const std::map<std::string, std::string>& params) {
  for (const auto& e : corpus_registry())
    if (e.name == name) return parse_guard("invalid parameters for " + name, [&] { return e.build(params); });
  throw ParseError("unknown corpus entry '" + name + "'");
}

std::vector<AlgebraFile> standard_corpus() {
  std::vector<AlgebraFile> r;
  for (int n = 1; n <= 3; ++n) r.push_back(heisenberg_r(n, q(1)));
  r.push_back(heisenberg_r(1, q(2)));
  r.push_back(heisenberg_r(1, q(1, 2)));
  r.push_back(surface(SurfaceKind::torus));
  r.push_back(surface(SurfaceKind::kodaira1));
  r.push_back(surface(SurfaceKind::kodaira2));
  r.push_back(surface(SurfaceKind::inoue_s0, q(1, 3)));
  r.push_back(surface(SurfaceKind::inoue_splus));
  r.push_back(surface(SurfaceKind::hyperelliptic));
  r.push_back(g_b(q(0)));
  r.push_back(g_b(q(1)));
  r.push_back(almost_abelian_lck(2, q(1), q(-1, 4), {q(0), q(0)}));
  r.push_back(almost_abelian_lck(2, q(2), q(-1, 2), {q(1), q(3)}));
  r.push_back(almost_abelian_lck(1, q(1), q(1), {q(0)}));
  r.push_back(ot(2, 1, {{q(1)}, {q(1)}}, {{q(3, 7)}, {q(-2, 5)}}));
  r.back().metadata["betti"] = json_ints({1, 2, 1, 0, 1, 2, 1});
  r.back().metadata["twisted_betti_lee"] = json_ints({0, 0, 1, 2, 1, 0, 0});
  r.push_back(fibrado(2, {q(1)}));
  r.push_back(fibrado(3, {q(1), q(-1)}));
  r.push_back(fibrado(3, {q(1), q(1)}));
  r.push_back(fibrado(4, {q(1), q(2), q(-3)}));
  r.push_back(sawai_ot6());
  return r;
}

template HermitianAlgebra<Rational> LoadedAlgebra<Rational>::hermitian() const;
template HermitianAlgebra<double> LoadedAlgebra<double>::hermitian() const;
template LoadedAlgebra<Rational> load(const AlgebraFile&, const Tolerance&);
template LoadedAlgebra<double> load(const AlgebraFile&, const Tolerance&);
template AlgebraFile make_file(std::string, const LieAlgebra<Rational>&, const std::optional<Metric<Rational>>&,
                               const std::optional<ComplexStructure<Rational>>&, const std::optional<KForm<Rational>>&,
                               const std::optional<KForm<Rational>>&);
template AlgebraFile make_file(std::string, const LieAlgebra<double>&, const std::optional<Metric<double>>&,
                               const std::optional<ComplexStructure<double>>&, const std::optional<KForm<double>>&,
                               const std::optional<KForm<double>>&);

}  // namespace lck
