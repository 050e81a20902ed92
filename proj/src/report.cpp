#include "lck/report.hpp"

#include "lck/lattice.hpp"
#include "lck/lcs.hpp"
#include "lck/riemannian.hpp"
#include "lck/vaisman.hpp"

#include <algorithm>
#include <sstream>

namespace lck {

void Report::add(std::string check, std::string verdict, std::string certificate, bool failed) {
  lines.push_back({std::move(check), std::move(verdict), std::move(certificate), failed});
}

bool Report::failed() const {
  return std::any_of(lines.begin(), lines.end(), [](const ReportLine& l) { return l.failed; });
}

const ReportLine* Report::find(const std::string& check) const {
  for (const auto& l : lines)
    if (l.check == check) return &l;
  return nullptr;
}

ReportFormat parse_format(std::string_view s) {
  if (s == "text") return ReportFormat::text;
  if (s == "machine") return ReportFormat::machine;
  throw ParseError("format must be 'text' or 'machine', got '" + std::string(s) + "'");
}

std::string render(const Report& r, ReportFormat f) {
  std::ostringstream out;
  if (f == ReportFormat::machine) {
    for (const auto& l : r.lines)
      out << Json{{"check", l.check}, {"verdict", l.verdict}, {"certificate", l.certificate}}.dump() << "\n";
    return out.str();
  }
  std::size_t w = 0;
  for (const auto& l : r.lines) w = std::max(w, l.check.size());
  if (!r.subject.empty()) out << "# " << r.subject << "\n";
  for (const auto& l : r.lines) {
    out << l.check << std::string(w - l.check.size() + 2, ' ') << l.verdict;
    if (!l.certificate.empty()) out << "  [" << l.certificate << "]";
    out << "\n";
  }
  return out.str();
}

ScalarMode effective_mode(const AlgebraFile& f, const RunOptions& o) { return o.mode.value_or(f.mode); }

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string pass_fail(bool b) { return b ? "pass" : "fail"; }

template <class T>
std::string fmt_vec(const Vec<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + Field<T>::format(v[i]);
  return s + ")";
}

std::string fmt_ints(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

template <class T>
std::string form_text(const KForm<T>& f, const LieAlgebra<T>& L) {
  std::string s = f.to_string(L.labels(), L.tolerance());
  return s.empty() ? "0" : s;
}

// Engine results collected for the metadata comparison.
template <class T>
struct Facts {
  std::optional<bool> unimodular, nilpotent, solvable, vaisman, canonical_trivial;
  std::optional<std::string> completely_solvable, lck, lcs_kind;
  std::optional<Vec<T>> lee;
  std::optional<std::vector<int>> betti, twisted_lee;
  std::optional<int> center_dim;
};

template <class T>
LoadedAlgebra<T> load_for(const AlgebraFile& f, const RunOptions& o) {
  return load<T>(f, o.tol);
}

template <class T>
bool jacobi_section(Report& r, const LieAlgebra<T>& L) {
  if (L.is_lie()) {
    r.add("jacobi", "pass", "defect " + Field<T>::format(L.jacobi_defect()));
    return true;
  }
  const auto& v = *L.jacobi_violation();
  const auto& lab = L.labels();
  r.add("jacobi", "fail",
        "triple (" + lab[static_cast<std::size_t>(v[0])] + ", " + lab[static_cast<std::size_t>(v[1])] + ", " +
            lab[static_cast<std::size_t>(v[2])] + "), defect " + Field<T>::format(L.jacobi_defect()),
        true);
  return false;
}

template <class T>
void structure_section(Report& r, const LieAlgebra<T>& L, const RunOptions& o, Facts<T>& facts) {
  SeriesInfo s = series(L);
  facts.solvable = s.is_solvable;
  facts.nilpotent = s.is_nilpotent;
  r.add("solvable", yes_no(s.is_solvable), "derived series dims " + fmt_ints(s.derived_dims));
  r.add("nilpotent", yes_no(s.is_nilpotent), "lower central series dims " + fmt_ints(s.lower_central_dims));
  bool uni = is_unimodular(L);
  facts.unimodular = uni;
  r.add("unimodular", yes_no(uni), "tr ad_x = 0 on basis: " + yes_no(uni));
  if (s.is_solvable) {
    auto cs = is_completely_solvable(L, o.samples, o.seed);
    facts.completely_solvable = to_string(cs.verdict);
    r.add("completely_solvable", to_string(cs.verdict), cs.certificate);
  }
  int cd = center(L).dim();
  facts.center_dim = cd;
  r.add("center_dim", std::to_string(cd), "kernel of x -> ad_x");
  auto b = betti(L);
  facts.betti = b;
  r.add("betti", fmt_ints(b), "ranks of the Chevalley-Eilenberg differentials");
}

template <class T>
std::optional<Classification<T>> hermitian_section(Report& r, const LoadedAlgebra<T>& a, Facts<T>& facts) {
  if (!a.has_hermitian()) return std::nullopt;
  const auto& L = a.L;
  bool comp = is_compatible(*a.J, *a.g, L.tolerance());
  r.add("compatible", pass_fail(comp), "g(Jx, Jy) = g(x, y)", !comp);
  bool integ = is_integrable(L, *a.J);
  r.add("integrable", pass_fail(integ), "Nijenhuis tensor on basis pairs", !integ);
  if (!comp || !integ) return std::nullopt;
  auto c = classify(L, *a.g, *a.J);
  facts.lck = to_string(c.kind);
  std::string cert = c.detail;
  r.add("lck", to_string(c.kind), cert);
  if (c.theta) {
    facts.lee = c.theta->covector();
    r.add("lee_form", fmt_vec(c.theta->covector()), "theta = " + form_text(*c.theta, L));
    if (a.theta) {
      bool same = approx_equal(*a.theta, *c.theta, L.tolerance());
      r.add("lee_form_file", same ? "agree" : "differ", "file theta = " + form_text(*a.theta, L), !same);
    }
  }
  return c;
}

template <class T>
std::optional<VaismanTest<T>> vaisman_section(Report& r, const LoadedAlgebra<T>& a, const Classification<T>& c,
                                              Facts<T>& facts) {
  if (c.kind != HermitianKind::lck) return std::nullopt;
  auto v = is_vaisman(a.L, *a.g, *a.J);
  facts.vaisman = v.vaisman;
  r.add("vaisman", yes_no(v.vaisman), v.certificate, v.killing != v.parallel);
  return v;
}

template <class T>
void decomposition_section(Report& r, const HermitianAlgebra<T>& s, const RunOptions& o, Facts<T>& facts,
                           bool canonical) {
  VaismanDecomposition<T> dec = [&] {
    try {
      return decompose(s);
    } catch (const DecompositionError& e) {
      r.add("decomposition", "skipped", e.what());
      throw;
    }
  }();
  const auto& L = s.L;
  bool in_derived = commutator_ideal(L).contains(dec.xi, L.tolerance());
  r.add("JA_in_derived", yes_no(in_derived), "JA0 = " + fmt_vec(dec.xi));
  r.add("decomposition", pass_fail(dec.ok()),
        dec.ok() ? "k = A0-perp cap xi-perp is Kahler flat; Milnor splitting holds"
                 : [&] {
                     std::string f;
                     for (const auto& x : dec.failures) f += (f.empty() ? "" : "; ") + x;
                     for (const auto& x : dec.kahler_flat.failures) f += (f.empty() ? "" : "; ") + x;
                     for (const auto& x : dec.milnor.failures) f += (f.empty() ? "" : "; ") + x;
                     return f;
                   }(),
        !dec.ok());
  auto fp = fingerprint(dec);
  r.add("fingerprint", to_string(fp), "|theta|^2 = " + Field<T>::format(dec.theta_norm2));
  if (dec.ok()) {
    auto rebuilt = build_from_pair(dec.kpart, dec.D);
    auto fp2 = fingerprint(decompose(rebuilt));
    bool same = same_fingerprint(fp, fp2, L.tolerance());
    r.add("round_trip", pass_fail(same), "decompose(build(k, D)) fingerprint " + to_string(fp2), !same);
  }
  auto spec = imaginary_spectrum_check(L, o.samples, o.seed);
  r.add("imaginary_spectrum", pass_fail(spec.pass), spec.certificate, !spec.pass);
  if (!canonical || !dec.ok()) return;
  auto cf = canonical_form(s, dec);
  facts.canonical_trivial = cf.closed;
  r.add("canonical_bundle", cf.closed ? "trivial" : "nontrivial", cf.certificate);
  r.add("canonical_equivalence", pass_fail(cf.equivalent),
        "d eta = 0: " + yes_no(cf.closed) + ", sums = 0: " + yes_no(cf.sums_zero) + ", su: " + yes_no(cf.su_all),
        !cf.equivalent);
}

template <class T>
std::optional<std::pair<KForm<T>, KForm<T>>> lcs_data(const LoadedAlgebra<T>& a) {
  if (a.omega && a.theta) return std::pair{*a.omega, *a.theta};
  if (!a.has_hermitian()) return std::nullopt;
  auto omega = a.omega ? *a.omega : fundamental_form(*a.g, *a.J);
  auto theta = lee_form_solve(a.L, omega);
  if (!theta) return std::nullopt;
  return std::pair{omega, *theta};
}

template <class T>
void lcs_section(Report& r, const LoadedAlgebra<T>& a, Facts<T>& facts, bool required) {
  auto data = lcs_data(a);
  if (!data) {
    if (required) r.add("lcs", "fail", "no omega, theta with d omega = theta ^ omega", true);
    return;
  }
  const auto& [omega, theta] = *data;
  const auto& L = a.L;
  auto chk = is_lcs(L, omega, theta);
  r.add("lcs", pass_fail(chk.ok()), chk.ok() ? "d omega = theta ^ omega, d theta = 0, omega nondegenerate" : chk.failure,
        !chk.ok());
  if (!chk.ok()) return;
  if (theta.is_zero(L.tolerance())) {
    r.add("lcs_kind", "symplectic", "theta = 0");
    return;
  }
  auto g = automorphism_algebra(L, omega);
  LcsKind k = kind(L, omega, theta);
  facts.lcs_kind = to_string(k);
  r.add("lcs_kind", to_string(k), "dim g_omega = " + std::to_string(g.dim()));
  auto eta = is_exact_lcs(L, omega, theta);
  r.add("lcs_exact", yes_no(eta.has_value()), eta ? "eta = " + form_text(*eta, L) : "no eta with d_theta eta = omega");
  r.add("lee_vector", fmt_vec(lee_vector(omega, theta, L.tolerance())), "i_V omega = theta");
  if (is_unimodular(L)) {
    bool eq = (k == LcsKind::first) == eta.has_value();
    r.add("kind_exact_equivalence", pass_fail(eq), "unimodular: first kind iff exact", !eq);
  }
}

template <class T>
void twisted_lee_section(Report& r, const LieAlgebra<T>& L, const KForm<T>& theta, Facts<T>& facts) {
  auto tb = twisted_betti(L, theta);
  facts.twisted_lee = tb;
  r.add("twisted_betti_lee", fmt_ints(tb), "theta = " + form_text(theta, L));
}

// Metadata comparison. Asserted keys fail on mismatch; paper_lee_form is reported only.
template <class T>
void compare_metadata(Report& r, const AlgebraFile& f, const Facts<T>& facts, const Tolerance& tol) {
  const Json& m = f.metadata;
  auto cmp = [&](const std::string& key, const std::string& expected, const std::optional<std::string>& got) {
    if (!got) {
      r.add("expect." + key, "unchecked", "expected " + expected + "; engine produced no verdict", true);
      return;
    }
    bool ok = expected == *got;
    r.add("expect." + key, ok ? "match" : "mismatch", "expected " + expected + ", computed " + *got, !ok);
  };
  auto as_bool = [](const std::optional<bool>& b) -> std::optional<std::string> {
    if (!b) return std::nullopt;
    return *b ? "true" : "false";
  };
  auto as_ints = [](const std::optional<std::vector<int>>& v) -> std::optional<std::string> {
    if (!v) return std::nullopt;
    return fmt_ints(*v);
  };
  auto lee_match = [&](const Json& j) {
    std::vector<std::string> s;
    for (const auto& x : j) s.push_back(x.template get<std::string>());
    Vec<T> e;
    for (const auto& x : s) e.push_back(Field<T>::parse(x));
    bool ok = facts.lee && e.size() == facts.lee->size() && is_zero_vec(*facts.lee - e, tol);
    return std::pair{ok, fmt_vec(e)};
  };
  for (const auto& [key, val] : m.items()) {
    if (key == "unimodular") cmp(key, val.dump(), as_bool(facts.unimodular));
    else if (key == "nilpotent") cmp(key, val.dump(), as_bool(facts.nilpotent));
    else if (key == "solvable") cmp(key, val.dump(), as_bool(facts.solvable));
    else if (key == "vaisman") cmp(key, val.dump(), as_bool(facts.vaisman));
    else if (key == "canonical_trivial") cmp(key, val.dump(), as_bool(facts.canonical_trivial));
    else if (key == "completely_solvable") cmp(key, val.template get<std::string>(), facts.completely_solvable);
    else if (key == "lck") cmp(key, val.template get<std::string>(), facts.lck);
    else if (key == "lcs_kind") cmp(key, val.template get<std::string>(), facts.lcs_kind);
    else if (key == "center_dim")
      cmp(key, val.dump(), facts.center_dim ? std::optional(std::to_string(*facts.center_dim)) : std::nullopt);
    else if (key == "betti") {
      std::vector<int> v = val.template get<std::vector<int>>();
      cmp(key, fmt_ints(v), as_ints(facts.betti));
    } else if (key == "twisted_betti_lee") {
      std::vector<int> v = val.template get<std::vector<int>>();
      cmp(key, fmt_ints(v), as_ints(facts.twisted_lee));
    } else if (key == "lee_form") {
      auto [ok, e] = lee_match(val);
      r.add("expect.lee_form", ok ? "match" : "mismatch",
            "expected " + e + ", computed " + (facts.lee ? fmt_vec(*facts.lee) : std::string("none")), !ok);
    } else if (key == "paper_lee_form") {
      auto [ok, e] = lee_match(val);
      r.add("reference.lee_form", ok ? "agree" : "flag",
            "reference value " + e + ", computed " + (facts.lee ? fmt_vec(*facts.lee) : std::string("none")));
    }
  }
}

template <class T>
Report analyze_t(const AlgebraFile& f, const RunOptions& o) {
  Report r;
  r.subject = f.name + " (" + to_string(effective_mode(f, o)) + ")";
  auto a = load_for<T>(f, o);
  if (!jacobi_section(r, a.L)) return r;
  Facts<T> facts;
  try {
    structure_section(r, a.L, o, facts);
    if (a.g) {
      r.add("scalar_curvature", Field<T>::format(scalar_curvature(a.L, *a.g)), "trace of Ricci");
    }
    auto c = hermitian_section(r, a, facts);
    if (c && c->kind == HermitianKind::lck) {
      twisted_lee_section(r, a.L, *c->theta, facts);
      auto v = vaisman_section(r, a, *c, facts);
      if (v && v->vaisman) {
        try {
          decomposition_section(r, a.hermitian(), o, facts, true);
        } catch (const DecompositionError&) {
        }
      }
    } else if (!c && a.theta && !a.theta->is_zero(a.L.tolerance())) {
      twisted_lee_section(r, a.L, *a.theta, facts);
    }
    lcs_section(r, a, facts, false);
  } catch (const MathError& e) {
    r.add("error", "fail", e.what(), true);
  }
  compare_metadata(r, f, facts, a.L.tolerance());
  return r;
}

template <class T>
Report validate_t(const AlgebraFile& f, const RunOptions& o) {
  Report r;
  r.subject = f.name;
  auto a = load_for<T>(f, o);
  r.add("schema", "pass", "schema " + std::to_string(schema_version) + ", dim " + std::to_string(f.dim));
  if (!jacobi_section(r, a.L)) return r;
  if (a.g) r.add("metric", "pass", "symmetric positive definite");
  if (a.J) r.add("complex_structure", "pass", "J^2 = -Id");
  if (a.has_hermitian()) {
    bool comp = is_compatible(*a.J, *a.g, a.L.tolerance());
    r.add("compatible", pass_fail(comp), "g(Jx, Jy) = g(x, y)", !comp);
  }
  if (a.theta) {
    bool closed = d(a.L, *a.theta).is_zero(a.L.tolerance());
    r.add("theta_closed", pass_fail(closed), "d theta = " + form_text(d(a.L, *a.theta), a.L), !closed);
  }
  if (a.omega) {
    bool nd = is_nondegenerate(*a.omega, a.L.tolerance());
    r.add("omega_nondegenerate", pass_fail(nd), "rank of the Gram matrix of omega", !nd);
  }
  return r;
}

template <class T>
KForm<T> parse_covector(const std::string& s, int n) {
  Vec<T> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(Field<T>::parse(item));
  if (static_cast<int>(v.size()) != n) throw ParseError("twisting covector needs " + std::to_string(n) + " entries");
  return KForm<T>::from_covector(v);
}

template <class T>
Report cohomology_t(const AlgebraFile& f, const RunOptions& o, const std::string& twisted) {
  Report r;
  r.subject = f.name;
  auto a = load_for<T>(f, o);
  if (!jacobi_section(r, a.L)) return r;
  const auto& L = a.L;
  if (twisted.empty()) {
    auto b = betti(L);
    r.add("betti", fmt_ints(b), "ranks of the Chevalley-Eilenberg differentials");
    return r;
  }
  std::optional<KForm<T>> theta;
  if (twisted == "lee") {
    if (a.has_hermitian()) {
      auto c = classify(L, *a.g, *a.J);
      if (c.kind != HermitianKind::lck) throw MathError("structure is " + to_string(c.kind) + ", no nonzero Lee form");
      theta = c.theta;
    } else if (a.theta) {
      theta = a.theta;
    } else {
      throw MathError("file has neither J and metric nor theta");
    }
  } else {
    theta = parse_covector<T>(twisted, L.dim());
  }
  bool closed = d(L, *theta).is_zero(L.tolerance());
  if (!closed) {
    r.add("twisted_betti", "fail", "theta = " + form_text(*theta, L) + " is not closed", true);
    return r;
  }
  r.add("twisted_betti", fmt_ints(twisted_betti(L, *theta)), "theta = " + form_text(*theta, L));
  return r;
}

template <class T>
Report lck_t(const AlgebraFile& f, const RunOptions& o) {
  Report r;
  r.subject = f.name;
  auto a = load_for<T>(f, o);
  if (!jacobi_section(r, a.L)) return r;
  if (!a.has_hermitian()) throw MathError("file has no metric and complex structure");
  Facts<T> facts;
  auto c = hermitian_section(r, a, facts);
  if (c && c->theta) {
    bool closed = d(a.L, *c->theta).is_zero(a.L.tolerance());
    r.add("lee_closed", pass_fail(closed), "d theta = 0", !closed);
  }
  return r;
}

template <class T>
Report vaisman_t(const AlgebraFile& f, const RunOptions& o, bool canonical) {
  Report r;
  r.subject = f.name;
  auto a = load_for<T>(f, o);
  if (!jacobi_section(r, a.L)) return r;
  if (!a.has_hermitian()) throw MathError("file has no metric and complex structure");
  Facts<T> facts;
  auto c = hermitian_section(r, a, facts);
  if (!c || c->kind != HermitianKind::lck) {
    if (canonical) r.add("canonical_bundle", "fail", "structure is not strictly LCK", true);
    return r;
  }
  auto v = vaisman_section(r, a, *c, facts);
  if (!v->vaisman) {
    if (canonical) r.add("canonical_bundle", "fail", "structure is not Vaisman", true);
    return r;
  }
  try {
    decomposition_section(r, a.hermitian(), o, facts, canonical);
  } catch (const DecompositionError& e) {
    if (canonical) r.add("canonical_bundle", "fail", e.what(), true);
  }
  return r;
}

template <class T>
Report lcs_t(const AlgebraFile& f, const RunOptions& o) {
  Report r;
  r.subject = f.name;
  auto a = load_for<T>(f, o);
  if (!jacobi_section(r, a.L)) return r;
  Facts<T> facts;
  lcs_section(r, a, facts, true);
  return r;
}

template <class T>
Report lattice_t(const AlgebraFile& f, const RunOptions& o, double t_max, long steps) {
  Report r;
  r.subject = f.name;
  auto a = load_for<T>(f, o);
  if (!jacobi_section(r, a.L)) return r;
  const auto& L = a.L;
  auto u = find_codim1_abelian_ideal(L);
  if (!u) {
    r.add("almost_abelian", "no", "no codimension-one abelian ideal", true);
    return r;
  }
  Matrix<T> gram = a.g ? a.g->gram() : Matrix<T>::identity(L.dim());
  Vec<T> x = u->orthogonal_complement(gram, L.tolerance()).vectors().front();
  Matrix<T> D = restrict_to(L.ad(x), *u, L.tolerance());
  r.add("almost_abelian", "yes", "f = " + fmt_vec(x) + ", D = ad_f on the ideal (" + std::to_string(u->dim()) + "-dim)");
  auto s = integer_charpoly_scan(D.to_double(), 0.0, t_max, steps, o.tol);
  if (s.degenerate) {
    r.add("lattice_scan", "degenerate", s.note);
    return r;
  }
  r.add("lattice_scan", std::to_string(s.candidates.size()) + " candidates",
        s.note + "; " + std::to_string(s.crossings) + " integer crossings refined");
  for (const auto& c : s.candidates) {
    std::string poly = "(";
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) poly += (i ? ", " : "") + std::to_string(c.coeffs[i]);
    r.add("candidate", "t0 = " + format_double(c.t0), "charpoly low to high " + poly + "), residual " + format_double(c.residual));
  }
  return r;
}

template <class F>
Report dispatch(const AlgebraFile& f, const RunOptions& o, F&& fn) {
  o.tol.validate();
  try {
    if (effective_mode(f, o) == ScalarMode::exact) return fn(Rational{});
    return fn(0.0);
  } catch (const DecompositionError& e) {
    Report r;
    r.subject = f.name;
    r.add("error", "fail", e.what(), true);
    return r;
  } catch (const MathError& e) {
    Report r;
    r.subject = f.name;
    r.add("error", "fail", e.what(), true);
    return r;
  }
}

template <class Tag>
using scalar_of = std::conditional_t<std::is_same_v<Tag, double>, double, Rational>;

}  // namespace

Report validate_report(const AlgebraFile& f, const RunOptions& o) {
  return dispatch(f, o, [&](auto tag) { return validate_t<scalar_of<decltype(tag)>>(f, o); });
}

Report analyze_report(const AlgebraFile& f, const RunOptions& o) {
  return dispatch(f, o, [&](auto tag) { return analyze_t<scalar_of<decltype(tag)>>(f, o); });
}

Report cohomology_report(const AlgebraFile& f, const RunOptions& o, const std::string& twisted) {
  return dispatch(f, o, [&](auto tag) { return cohomology_t<scalar_of<decltype(tag)>>(f, o, twisted); });
}

Report lck_report(const AlgebraFile& f, const RunOptions& o) {
  return dispatch(f, o, [&](auto tag) { return lck_t<scalar_of<decltype(tag)>>(f, o); });
}

Report vaisman_report(const AlgebraFile& f, const RunOptions& o) {
  return dispatch(f, o, [&](auto tag) { return vaisman_t<scalar_of<decltype(tag)>>(f, o, false); });
}

Report canonical_report(const AlgebraFile& f, const RunOptions& o) {
  return dispatch(f, o, [&](auto tag) { return vaisman_t<scalar_of<decltype(tag)>>(f, o, true); });
}

Report lcs_report(const AlgebraFile& f, const RunOptions& o) {
  return dispatch(f, o, [&](auto tag) { return lcs_t<scalar_of<decltype(tag)>>(f, o); });
}

Report lattice_scan_report(const AlgebraFile& f, const RunOptions& o, double t_max, long steps) {
  if (!(t_max > 0.0) || steps < 1) throw std::invalid_argument("lattice scan needs t_max > 0 and steps >= 1");
  return dispatch(f, o, [&](auto tag) { return lattice_t<scalar_of<decltype(tag)>>(f, o, t_max, steps); });
}

}  // namespace lck
