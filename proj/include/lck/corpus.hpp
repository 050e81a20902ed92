#ifndef LCK_CORPUS_HPP
#define LCK_CORPUS_HPP

#include "lck/hermitian.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lck {

using Json = nlohmann::ordered_json;
using StringMatrix = std::vector<std::vector<std::string>>;

constexpr int schema_version = 1;

struct BracketSpec {
  int i = 0;
  int j = 0;
  std::vector<std::string> coeffs;
  friend bool operator==(const BracketSpec&, const BracketSpec&) = default;
};

struct OmegaTerm {
  std::vector<int> indices;
  std::string coefficient;
  friend bool operator==(const OmegaTerm&, const OmegaTerm&) = default;
};

/// On-disk description of an algebra with optional Hermitian and LCS data.
/// Metadata holds expected verdicts; it is compared after analysis and never read to produce one.
struct AlgebraFile {
  std::string name;
  ScalarMode mode = ScalarMode::exact;
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<BracketSpec> brackets;  ///< i < j, 0-based
  std::optional<StringMatrix> metric;
  std::optional<StringMatrix> J;
  std::optional<std::vector<std::string>> theta;
  std::optional<std::vector<OmegaTerm>> omega;
  Json metadata = Json::object();
  friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

std::string to_string(ScalarMode m);
ScalarMode parse_mode(std::string_view s);

/// Throws ParseError on malformed JSON, unknown schema, or structural problems.
AlgebraFile parse_algebra_file(std::string_view text);
std::string to_json_text(const AlgebraFile& f);
AlgebraFile read_algebra_file(const std::filesystem::path& p);
void write_algebra_file(const std::filesystem::path& p, const AlgebraFile& f);

/// Typed view of an AlgebraFile in scalar type T.
template <class T>
struct LoadedAlgebra {
  LieAlgebra<T> L;
  std::optional<Metric<T>> g;
  std::optional<ComplexStructure<T>> J;
  std::optional<KForm<T>> theta;
  std::optional<KForm<T>> omega;

  bool has_hermitian() const { return g && J; }
  /// Throws MathError when metric or J is missing.
  HermitianAlgebra<T> hermitian() const;
};

/// Parses the scalars; throws ParseError on bad numbers and MathError on a non-SPD metric or J^2 != -Id.
template <class T>
LoadedAlgebra<T> load(const AlgebraFile& f, const Tolerance& tol = {});

template <class T>
AlgebraFile make_file(std::string name, const LieAlgebra<T>& L, const std::optional<Metric<T>>& g = std::nullopt,
                      const std::optional<ComplexStructure<T>>& J = std::nullopt,
                      const std::optional<KForm<T>>& theta = std::nullopt,
                      const std::optional<KForm<T>>& omega = std::nullopt);

// Builders. Each returns a validated file whose metadata records the expected verdicts.

AlgebraFile heisenberg_r(int n, const Rational& lambda);

enum class SurfaceKind { torus, kodaira1, kodaira2, inoue_s0, inoue_splus, hyperelliptic };
SurfaceKind parse_surface_kind(std::string_view s);
std::string to_string(SurfaceKind k);
AlgebraFile surface(SurfaceKind kind, const Rational& b = Rational(0));

AlgebraFile g_b(const Rational& b);

/// R f1 + R f2 + R^{2n}: [f1, f2] = mu f2, ad_{f1}|a = lambda Id + B, B rotation pairs with constants b.
AlgebraFile almost_abelian_lck(int n, const Rational& mu, const Rational& lambda, const std::vector<Rational>& b);

/// b and c are s x t; LCK data is attached when t == 1.
AlgebraFile ot(int s, int t, const std::vector<std::vector<Rational>>& b, const std::vector<std::vector<Rational>>& c);

/// R A + R JA + R^{2n-2} with [e_{2i-1}, e_{2i}] = JA and ad_A rotations a_i.
AlgebraFile fibrado(int n, const std::vector<Rational>& a);

/// Six-dimensional OT algebra from the quartic x^4 - 2x^3 - 2x^2 + x + 1 (approx mode).
AlgebraFile sawai_ot6();

struct CorpusEntry {
  std::string name;
  std::string params;  ///< accepted key=value parameters with defaults
  AlgebraFile (*build)(const std::map<std::string, std::string>& params);
};

const std::vector<CorpusEntry>& corpus_registry();
/// Builds a registered entry; throws ParseError on unknown names or bad parameters.
AlgebraFile emit(const std::string& name, const std::map<std::string, std::string>& params = {});
/// The fixed set of instances exercised by the test suite and `corpus list --all`.
std::vector<AlgebraFile> standard_corpus();

}  // namespace lck

#endif  // LCK_CORPUS_HPP
