#ifndef LCK_REPORT_HPP
#define LCK_REPORT_HPP

#include "lck/corpus.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lck {

struct ReportLine {
  std::string check;
  std::string verdict;
  std::string certificate;
  bool failed = false;  ///< a mathematical check failed; drives exit code 1
};

struct Report {
  std::string subject;
  std::vector<ReportLine> lines;

  void add(std::string check, std::string verdict, std::string certificate = {}, bool failed = false);
  bool failed() const;
  int exit_code() const { return failed() ? 1 : 0; }
  const ReportLine* find(const std::string& check) const;
};

enum class ReportFormat { text, machine };
ReportFormat parse_format(std::string_view s);

/// Text: one aligned line per check. Machine: one JSON record {check, verdict, certificate} per line.
std::string render(const Report& r, ReportFormat f);

struct RunOptions {
  std::optional<ScalarMode> mode;  ///< overrides the file's mode
  Tolerance tol;
  std::uint64_t seed = 0;
  int samples = 100;
};

ScalarMode effective_mode(const AlgebraFile& f, const RunOptions& o);

/// Each report loads the file in the effective mode. MathError from an unmet precondition becomes a failed line;
/// ParseError propagates.
Report validate_report(const AlgebraFile& f, const RunOptions& o);
/// Full pipeline followed by comparison against the file's metadata.
Report analyze_report(const AlgebraFile& f, const RunOptions& o);
/// twisted: empty for plain Betti numbers, "lee" for the computed Lee form, or a comma-separated covector.
Report cohomology_report(const AlgebraFile& f, const RunOptions& o, const std::string& twisted = {});
Report lck_report(const AlgebraFile& f, const RunOptions& o);
Report vaisman_report(const AlgebraFile& f, const RunOptions& o);
Report canonical_report(const AlgebraFile& f, const RunOptions& o);
Report lcs_report(const AlgebraFile& f, const RunOptions& o);
/// D = ad_f restricted to a codimension-one abelian ideal, f orthogonal to it (metric if present).
Report lattice_scan_report(const AlgebraFile& f, const RunOptions& o, double t_max, long steps);

}  // namespace lck

#endif  // LCK_REPORT_HPP
