#include "lck/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

namespace {

using namespace lck;

std::map<std::string, std::string> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, std::string> p;
  for (const auto& s : items) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("parameter '" + s + "' is not key=value");
    p[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return p;
}

int emit_report(const Report& r, ReportFormat f) {
  std::cout << render(r, f);
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verifies LCK, Vaisman and LCS structures on Lie algebras given by structure constants"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string mode_s, format_s = "text";
  double eps = Tolerance{}.zero_eps;
  double int_eps = Tolerance{}.integrality_eps;
  std::uint64_t seed = 0;
  int samples = 100;
  app.add_option("--mode", mode_s, "exact or approx (default: the file's mode)")->check(CLI::IsMember({"exact", "approx"}));
  app.add_option("--eps", eps, "zero tolerance in approx mode")->check(CLI::PositiveNumber);
  app.add_option("--integrality-eps", int_eps, "distance to an integer accepted by lattice checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for sampled checks");
  app.add_option("--samples", samples, "sample count for randomized checks")->check(CLI::PositiveNumber);
  app.add_option("--format", format_s, "text or machine")->check(CLI::IsMember({"text", "machine"}));

  std::string file;
  auto with_file = [&](CLI::App* sub) { sub->add_option("FILE", file, "algebra file")->required(); };

  auto* validate = app.add_subcommand("validate", "Check the file parses and the brackets satisfy Jacobi");
  with_file(validate);
  auto* analyze = app.add_subcommand("analyze", "Run every check and compare against the file's metadata");
  with_file(analyze);
  std::string twisted;
  auto* cohom = app.add_subcommand("cohomology", "Betti numbers, or twisted Betti numbers with --twisted");
  with_file(cohom);
  cohom->add_option("--twisted", twisted, "'lee' or a comma-separated covector");
  auto* lck_cmd = app.add_subcommand("lck", "Classify the Hermitian structure (Kahler, LCK, neither)");
  with_file(lck_cmd);
  auto* vaisman = app.add_subcommand("vaisman", "Vaisman test and (k, D) decomposition");
  with_file(vaisman);
  auto* canonical = app.add_subcommand("canonical", "Canonical bundle triviality for a Vaisman algebra");
  with_file(canonical);
  auto* lcs = app.add_subcommand("lcs", "LCS kind, exactness and Lee vector");
  with_file(lcs);
  double t_max = 10.0;
  long steps = 100000;
  auto* scan = app.add_subcommand("lattice-scan", "Search t for exp(tD) with integer characteristic polynomial");
  with_file(scan);
  scan->add_option("--t-max", t_max, "upper end of the t range")->required()->check(CLI::PositiveNumber);
  scan->add_option("--steps", steps, "grid steps")->required()->check(CLI::PositiveNumber);

  auto* corpus = app.add_subcommand("corpus", "Bundled example algebras");
  corpus->require_subcommand(1);
  auto* list = corpus->add_subcommand("list", "List builders and their parameters");
  auto* emit_cmd = corpus->add_subcommand("emit", "Write one algebra file to stdout or --output");
  std::string name, output;
  std::vector<std::string> params;
  emit_cmd->add_option("NAME", name, "builder name")->required();
  emit_cmd->add_option("PARAMS", params, "key=value parameters");
  emit_cmd->add_option("-o,--output", output, "output file");
  auto* dump = corpus->add_subcommand("dump", "Write the standard corpus into a directory");
  std::string dir;
  dump->add_option("DIR", dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    RunOptions opts;
    if (!mode_s.empty()) opts.mode = parse_mode(mode_s);
    opts.tol.zero_eps = eps;
    opts.tol.integrality_eps = int_eps;
    opts.seed = seed;
    opts.samples = samples;
    ReportFormat fmt = parse_format(format_s);

    if (*list) {
      for (const auto& e : corpus_registry()) std::cout << e.name << (e.params.empty() ? "" : "  " + e.params) << "\n";
      std::cout << "\nstandard corpus:\n";
      for (const auto& f : standard_corpus()) std::cout << "  " << f.name << "\n";
      return 0;
    }
    if (*emit_cmd) {
      AlgebraFile f = emit(name, parse_params(params));
      if (output.empty())
        std::cout << to_json_text(f);
      else
        write_algebra_file(output, f);
      return 0;
    }
    if (*dump) {
      std::filesystem::create_directories(dir);
      for (const auto& f : standard_corpus()) {
        std::string stem;
        for (char c : f.name) stem += std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.' ? c : '_';
        while (!stem.empty() && stem.back() == '_') stem.pop_back();
        write_algebra_file(std::filesystem::path(dir) / (stem + ".json"), f);
      }
      return 0;
    }

    AlgebraFile f = read_algebra_file(file);
    if (*validate) return emit_report(validate_report(f, opts), fmt);
    if (*analyze) return emit_report(analyze_report(f, opts), fmt);
    if (*cohom) return emit_report(cohomology_report(f, opts, twisted), fmt);
    if (*lck_cmd) return emit_report(lck_report(f, opts), fmt);
    if (*vaisman) return emit_report(vaisman_report(f, opts), fmt);
    if (*canonical) return emit_report(canonical_report(f, opts), fmt);
    if (*lcs) return emit_report(lcs_report(f, opts), fmt);
    if (*scan) return emit_report(lattice_scan_report(f, opts, t_max, steps), fmt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
