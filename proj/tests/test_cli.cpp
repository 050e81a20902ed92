#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(LCKTOOL_PATH) + " " + args + " 2>/dev/null";
  Run r;
  std::unique_ptr<FILE, int (*)(FILE*)> p(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(p);
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p.get())) > 0) r.out.append(buf, n);
  int status = pclose(p.release());
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("lcktool_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string emit_to(const TempDir& t, const std::string& name, const std::string& args) {
  auto p = t.file(name);
  auto r = run("corpus emit " + args + " -o " + p);
  REQUIRE(r.code == 0);
  return p;
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("canonical on fibrado(3,(1,-1)) certifies vanishing sums") {
  TempDir t;
  auto f = emit_to(t, "f.json", "fibrado n=3 a=1,-1");
  auto r = run("canonical " + f);
  CHECK(r.code == 0);
  CHECK(r.out.find("sums = 0") != std::string::npos);
  auto g = emit_to(t, "g.json", "fibrado n=3 a=1,1");
  auto rg = run("canonical " + g);
  CHECK(rg.code == 0);
  CHECK(rg.out.find("nontrivial") != std::string::npos);
}

TEST_CASE("analyze exits 1 on a Jacobi violation and names the triple") {
  TempDir t;
  auto f = t.file("bad.json");
  write(f, R"({"schema": 1, "name": "bad", "mode": "exact", "dim": 3, "labels": ["X", "Y", "Z"],
    "brackets": [{"i": 0, "j": 1, "coeffs": ["0", "0", "1"]}, {"i": 0, "j": 2, "coeffs": ["1", "0", "0"]}]})");
  auto r = run("analyze " + f);
  CHECK(r.code == 1);
  CHECK(r.out.find("(X, Y, Z)") != std::string::npos);
  CHECK(run("validate " + f).code == 1);
}

TEST_CASE("twisted cohomology with the Lee form vanishes on R x h3") {
  TempDir t;
  auto f = emit_to(t, "h.json", "heisenberg_r n=1");
  auto r = run("cohomology --twisted lee " + f);
  CHECK(r.code == 0);
  CHECK(r.out.find("(0, 0, 0, 0, 0)") != std::string::npos);
  auto m = run("--format machine cohomology " + f);
  CHECK(m.code == 0);
  CHECK(m.out.find(R"x("verdict":"(1, 3, 4, 3, 1)")x") != std::string::npos);
}

TEST_CASE("parse and I/O errors exit 2") {
  TempDir t;
  auto f = t.file("broken.json");
  write(f, "{ not json");
  CHECK(run("analyze " + f).code == 2);
  CHECK(run("analyze " + t.file("missing.json")).code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--mode symbolic analyze " + f).code == 2);
  CHECK(run("corpus emit nope").code == 2);
  CHECK(run("corpus emit heisenberg_r lambda=0").code == 2);
  CHECK(run("corpus emit heisenberg_r n").code == 2);
  auto g = emit_to(t, "g.json", "g_b b=0");
  CHECK(run("lattice-scan " + g).code == 2);
}

TEST_CASE("every subcommand runs on a Vaisman entry") {
  TempDir t;
  auto f = emit_to(t, "h.json", "heisenberg_r n=2");
  for (const char* sub : {"validate", "analyze", "cohomology", "lck", "vaisman", "canonical", "lcs"}) {
    CAPTURE(sub);
    auto r = run(std::string(sub) + " " + f);
    CHECK(r.code == 0);
    CHECK_FALSE(r.out.empty());
  }
  CHECK(run("--mode approx --eps 1e-10 --seed 3 --samples 20 analyze " + f).code == 0);
  // no codimension-one abelian ideal in R x h5
  CHECK(run("lattice-scan --t-max 5 --steps 1000 " + f).code == 1);
  auto h3 = emit_to(t, "h3.json", "heisenberg_r n=1");
  auto s = run("lattice-scan --t-max 5 --steps 1000 " + h3);
  CHECK(s.code == 0);
  CHECK(s.out.find("degenerate") != std::string::npos);
}

TEST_CASE("non-Vaisman input fails the Vaisman checks with exit 1") {
  TempDir t;
  auto f = emit_to(t, "sp.json", "surface kind=inoue_splus");
  CHECK(run("analyze " + f).code == 0);
  auto c = run("canonical " + f);
  CHECK(c.code == 1);
}

TEST_CASE("output is deterministic for a fixed seed") {
  TempDir t;
  auto f = emit_to(t, "f.json", "fibrado n=4 a=1,2,-3");
  auto a = run("--seed 9 analyze " + f);
  auto b = run("--seed 9 analyze " + f);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("corpus list and dump") {
  auto l = run("corpus list");
  CHECK(l.code == 0);
  for (const char* name : {"heisenberg_r", "surface", "g_b", "almost_abelian_lck", "ot", "fibrado", "sawai_ot6"})
    CHECK(l.out.find(name) != std::string::npos);
  TempDir t;
  auto d = t.file("corpus");
  CHECK(run("corpus dump " + d).code == 0);
  int files = 0;
  for (const auto& e : fs::directory_iterator(d)) {
    CHECK(e.path().extension() == ".json");
    CHECK(run("analyze " + e.path().string()).code == 0);
    ++files;
  }
  CHECK(files == 22);
  CHECK(run("corpus emit surface kind=kodaira1").out.find("\"schema\": 1") != std::string::npos);
}
