#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "lie2herm/lie2herm.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

const std::string& cli() {
  static const std::string path = [] {
    const char* p = std::getenv("CLI_BIN");
    REQUIRE_MESSAGE(p != nullptr, "CLI_BIN must point at the command line binary");
    return std::string(p);
  }();
  return path;
}

RunResult run(const std::string& args) {
  const std::string cmd = args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const fs::path& workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "lie2herm-cli-tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = workdir() / name;
  std::ofstream out(p);
  out << text;
  return p;
}

const fs::path& exports() {
  static const fs::path dir = [] {
    const fs::path d = workdir() / "exports";
    const auto r = run(cli() + " catalog --export " + d.string());
    REQUIRE(r.code == 0);
    return d;
  }();
  return dir;
}

std::string exported(const std::string& name) {
  const fs::path p = exports() / (name + ".lie2");
  REQUIRE(fs::exists(p));
  return p.string();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("validate: exit codes and messages") {
  const auto ok = run(cli() + " validate " + exported("ex9-h3R-typeI"));
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "valid"));

  const auto broken = write_file("broken.lie2",
                                 "dim 3\n"
                                 "bracket 1 2 : 3 1\n"
                                 "bracket 1 3 : 1 1\n");
  const auto bad = run(cli() + " validate " + broken.string());
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "NOT a Lie algebra"));

  const auto garbled = write_file("garbled.lie2", "dim 3\nbracket 2 1 : 1 1\n");
  const auto parse = run(cli() + " validate " + garbled.string());
  CHECK(parse.code == 2);
  CHECK(contains(parse.out, "parse error"));

  CHECK(run(cli() + " validate " + (workdir() / "missing.lie2").string()).code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run(cli()).code == 2);                      // missing subcommand
  CHECK(run(cli() + " frobnicate x").code == 2);    // unknown subcommand
  CHECK(run(cli() + " validate").code == 2);        // missing path
  const std::string ex9 = exported("ex9-h3R-typeI");
  CHECK(run(cli() + " search-type2 --grid 0 " + ex9).code == 2);
  CHECK(run(cli() + " search-type2 --grid -4 " + ex9).code == 2);
  CHECK(run(cli() + " connection " + ex9 + " frobnicated").code == 2);
}

TEST_CASE("classify requires a J block") {
  const auto noj = write_file("noj.lie2", "dim 4\nbracket 3 4 : 1 1\n");
  const auto r = run(cli() + " classify " + noj.string());
  CHECK(r.code == 1);
  CHECK(contains(r.out, "error:"));
  CHECK(contains(r.out, "no J block"));
}

TEST_CASE("classify: human verdict lines for every fixture") {
  auto first_line = [](const std::string& text) {
    return text.substr(0, text.find('\n'));
  };

  const auto ex8 = run(cli() + " classify " + exported("ex8-A412-typeI"));
  CHECK(ex8.code == 0);
  CHECK(contains(first_line(ex8.out), "Type I"));
  CHECK(contains(first_line(ex8.out), "weak-KT"));
  CHECK(contains(first_line(ex8.out), "dc_top = -4"));

  const auto ex9 = run(cli() + " classify " + exported("ex9-h3R-typeI"));
  CHECK(ex9.code == 0);
  CHECK(contains(first_line(ex9.out), "SKT"));

  const auto ex10 = run(cli() + " classify " + exported("ex10-A412-typeII"));
  CHECK(ex10.code == 0);
  CHECK(contains(first_line(ex10.out), "Type II"));
  CHECK(contains(first_line(ex10.out), "weak-KT"));
  CHECK(contains(first_line(ex10.out), "dc_top = 4"));

  const auto ex12 = run(cli() + " classify " + exported("ex12-rr-typeII"));
  CHECK(ex12.code == 0);
  CHECK(contains(first_line(ex12.out), "Kahler"));

  const auto ex13 = run(cli() + " classify " + exported("ex13-A64-typeI"));
  CHECK(ex13.code == 0);
  CHECK(contains(first_line(ex13.out), "Type I"));
  CHECK(contains(first_line(ex13.out), "weak-KT"));

  const auto mixed = run(cli() + " classify " + exported("sec2-mixed"));
  CHECK(mixed.code == 0);
  CHECK(contains(first_line(mixed.out), "Mixed"));
  CHECK(contains(first_line(mixed.out), "non-integrable"));
}

TEST_CASE("classify --json carries exactly the library's numbers") {
  using namespace lie2herm;
  const std::string path = exported("ex8-A412-typeI");
  const auto r = run(cli() + " classify --json " + path);
  REQUIRE(r.code == 0);
  const json out = json::parse(r.out);

  const AlgebraFile file = load_algebra_file(path);
  const MetricLieAlgebra L = to_algebra(file);
  const AlmostComplexStructure J(*file.J);
  const ClassificationReport rep = classify(L, J);
  const auto dec = decompose_extended(L, std::make_pair(*file.hint_e1, *file.hint_e2));
  const auto jt = classify_J_type(L, J, dec);

  CHECK(out.at("compatible").get<bool>() == rep.compatible);
  CHECK(out.at("compatibility_residual").get<double>() == rep.compatibility_residual);
  CHECK(out.at("nijenhuis_residual").get<double>() == rep.nijenhuis_residual);
  CHECK(out.at("integrable").get<bool>() == rep.integrable);
  CHECK(out.at("abelian").get<bool>() == rep.abelian);
  CHECK(out.at("abelian_residual").get<double>() == rep.abelian_residual);
  CHECK(out.at("verdict").get<std::string>() == to_string(rep.verdict));
  CHECK(out.at("domega_norm").get<double>() == rep.domega_norm);
  CHECK(out.at("c_norm").get<double>() == rep.c_norm);
  CHECK(out.at("dc_norm").get<double>() == rep.dc_norm);
  CHECK(out.at("type").get<std::string>() == to_string(jt.type));
  CHECK(out.at("lambda").get<double>() == jt.lambda);
  CHECK(out.at("mu").get<double>() == jt.mu);
  CHECK(out.at("dc_top").get<double>() == dc_top(L, J, dec));
}

TEST_CASE("tolerance widening changes the verdict ladder") {
  const std::string path = exported("sec2-mixed");

  const auto strict = run(cli() + " classify " + path);
  CHECK(contains(strict.out, "non-integrable"));

  // 0.5-sized residuals pass at 0.6; |domega| = sqrt(2)/2 still fails.
  const auto wide = run(cli() + " --tol 0.6 classify " + path);
  CHECK(wide.code == 0);
  CHECK(contains(wide.out.substr(0, wide.out.find('\n')), "SKT"));

  const auto via_env = run("LIE2_TOL=0.6 " + cli() + " classify " + path);
  CHECK(via_env.code == 0);
  CHECK(via_env.out == wide.out);
}

TEST_CASE("connection output") {
  const auto flat = write_file("flat.lie2", "dim 4\n");
  const auto lc = run(cli() + " connection " + flat.string() + " levi-civita");
  CHECK(lc.code == 0);
  CHECK(contains(lc.out, "(all coefficients zero)"));

  const auto bis = run(cli() + " connection " + exported("ex12-rr-typeII") + " bismut");
  CHECK(bis.code == 0);
  CHECK(contains(bis.out, "nabla_b1 b1 = b3"));

  const auto nonherm = run(cli() + " connection " + exported("sec2-mixed") + " bismut");
  CHECK(nonherm.code == 1);
  CHECK(contains(nonherm.out, "error:"));
}

TEST_CASE("curvature output") {
  const auto r = run(cli() + " curvature " + exported("ex9-h3R-typeI"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "K(b1, b2) = 0\n"));
  CHECK(contains(r.out, "K(b1, b3) = 0.25"));
  CHECK(contains(r.out, "K(b3, b4) = -0.75"));
}

TEST_CASE("search output") {
  const auto none = run(cli() + " search-type2 --grid 24 " + exported("ex9-h3R-typeI"));
  CHECK(none.code == 0);
  CHECK(contains(none.out, "none found"));

  const auto some = run(cli() + " search-type2 --grid 8 " + exported("ex8-A412-typeI"));
  CHECK(some.code == 0);
  CHECK(contains(some.out, "Hermitian Type II frame(s):"));

  const auto toobig = run(cli() + " search-type2 --grid 8 " + exported("ex13-A64-typeI"));
  CHECK(toobig.code == 1);
}

TEST_CASE("catalog listing and validation of names") {
  const auto all = run(cli() + " catalog");
  CHECK(all.code == 0);
  for (const auto& name : lie2herm::catalog_names()) CHECK(contains(all.out, name));

  const auto unknown = run(cli() + " catalog no-such-entry");
  CHECK(unknown.code == 1);
  CHECK(contains(unknown.out, "error:"));

  const auto one = run(cli() + " catalog ex12-rr-typeII --json");
  CHECK(one.code == 0);
  const json arr = json::parse(one.out);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 1);
  CHECK(arr[0].at("name").get<std::string>() == "ex12-rr-typeII");
  CHECK(arr[0].at("verdict").get<std::string>() == "Kahler");
}
