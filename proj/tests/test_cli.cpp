#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + quote(NEWTON_ATLAS_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("newton_atlas_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(CliPolygon, SigmaMarksDisappearingMonomial) {
  auto r = run("polygon " + quote("x^2*y^2 + s*x*y + x") + " --sigma 0 --format svg");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("<circle cx=\"48\" cy=\"" ), std::string::npos);
  EXPECT_NE(r.out.find("fill=\"white\" stroke=\"black\""), std::string::npos);
  auto j = json_of(run("polygon " + quote("x^2*y^2 + s*x*y + x") + " --sigma 0"));
  EXPECT_EQ(j["disappearing"].dump(), "[[1,1]]");
}

TEST(CliPolygon, SegmentAndEvaluation) {
  auto seg = json_of(run("polygon x"));
  EXPECT_EQ(seg["degeneracy"], "segment");
  EXPECT_EQ(seg["nu"], 0);
  auto q = json_of(run("polygon " + quote("x^4 - x^2*y^2 + 2*x*y + s*x^2") + " --at 1"));
  EXPECT_EQ(q["nu"], 5);
}

TEST(CliPolygon, WritesSvgFile) {
  auto path = temp_path("poly.svg");
  auto r = run("polygon " + quote("x + s*y^2") + " --sigma 0 --svg " + quote(path.string()));
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("<svg"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(CliInvariants, Examples) {
  auto a = json_of(run("invariants " + quote("x^2*y^2 + x")));
  EXPECT_EQ(a["nu"], 2);
  EXPECT_EQ(a["mu"], 0);
  EXPECT_EQ(a["lambda"], 2);
  EXPECT_EQ(a["binf"].dump(), "[[0.0,0.0]]");
  auto b = json_of(run("invariants " + quote("x^2 + y^2")));
  EXPECT_EQ(b["lambda"], 0);
  EXPECT_TRUE(b["binf"].empty());
  auto c = json_of(run("invariants " + quote("(x-1)*(x*y-1)")));
  EXPECT_EQ(c["baff"].dump(), "[[0.0,0.0],[1.0,0.0]]");
  auto d = json_of(run("invariants " + quote("x^2*y^2 + s*x*y + x") + " --at 1"));
  EXPECT_EQ(d["binf"].dump(), "[[-0.25,0.0]]");
}

TEST(CliInvariants, FileInputAndTsv) {
  auto path = temp_path("expr.txt");
  {
    std::ofstream out(path);
    out << "x^3 - 3*x + y^2\n";
  }
  auto r = run("invariants --file " + quote(path.string()) + " --format tsv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("key\tvalue\n", 0), 0u);
  EXPECT_NE(r.out.find("mu\t2\n"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(CliInvariants, ExitCodes) {
  EXPECT_EQ(run("invariants " + quote("x^2 + * y")).code, 2);
  EXPECT_EQ(run("invariants").code, 2);
  EXPECT_EQ(run("invariants " + quote("x*s")).code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("invariants " + quote("x^2*y*(1+x^4*y)")).code, 3);
  EXPECT_EQ(run("invariants " + quote("(x+y)^2*x*y + x + y")).code, 4);
  auto r = run("invariants " + quote("(x+y)^2*x*y + x + y") + " --allow-degenerate");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(json_of(r)["lambda"].is_null());
}

TEST(CliFamily, Examples) {
  auto q = json_of(run("family " + quote("x + s*y^2") + " --samples 5"));
  EXPECT_EQ(q["degree"]["verdict"], "quasi-constant-degree");
  EXPECT_EQ(q["degree"]["automorphism"]["kind"], "shear-x-by-y");
  EXPECT_EQ(q["degree"]["automorphism"]["l"], 3);
  auto n = json_of(run("family " + quote("s*x*y + x") + " --samples 5"));
  EXPECT_EQ(n["degree"]["verdict"], "neither");
  auto r = json_of(run("family " + quote("x^2*y^2 + s*x*y + x") + " --samples 33"));
  EXPECT_EQ(r["sweep"]["mu_lambda_constant"], true);
  EXPECT_EQ(r["sweep"]["continuity_ok"], true);
  EXPECT_EQ(r["sweep"]["closedness_ok_binf"], true);
}

TEST(CliFamily, UsageErrors) {
  EXPECT_EQ(run("family " + quote("x + y")).code, 2);
  EXPECT_EQ(run("family " + quote("x + s*y") + " --samples 2").code, 2);
  EXPECT_EQ(run("family " + quote("x + s*y") + " --interval 1 0").code, 2);
  EXPECT_EQ(run("family " + quote("x + s*y") + " --tol -1").code, 2);
}

TEST(CliFamily, DeterministicAndSeedFromEnvironment) {
  std::string args = "family " + quote("(x-s)*(x*y-1)") + " --samples 9";
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto c = run(args + " --seed 99"), d = run(args, "NEWTON_ATLAS_SEED=99");
  EXPECT_EQ(c.out, d.out);
  EXPECT_EQ(run(args, "NEWTON_ATLAS_SEED=abc").code, 2);
}

TEST(CliFamily, OutputFile) {
  auto path = temp_path("family.json");
  auto r = run("family " + quote("x + s*y^2") + " --samples 3 -o " + quote(path.string()));
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["family"], "s*y^2 + x");
  std::filesystem::remove(path);
}
