#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

fs::path tmp_dir() {
  const fs::path dir = fs::path(CAG_TEST_TMPDIR) / ::testing::UnitTest::GetInstance()->current_test_info()->name();
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

CliResult cag(const std::string& args) {
  const fs::path dir = tmp_dir();
  const fs::path out = dir / "stdout.txt";
  const fs::path err = dir / "stderr.txt";
  const std::string cmd = std::string("\"") + CAG_BINARY + "\" " + args + " >\"" + out.string() + "\" 2>\"" +
                          err.string() + "\"";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string path(const std::string& name) { return (tmp_dir() / name).string(); }

const char* kC4 = R"({"vertices":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","d"],["d","a"]]})";
const char* kK3 = R"({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"],["a","c"]]})";
const char* kTwoArcs = R"({"vertices":["x","y"],"arcs":[{"l":"0/1","r":"1/8"},{"l":"1/2","r":"5/8"}]})";

TEST(Cli, GenAndStats) {
  ASSERT_EQ(cag("gen roberts --n 6 --out " + path("r6.json")).code, 0);
  const CliResult stats = cag("stats --in " + path("r6.json"));
  EXPECT_EQ(stats.code, 0);
  EXPECT_EQ(stats.out, "{\"n\":6,\"delta\":4,\"r_inf\":2,\"L\":3,\"covered\":true,\"min_alpha\":null}\n");

  spit(path("two.json"), kTwoArcs);
  EXPECT_EQ(cag("stats --in " + path("two.json")).out,
            "{\"n\":2,\"delta\":0,\"r_inf\":0,\"L\":null,\"covered\":false,\"min_alpha\":null}\n");
}

TEST(Cli, GenIsDeterministic) {
  ASSERT_EQ(cag("gen random --n 20 --max-len 1/5 --seed 7 --out " + path("a.json")).code, 0);
  ASSERT_EQ(cag("gen random --n 20 --max-len 1/5 --seed 7 --out " + path("b.json")).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  const CliResult to_stdout = cag("gen random --n 20 --max-len 1/5 --seed 7");
  EXPECT_EQ(to_stdout.out, slurp(path("a.json")));
  EXPECT_EQ(cag("gen tightness --alpha 2 --n 12 --out " + path("t.json")).code, 0);
  EXPECT_EQ(cag("gen tightness --alpha 2 --n 10").code, 2);
  EXPECT_EQ(cag("gen roberts --n 5").code, 2);
}

TEST(Cli, Normalize) {
  ASSERT_EQ(cag("gen roberts --n 6 --out " + path("r6.json")).code, 0);
  const CliResult ok = cag("normalize --in " + path("r6.json") + " --alpha 3 --out " + path("n.json"));
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "{\"n\":6,\"delta\":4}\n");
  EXPECT_EQ(cag("stats --in " + path("n.json")).code, 0);

  spit(path("one.json"), R"({"vertices":["a"],"arcs":[{"l":"0/1","r":"1/2"}]})");
  EXPECT_EQ(cag("normalize --in " + path("one.json") + " --out " + path("x.json")).code, 2);

  spit(path("full.json"), R"({"vertices":["a","b"],"arcs":[{"l":"1/4","r":"5/4"},{"l":"0/1","r":"1/2"}]})");
  const CliResult full = cag("normalize --in " + path("full.json") + " --out " + path("x.json"));
  EXPECT_EQ(full.code, 2);
  EXPECT_NE(full.err.find("FullCircleArc"), std::string::npos);

  EXPECT_EQ(cag("normalize --in " + path("missing.json") + " --out " + path("x.json")).code, 2);
}

TEST(Cli, Build) {
  ASSERT_EQ(cag("gen roberts --n 6 --out " + path("r6.json")).code, 0);
  const CliResult overlap = cag("build --in " + path("r6.json") + " --method overlap --out " + path("rep.json"));
  EXPECT_EQ(overlap.code, 0);
  EXPECT_EQ(overlap.out, "{\"dims\":3,\"method_used\":\"overlap\"}\n");

  const CliResult cover = cag("build --in " + path("r6.json") + " --method cover --out " + path("c.json"));
  EXPECT_EQ(cover.code, 2);
  EXPECT_NE(cover.err.find("CoverTooSmall"), std::string::npos);

  EXPECT_EQ(cag("build --in " + path("r6.json") + " --method degree --out " + path("d.json")).code, 2);
  EXPECT_EQ(cag("build --in " + path("r6.json") + " --method boxes --out " + path("d.json")).code, 2);

  spit(path("two.json"), kTwoArcs);
  const CliResult automatic = cag("build --in " + path("two.json") + " --out " + path("auto.json"));
  EXPECT_EQ(automatic.code, 0);
  EXPECT_EQ(automatic.out, "{\"dims\":1,\"method_used\":\"interval\"}\n");
  EXPECT_NE(automatic.err.find("applicable"), std::string::npos);
  EXPECT_NE(automatic.err.find("chosen"), std::string::npos);
}

TEST(Cli, BuildIsByteIdentical) {
  ASSERT_EQ(cag("gen random --n 30 --max-len 1/8 --seed 3 --out " + path("f.json")).code, 0);
  for (const char* method : {"auto", "overlap", "degree"}) {
    ASSERT_EQ(cag("build --in " + path("f.json") + " --method " + method + " --out " + path("1.json")).code, 0);
    ASSERT_EQ(cag("build --in " + path("f.json") + " --method " + method + " --out " + path("2.json")).code, 0);
    EXPECT_EQ(slurp(path("1.json")), slurp(path("2.json"))) << method;
  }
}

TEST(Cli, Verify) {
  ASSERT_EQ(cag("gen roberts --n 6 --out " + path("r6.json")).code, 0);
  ASSERT_EQ(cag("build --in " + path("r6.json") + " --method overlap --out " + path("rep.json")).code, 0);
  const CliResult fresh = cag("verify --rep " + path("rep.json") + " --arcs " + path("r6.json"));
  EXPECT_EQ(fresh.code, 0);
  EXPECT_EQ(fresh.out, "{\"extra_edges\":[],\"missing_edges\":[],\"ok\":true}\n");

  // Move a0 clear of everything in the first dimension.
  std::string rep = slurp(path("rep.json"));
  const auto at = rep.find("\"intervals\"");
  const auto open = rep.find("[", rep.find("[", rep.find("[", at) + 1) + 1);
  const auto close = rep.find("]", open);
  rep.replace(open, close - open + 1, "[\"100/1\", \"101/1\"]");
  spit(path("bad.json"), rep);
  const CliResult tampered = cag("verify --rep " + path("bad.json") + " --arcs " + path("r6.json"));
  EXPECT_EQ(tampered.code, 1);
  EXPECT_NE(tampered.out.find("\"a0\""), std::string::npos);
  EXPECT_NE(tampered.out.find("\"ok\":false"), std::string::npos);

  spit(path("c4.json"), kC4);
  EXPECT_EQ(cag("verify --rep " + path("rep.json") + " --graph " + path("c4.json")).code, 2);
  EXPECT_EQ(cag("verify --rep " + path("rep.json")).code, 2);
}

TEST(Cli, Oracle) {
  spit(path("c4.json"), kC4);
  spit(path("k3.json"), kK3);
  EXPECT_EQ(cag("oracle --in " + path("c4.json")).out, "{\"boxicity\":2}\n");
  EXPECT_EQ(cag("oracle --in " + path("k3.json")).out, "{\"boxicity\":0}\n");

  std::string big = R"({"vertices":[)";
  for (int i = 0; i < 12; ++i) big += (i ? ",\"" : "\"") + std::to_string(i) + "\"";
  big += R"(],"edges":[]})";
  spit(path("big.json"), big);
  const CliResult too_large = cag("oracle --in " + path("big.json"));
  EXPECT_EQ(too_large.code, 2);
  EXPECT_NE(too_large.err.find("TooLarge"), std::string::npos);
  EXPECT_EQ(cag("oracle --in " + path("c4.json") + " --max-n 3").code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cag("").code, 2);
  EXPECT_EQ(cag("frobnicate").code, 2);
  EXPECT_EQ(cag("stats").code, 2);
  EXPECT_EQ(cag("--help").code, 0);
}

}  // namespace
