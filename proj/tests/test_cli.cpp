#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support/oracles.hpp"
#include "tauroot/io.hpp"

namespace {

#ifndef TAUROOT_GOLDEN_DIR
#error "TAUROOT_GOLDEN_DIR must be defined"
#endif

const std::string kGolden = TAUROOT_GOLDEN_DIR;
const std::string kData = kGolden + "/../data";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = tauroot::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  EXPECT_TRUE(f.good()) << path;
  return {std::istreambuf_iterator<char>(f), {}};
}

tauroot::Json json_of(const Result& r) { return tauroot::Json::parse(r.out); }

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    ::setenv(name, value, 1);
  }
  ~ScopedEnv() {
    if (old_) ::setenv(name_, old_->c_str(), 1);
    else ::unsetenv(name_);
  }

 private:
  const char* name_;
  std::optional<std::string> old_;
};

}  // namespace

struct GoldenCase {
  std::vector<std::string> args;
  std::string file;
};

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, ByteExact) {
  auto args = GetParam().args;
  for (auto& a : args)
    if (a.rfind("@data/", 0) == 0) a = kData + a.substr(5);
  const auto r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, slurp(kGolden + "/" + GetParam().file));
  EXPECT_EQ(run(args).out, r.out);
}

INSTANTIATE_TEST_SUITE_P(
    Figures, Golden,
    ::testing::Values(
        GoldenCase{{"mckay", "--n", "5", "--weights", "1,3,3,3"}, "mckay_5_1333.json"},
        GoldenCase{{"mckay", "--n", "6", "--weights", "1,1,1,4,5"}, "mckay_6_11145.json"},
        GoldenCase{{"hquiver", "--n", "5", "--weights", "1,3,3,3", "--kept", "1,2", "--dim", "3"},
                   "hquiver_5_1333_kept_1_2.json"},
        GoldenCase{{"hquiver", "--n", "6", "--weights", "1,1,1,4,5", "--kept", "0", "--dim", "4"},
                   "hquiver_6_11145_kept_0.json"},
        GoldenCase{{"hquiver", "--n", "6", "--weights", "1,1,1,4,5", "--kept", "0,3", "--dim", "4"},
                   "hquiver_6_11145_kept_0_3.json"},
        GoldenCase{{"cy-reduce", "--presentation", "@data/diamond.json", "--removed", "3"},
                   "cy_reduce_a5tilde.json"}));

TEST(Cli, McKayExitCodes) {
  EXPECT_EQ(run({"mckay", "--n", "5", "--weights", "1,3,3,4"}).code, 1);
  EXPECT_EQ(run({"mckay", "--n", "5"}).code, 2);
  EXPECT_EQ(run({"mckay", "--n", "five", "--weights", "1"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, McKayVerdict) {
  const auto r = run({"mckay", "--n", "6", "--weights", "1,1,1,4,5", "--kept", "0,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["verdict"], "semisimple hereditary");
  const auto r2 = run({"mckay", "--n", "6", "--weights", "1,1,1,4,5", "--kept", "0,1"});
  EXPECT_EQ(json_of(r2)["verdict"], "not hereditary");
  const auto r3 = run({"mckay", "--n", "5", "--weights", "1,3,3,3", "--kept", "1,2"});
  EXPECT_EQ(json_of(r3)["verdict"], "hereditary");
}

TEST(Cli, HQuiverErrors) {
  EXPECT_EQ(run({"hquiver", "--dim", "4", "--kept", "0,1", "--n", "6", "--weights", "1,1,1,4,5"}).code, 1);
  EXPECT_EQ(run({"hquiver", "--dim", "5", "--kept", "0", "--n", "6", "--weights", "1,1,1,4,5"}).code, 2);
  const auto dot = run({"hquiver", "--n", "6", "--weights", "1,1,1,4,5", "--kept", "0", "--dim", "4", "--dot"});
  ASSERT_EQ(dot.code, 0);
  EXPECT_EQ(oracle::dot_grammar_error(dot.out), "");
}

TEST(Cli, ArAngle) {
  const auto r = run({"ar-angle", "--n", "5", "--weights", "1,3,3,3", "--kept", "1,2", "--j", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["terms"][1]["mult"]["2"], 3);
  const auto all = run({"ar-angle", "--n", "5", "--weights", "1,3,3,3", "--kept", "1,2"});
  EXPECT_EQ(json_of(all).size(), 2u);
  EXPECT_EQ(run({"ar-angle", "--n", "5", "--weights", "1,3,3,3", "--kept", "1,2", "--j", "0"}).code, 1);
}

TEST(Cli, RootSearch) {
  const auto r = run({"root-search", "--quiver", kData + "/a4.json", "--l", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["offset_bound"], 4);
  ASSERT_EQ(j["roots"].size(), 1u);
  EXPECT_EQ(j["roots"][0], tauroot::Json::parse(slurp(kData + "/a4_root.json")));
  const auto a3 = run({"root-search", "--quiver", kData + "/a3.json", "--l", "2"});
  EXPECT_EQ(a3.code, 0);
  EXPECT_TRUE(json_of(a3)["roots"].empty());
  EXPECT_EQ(run({"root-search", "--quiver", kData + "/missing.json", "--l", "2"}).code, 2);
  EXPECT_EQ(run({"root-search", "--quiver", kData + "/a4.json", "--l", "0"}).code, 2);
}

TEST(Cli, OffsetBoundEnvironment) {
  {
    ScopedEnv env("TAUROOT_OFFSET_BOUND", "1");
    const auto r = run({"root-search", "--quiver", kData + "/a4.json", "--l", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json_of(r)["offset_bound"], 1);
    EXPECT_TRUE(json_of(r)["roots"].empty());
    const auto flag = run({"root-search", "--quiver", kData + "/a4.json", "--l", "2", "--offset-bound", "2"});
    EXPECT_EQ(json_of(flag)["roots"].size(), 1u);
  }
  ScopedEnv bad("TAUROOT_OFFSET_BOUND", "lots");
  EXPECT_EQ(run({"root-search", "--quiver", kData + "/a4.json", "--l", "2"}).code, 2);
}

TEST(Cli, FSection) {
  const auto r = run({"f-section", "--quiver", kData + "/a4.json", "--autom", kData + "/a4_root.json", "--l", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["f_section"].dump(), R"([{"base":"1","level":0},{"base":"2","level":0}])");
  EXPECT_EQ(j["section"].size(), 4u);
  EXPECT_TRUE(j["is_f_section"].get<bool>());
  EXPECT_TRUE(j["is_section"].get<bool>());
  EXPECT_TRUE(j["no_backward_arrows"].get<bool>());
  const auto bad = run({"f-section", "--quiver", kData + "/a4.json", "--autom", kData + "/a4_root.json", "--l", "3"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("NotARoot"), std::string::npos);
}

TEST(Cli, NormalForm) {
  const auto r = run({"normal-form", "--quiver", kData + "/a5tilde.json", "--l", "2", "--partition",
                      kData + "/a5tilde_levels.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_TRUE(j["normal_form"].get<bool>());
  EXPECT_EQ(j["root"]["delta"].dump(), R"({"1":0,"2":0,"4":0,"1'":1,"2'":1,"4'":1})");
  EXPECT_TRUE(j["is_root"].get<bool>());
  EXPECT_EQ(run({"normal-form", "--quiver", kData + "/a5tilde.json", "--l", "3", "--partition",
                 kData + "/a5tilde_levels.json"}).code,
            1);
  const auto searched = run({"normal-form", "--quiver", kData + "/a5tilde.json", "--l", "2"});
  EXPECT_TRUE(json_of(searched)["normal_form"].get<bool>());
  const auto none = run({"normal-form", "--quiver", kData + "/a3.json", "--l", "2"});
  EXPECT_EQ(none.code, 0);
  EXPECT_TRUE(json_of(none)["partition"].is_null());
}

TEST(Cli, Star) {
  const auto r = run({"star", "--n", "2", "--m", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto q = tauroot::quiver_from_json(json_of(r));
  EXPECT_EQ(q.vertex_count(), 5u);
  EXPECT_EQ(q.arrows.size(), 5u);
  for (const auto& a : q.arrows) EXPECT_EQ(a.mult, 1);
}

TEST(Cli, DynkinSurvey) {
  const auto r = run({"dynkin-survey", "--family", "A2,A3,A4,D4", "--lmax", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::set<std::pair<std::string, int>> with_roots;
  for (const auto& row : json_of(r))
    if (row["root_exists"].get<bool>()) with_roots.insert({row["quiver"].get<std::string>(), row["l"].get<int>()});
  EXPECT_EQ(with_roots, (std::set<std::pair<std::string, int>>{{"A2", 2}, {"A4", 2}}));
  EXPECT_EQ(run({"dynkin-survey", "--family", "Q7"}).code, 1);
  EXPECT_EQ(run({"dynkin-survey", "--family", "A2", "--lmax", "1"}).code, 2);
}

TEST(Cli, ConvertRoundTrip) {
  const auto dot = run({"convert", "--in", kGolden + "/mckay_5_1333.json"});
  ASSERT_EQ(dot.code, 0) << dot.err;
  EXPECT_EQ(oracle::dot_grammar_error(dot.out), "");
  const auto back = run({"convert", "--in", "-"}, dot.out);
  ASSERT_EQ(back.code, 0) << back.err;
  EXPECT_EQ(tauroot::quiver_from_json(json_of(back)),
            tauroot::quiver_from_json(tauroot::Json::parse(slurp(kGolden + "/mckay_5_1333.json"))));
  EXPECT_EQ(run({"convert", "--in", "-"}, "{").code, 1);
  EXPECT_EQ(run({"convert", "--in", "-", "--to", "svg"}, "{}").code, 2);
  const auto rep = run({"convert", "--in", kGolden + "/hquiver_6_11145_kept_0.json", "--repeat-edges"});
  EXPECT_EQ(std::count(rep.out.begin(), rep.out.end(), '>'), 9);
}
