#include "hkmono/cli.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace hkmono;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "hkmono");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  int s = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err, in);
  return {s, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), {"--format", "json"});
  auto r = run(args, stdin_text);
  EXPECT_EQ(r.status, 0) << r.err;
  return json::parse(r.out);
}

std::string sample(const std::string& name) { return std::string(HKMONO_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST(Cli, NuFromNormalForm) {
  auto j = run_json({"nu"}, R"({"normal_form": {"type": "III", "b2": 4}})");
  EXPECT_EQ(j["nu"], 2);
  EXPECT_EQ(j["graded_dims"]["2"], 1);
}

TEST(Cli, NuZeroAndIdentity) {
  EXPECT_EQ(run_json({"nu", "--input", sample("zero_3x3.json")})["nu"], 0);
  auto r = run({"nu", "--input", sample("identity_2x2.json")});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("not nilpotent"), std::string::npos);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"nu", "--input", sample("malformed.json")}).status, 2);
  EXPECT_EQ(run({"nu"}, "{\"matrix\": [[\"1/0\"]]}").status, 2);
  EXPECT_EQ(run({"nu", "--input", "/nonexistent/file.json"}).status, 2);
  EXPECT_EQ(run({"nu", "--bogus"}).status, 2);
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"criterion", "--input", sample("bad_weight.json")}).status, 2);
}

TEST(Cli, Filtration) {
  auto j = run_json({"filtration", "--input", sample("jordan_block_3.json")});
  EXPECT_EQ(j["verified"], true);
  EXPECT_EQ(j["subspaces"]["0"].size(), 2u);
}

TEST(Cli, NormalFormFormats) {
  auto csv = run({"normal-form", "--type", "II", "--b2", "5", "--format", "csv"});
  EXPECT_EQ(csv.status, 0);
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 6);
  auto md = run({"normal-form", "--type", "III", "--b2", "4"});
  EXPECT_EQ(md.status, 0);
  EXPECT_NE(md.out.find("|"), std::string::npos);
  EXPECT_EQ(run({"normal-form", "--type", "IV", "--b2", "5"}).status, 2);
  EXPECT_EQ(run({"normal-form", "--type", "II", "--b2", "4"}).status, 1);
}

TEST(Cli, VerifyThm52) {
  auto five = run_json({"verify-thm52", "--b2", "5"});
  EXPECT_EQ(five["pass"], true);
  auto four = run_json({"verify-thm52", "--b2", "4"});
  EXPECT_EQ(four["sections"][0]["cases"].size(), 2u);
  auto range = run_json({"--jobs", "4", "verify-thm52", "--range", "4..24"});
  EXPECT_EQ(range["sections"].size(), 21u);
  EXPECT_EQ(range["pass"], true);
  EXPECT_EQ(run({"verify-thm52", "--range", "9..x"}).status, 2);
}

TEST(Cli, CliffordCheck) {
  auto j = run_json({"clifford-check", "--b2", "7", "--type", "II"});
  EXPECT_EQ(j["spin"]["dim"], 8);
  EXPECT_EQ(j["spin_nu"], 1);
  EXPECT_EQ(j["pass"], true);
}

TEST(Cli, WeylMaxAndBranch) {
  auto w = run_json({"weyl-max", "--family", "D", "--rank", "2", "--lambda", "1,1", "--h", "1,-1"});
  EXPECT_EQ(w["value"], "0");
  auto b = run_json({"branch", "--input", sample("weight_B3_200.json")});
  EXPECT_EQ(b["grades"].size(), 5u);
  auto bad = run({"weyl-max", "--family", "C", "--rank", "2", "--lambda", "1,1", "--h", "1,0"});
  EXPECT_EQ(bad.status, 2);
}

TEST(Cli, Criterion) {
  auto v = run_json({"criterion", "--input", sample("verbitsky_n3_b2_7.json")});
  EXPECT_EQ(v["condition1"], true);
  EXPECT_EQ(v["agree"], true);
  auto x = run_json({"criterion", "--input", sample("extra_component_n3_b2_7.json")});
  EXPECT_EQ(x["condition1"], false);
  EXPECT_EQ(x["condition2"], false);
  EXPECT_EQ(x["agree"], true);
}

TEST(Cli, PredictTables) {
  auto nu_list = [](const json& j) {
    std::vector<int> out;
    for (const auto& e : j["entries"]) out.push_back(e["value"].get<int>());
    return out;
  };
  auto in = sample("verbitsky_n3_b2_7.json");
  EXPECT_EQ(nu_list(run_json({"predict", "--input", in, "--type", "III"})), (std::vector<int>{0, 2, 4, 6, 4, 2, 0}));
  EXPECT_EQ(nu_list(run_json({"predict", "--input", in, "--type", "II"})), (std::vector<int>{0, 1, 2, 3, 2, 1, 0}));
  EXPECT_EQ(nu_list(run_json({"predict", "--input", in, "--type", "I"})), (std::vector<int>(7, 0)));
  auto kum = run_json({"predict", "--fixture", "Kumn", "--n", "3", "--type", "II", "--odd"});
  EXPECT_EQ(kum["entries"][1]["value"], 1);
  EXPECT_TRUE(kum["entries"][2]["value"].is_null());
}

TEST(Cli, LlvToyAndOutputFile) {
  auto j = run_json({"llv-toy", "--b2", "4"});
  EXPECT_EQ(j["dim"], 15);
  std::string path = testing::TempDir() + "hkmono_cli_out.json";
  auto r = run({"--format", "json", "--output", path, "llv-toy", "--b2", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  EXPECT_EQ(json::parse(f)["dim"], 10);
}
