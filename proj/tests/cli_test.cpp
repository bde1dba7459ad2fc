#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ucsiac/json_io.hpp"
#include "ucsiac/standard.hpp"

using namespace ucs;
using io::Json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(UCSIAC_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const std::string& name) { return std::string(UCSIAC_SAMPLES) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("ucsiac_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, ConstructMatchesLibrary) {
  const CliRun sl = cli("construct sl2 --q 3");
  ASSERT_EQ(sl.code, 0);
  EXPECT_EQ(io::algebra_from_json(io::parse(sl.out)), sl2(Field::make(3)));

  const CliRun th = cli("construct th52b --q 7");
  ASSERT_EQ(th.code, 0);
  EXPECT_EQ(io::algebra_from_json(io::parse(th.out)), th52b(Field::make(7)));

  const CliRun s6 = cli("construct sec6 --b 2 --n 5 --q 11");
  ASSERT_EQ(s6.code, 0);
  EXPECT_EQ(io::algebra_from_json(io::parse(s6.out)).dim(), 4u);

  const CliRun g = cli("construct gamma --m 6 --q 13");
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(io::algebra_from_json(io::parse(g.out)).dim(), 7u);

  const CliRun f9 = cli("construct sl2 --q 9");
  ASSERT_EQ(f9.code, 0);
  EXPECT_EQ(io::algebra_from_json(io::parse(f9.out)).field(), Field::make(3, 2));
}

TEST(Cli, SamplesAreCurrent) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"sl2_f3.json", "construct sl2 --q 3"},          {"sl2_f5.json", "construct sl2 --q 5"},
      {"th52b_f3.json", "construct th52b --q 3"},      {"th52b_printed_f3.json", "construct th52b --q 3 --printed"},
      {"abelian_f3_2.json", "construct abelian --q 3 --dim 2"},
      {"sec6_b2_n5_q11.json", "construct sec6 --b 2 --n 5 --q 11"}};
  for (const auto& [file, args] : cases) {
    std::ifstream in(sample(file));
    const std::string text{std::istreambuf_iterator<char>(in), {}};
    EXPECT_EQ(cli(args).out, text) << file;
  }
}

TEST(Cli, Census) {
  const CliRun r = cli("census --q 3");
  ASSERT_EQ(r.code, 0);
  const Json j = io::parse(r.out);
  EXPECT_EQ(j["class_count"].get<int>(), 2);
  EXPECT_EQ(cli("census --q 5").code, 2);
}

TEST(Cli, Verify) {
  const CliRun r = cli("verify " + sample("sl2_f3.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("jacobi=true\n"), std::string::npos);
  EXPECT_NE(r.out.find("simple=true\n"), std::string::npos);
  EXPECT_NE(r.out.find("group_order=729\n"), std::string::npos);
  EXPECT_NE(r.out.find("round_trip=true\n"), std::string::npos);
  EXPECT_EQ(cli("verify " + sample("sl2_f3.json") + " --expect jacobi=true").code, 0);
  EXPECT_EQ(cli("verify " + sample("sl2_f3.json") + " --expect jacobi=false").code, 1);
  EXPECT_EQ(cli("verify " + sample("sl2_f3.json") + " --expect colour=red").code, 2);
  const CliRun g = cli("verify " + sample("gamma6_f13.json"));
  EXPECT_NE(g.out.find("jacobi=false\n"), std::string::npos);
  EXPECT_NE(g.out.find("malcev=true\n"), std::string::npos);
}

TEST(Cli, RoundTripAndAudit) {
  const CliRun rt = cli("roundtrip " + sample("sec6_b2_n5_q11.json"));
  EXPECT_EQ(rt.code, 0);
  EXPECT_EQ(rt.out, "tables identical: true\nrelations hold: true\n");
  const CliRun au = cli("audit " + sample("sl2_f3.json"));
  ASSERT_EQ(au.code, 0);
  const Json j = io::parse(au.out);
  EXPECT_EQ(j["proper_nonzero"].get<int>(), 26);
  EXPECT_TRUE(j["all_agree"].get<bool>());
}

TEST(Cli, DualizeBothFormats) {
  const CliRun js = cli("dualize --to-group " + sample("sl2_f3.json"));
  ASSERT_EQ(js.code, 0);
  const PcGroup G = io::group_from_json(io::parse(js.out));
  EXPECT_EQ(G.order(), 729u);

  const CliRun pcp = cli("dualize --to-group --format pcp " + sample("sl2_f3.json"));
  ASSERT_EQ(pcp.code, 0);
  EXPECT_EQ(io::group_from_pcp(pcp.out), G);
  std::ifstream in(sample("sl2_f3.pcp"));
  EXPECT_EQ(pcp.out, std::string(std::istreambuf_iterator<char>(in), {}));

  const CliRun back = cli("dualize --to-algebra " + sample("sl2_f3.pcp"));
  ASSERT_EQ(back.code, 0);
  EXPECT_EQ(io::algebra_from_json(io::parse(back.out)), sl2(Field::make(3)));
  const std::string gj = temp_file("group.json", js.out);
  EXPECT_EQ(io::algebra_from_json(io::parse(cli("dualize --to-algebra " + gj).out)), sl2(Field::make(3)));
  EXPECT_EQ(cli("dualize " + sample("sl2_f3.json")).code, 2);
}

TEST(Cli, AutIsoDecompose) {
  const CliRun a = cli("aut " + sample("th52b_f3.json"));
  ASSERT_EQ(a.code, 0);
  const Json j = io::parse(a.out);
  EXPECT_EQ(j["count"].get<int>(), 20);
  EXPECT_EQ(j["element_orders"]["5"].get<int>(), 4);
  EXPECT_EQ(j["element_orders"]["4"].get<int>(), 10);

  const CliRun same = cli("iso " + sample("sl2_f3.json") + " " + sample("sl2_f3.json"));
  EXPECT_TRUE(io::parse(same.out)["isomorphic"].get<bool>());
  const CliRun diff = cli("iso " + sample("th52b_f3.json") + " " + sample("th52b_printed_f3.json"));
  EXPECT_FALSE(io::parse(diff.out)["isomorphic"].get<bool>());

  const CliRun d = cli("decompose " + sample("sl2_f3.json"));
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(io::parse(d.out)["count"].get<int>(), 1);
}

TEST(Cli, Cg) {
  const CliRun r = cli("cg --m 2 --n 2 --p 11");
  ASSERT_EQ(r.code, 0);
  const Json j = io::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["multiplicities"].size(), 3u);
  EXPECT_EQ(j["rank_delta"].get<int>(), 4);
  const CliRun sq = cli("cg --m 6 --p 13 --square");
  ASSERT_EQ(sq.code, 0);
  EXPECT_EQ(io::parse(sq.out)["wedge"].size(), 3u);
  EXPECT_EQ(cli("cg --m 3 --n 4 --p 7").code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  EXPECT_EQ(cli("verify /nonexistent/file.json").code, 2);
  EXPECT_EQ(cli("verify " + temp_file("bad.json", "{\"field\":")).code, 2);
  EXPECT_EQ(cli("construct sl2 --q 6").code, 2);
  EXPECT_EQ(cli("construct sec6 --b 2 --n 4 --q 5").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
}

TEST(Cli, OutputFileAndJobs) {
  const auto path = std::filesystem::temp_directory_path() / "ucsiac_cli_test_out.json";
  std::filesystem::remove(path);
  EXPECT_EQ(cli("-o " + path.string() + " construct sl2 --q 5").code, 0);
  std::ifstream in(path);
  EXPECT_EQ(io::algebra_from_json(io::parse(std::string(std::istreambuf_iterator<char>(in), {}))),
            sl2(Field::make(5)));
  const CliRun a1 = cli("--jobs 1 aut " + sample("sl2_f3.json"));
  const CliRun a4 = cli("--jobs 4 aut " + sample("sl2_f3.json"));
  EXPECT_EQ(a1.out, a4.out);
  EXPECT_EQ(cli("--jobs 0 aut " + sample("sl2_f3.json")).code, 2);
}
