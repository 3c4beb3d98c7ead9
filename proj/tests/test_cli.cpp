#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ramsey/cli.hpp"

using namespace ramsey;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "ramsey");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ramsey_cli_test_" + name);
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, TargetNames) {
  EXPECT_EQ(to_edge_list(cli::resolve_target("P4")), "4; 1-2 2-3 3-4");
  EXPECT_EQ(to_edge_list(cli::resolve_target("K1,3")), "4; 1-2 1-3 1-4");
  EXPECT_EQ(to_edge_list(cli::resolve_target("S3")), "4; 1-2 1-3 1-4");
  EXPECT_EQ(cli::resolve_target("K4").edge_count(), 6);
  EXPECT_EQ(to_edge_list(cli::resolve_target("3; 1-2 2-3")), "3; 1-2 2-3");
  EXPECT_EQ(to_edge_list(cli::resolve_target("110")), "3; 1-2 1-3");
  const auto f = temp_file("p4.g");
  std::ofstream(f) << "# path\n4; 1-2 2-3 3-4\n";
  EXPECT_EQ(to_edge_list(cli::resolve_target(f.string())), "4; 1-2 2-3 3-4");
}

TEST(Cli, SolveSmallPath) {
  const auto r = run_cli({"solve", "--n", "3", "--target", "P3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "AliceWin"));
  EXPECT_TRUE(contains(r.out, "pv:"));
}

TEST(Cli, SolveReportsDraw) {
  const auto r = run_cli({"solve", "--n", "4", "--target", "P4", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, ": Draw"));
  const auto json_start = r.out.find('{');
  ASSERT_NE(json_start, std::string::npos);
  const auto rep = parse_report(r.out.substr(json_start));
  ASSERT_EQ(rep.results.size(), 1u);
  EXPECT_EQ(rep.results[0]["outcome"], "Draw");
  EXPECT_EQ(rep.inputs["N"], 4);
}

TEST(Cli, BudgetExhaustionExitsTwo) {
  const auto r = run_cli({"solve", "--n", "6", "--target", "P6", "--budget", "10"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.out, "unsolved"));
}

TEST(Cli, AchievementNumbers) {
  const auto f = temp_file("k13.g");
  std::ofstream(f) << "4; 1-2 1-3 1-4\n";
  const auto p4 = run_cli({"anum", "--target", "P4", "--max", "6"});
  EXPECT_EQ(p4.code, 0);
  EXPECT_TRUE(contains(p4.out, "achievement number: 5"));
  const auto star = run_cli({"anum", "--target", f.string(), "--max", "6"});
  EXPECT_TRUE(contains(star.out, "achievement number: 5"));
  const auto none = run_cli({"anum", "--target", "P4", "--max", "4"});
  EXPECT_EQ(none.code, 0);
  EXPECT_TRUE(contains(none.out, "none up to 4"));
  const auto unknown = run_cli({"anum", "--target", "P6", "--max", "6", "--budget", "10"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_TRUE(contains(unknown.out, "achievement number: unknown"));
}

TEST(Cli, BadInputIsAnError) {
  EXPECT_EQ(run_cli({"solve", "--n", "5"}).code, 1);
  EXPECT_EQ(run_cli({"solve", "--n", "5", "--target", "P4", "--mode", "sideways"}).code, 1);
  EXPECT_EQ(run_cli({"solve", "--n", "5", "--target", "3; 1-2"}).code, 1);
  EXPECT_EQ(run_cli({"solve", "--n", "5", "--target", "P4", "--p", "1", "--q", "2"}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  const auto r = run_cli({"play", "--n", "5", "--target", "P4", "--alice", "nobody", "--bob", "random"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.err, "unknown strategy"));
}

TEST(Cli, Verify) {
  const auto ok = run_cli({"verify", "--n", "6", "--target", "P6", "--strategy", "path-builder"});
  EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
  EXPECT_TRUE(contains(ok.out, "verified"));
  const auto tpath = temp_file("cex.txt");
  const auto bad = run_cli({"verify", "--n", "3", "--target", "P4", "--strategy", "tree-builder", "--transcript",
                            tpath.string()});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(contains(bad.out, "refuted"));
  const auto rep = run_cli({"replay", tpath.string()});
  EXPECT_EQ(rep.code, 0);
  EXPECT_TRUE(contains(rep.out, "agrees"));
  const auto capped =
      run_cli({"verify", "--n", "6", "--target", "P6", "--strategy", "path-builder", "--budget", "5"});
  EXPECT_EQ(capped.code, 2);
}

TEST(Cli, PlayTreeBuilderAgainstRandom) {
  const auto r = run_cli({"play", "--n", "10", "--target", "6; 1-2 1-3 1-4 4-5 5-6", "--alice", "tree-builder",
                          "--bob", "random", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto tr = parse_transcript(r.out);
  EXPECT_EQ(tr.outcome.value, Result::AliceWin);
  EXPECT_TRUE(replay_matches(tr));
  const auto again = run_cli({"play", "--n", "10", "--target", "6; 1-2 1-3 1-4 4-5 5-6", "--alice",
                              "tree-builder", "--bob", "random", "--seed", "7"});
  EXPECT_EQ(again.out, r.out);
}

TEST(Cli, PlayPathBuilderAndReplay) {
  const auto tpath = temp_file("k6.txt");
  const auto r = run_cli({"play", "--n", "6", "--target", "P6", "--alice", "path-builder", "--bob", "random",
                          "--seed", "3", "--transcript", tpath.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "outcome: AliceWin"));
  const auto rep = run_cli({"replay", tpath.string()});
  EXPECT_EQ(rep.code, 0);
  EXPECT_TRUE(contains(rep.out, "recorded AliceWin, replay agrees"));
  // a tampered outcome no longer replays
  std::stringstream ss;
  ss << std::ifstream(tpath).rdbuf();
  std::string text = ss.str();
  text.replace(text.find("outcome AliceWin"), 16, "outcome BobWin");
  std::ofstream(tpath) << text;
  EXPECT_EQ(run_cli({"replay", tpath.string()}).code, 1);
  EXPECT_EQ(run_cli({"replay", temp_file("missing.txt").string()}).code, 1);
}

TEST(Cli, HumanTyposRePrompt) {
  // Human Alice on K3 aiming at P3: a typo, an occupied edge, then legal moves.
  const auto r = run_cli({"play", "--n", "3", "--target", "P3", "--alice", "human", "--bob", "greedy-degree-blocker"},
                         "1 x\n1-2\n1 2\n2 3\n");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "enter two vertex numbers"));
  EXPECT_TRUE(contains(r.out, "already coloured"));
  EXPECT_TRUE(contains(r.out, "outcome AliceWin"));
  EXPECT_FALSE(contains(r.out, "forfeit"));
}

TEST(Cli, Bounds) {
  const auto t = run_cli({"bounds", "tree", "--n", "6"});
  EXPECT_EQ(t.code, 0);
  EXPECT_TRUE(contains(t.out, "6 <= a(1,1;T) <= 10"));
  const auto s = run_cli({"bounds", "star", "--n", "10", "--json"});
  EXPECT_EQ(s.code, 0);
  EXPECT_TRUE(contains(s.out, "7.29"));
  const auto d = run_cli({"bounds", "discrepancy", "--N", "5"});
  EXPECT_TRUE(contains(d.out, "|V(H)| = 8"));
  EXPECT_TRUE(contains(d.out, "(holds)"));
  const auto cert = run_cli({"bounds", "discrepancy", "--N", "149", "--n", "100"});
  EXPECT_TRUE(contains(cert.out, "draw certified"));
  EXPECT_EQ(run_cli({"bounds", "tree", "--n", "1"}).code, 1);
}

TEST(Cli, ReportFilesRoundTrip) {
  const auto jpath = temp_file("report.json");
  const auto cpath = temp_file("report.csv");
  ASSERT_EQ(run_cli({"anum", "--target", "P3", "--max", "4", "--out", jpath.string()}).code, 0);
  ASSERT_EQ(run_cli({"anum", "--target", "P3", "--max", "4", "--out", cpath.string()}).code, 0);
  std::stringstream js, cs;
  js << std::ifstream(jpath).rdbuf();
  cs << std::ifstream(cpath).rdbuf();
  const RunReport rep = parse_report(js.str());
  EXPECT_EQ(parse_report(serialize_report(rep)), rep);
  EXPECT_EQ(rep.versions.at("ramsey"), kArtifactVersion);
  EXPECT_EQ(rep.results.size(), 4u);
  EXPECT_EQ(rep.results.back()["achievement_number"], 3);
  EXPECT_EQ(report_csv(rep), cs.str());
  EXPECT_TRUE(cs.str().rfind("N,achievement_number,", 0) == 0) << cs.str();
}

TEST(Cli, ResultsTableIsDeterministic) {
  auto report = [](const std::string& name, std::vector<std::string> extra) {
    const auto path = temp_file(name);
    std::vector<std::string> args{"anum", "--target", "K1,3", "--max", "5", "--out", path.string()};
    args.insert(args.end(), extra.begin(), extra.end());
    run_cli(args);
    std::stringstream ss;
    ss << std::ifstream(path).rdbuf();
    return std::pair{ss.str(), parse_report(ss.str())};
  };
  const auto [text_a, a] = report("det_a.json", {});
  const auto [text_b, b] = report("det_b.json", {});
  const auto [text_c, c] = report("det_c.json", {"--threads", "2"});
  EXPECT_EQ(report_csv(a), report_csv(b));
  // node counts may differ with threads; outcomes may not
  ASSERT_EQ(a.results.size(), c.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    EXPECT_EQ(a.results[i].value("outcome", ""), c.results[i].value("outcome", ""));
    EXPECT_EQ(a.results[i].value("N", 0), c.results[i].value("N", 0));
  }
}

TEST(Cli, ReproduceSingleCriterion) {
  const auto r = run_cli({"reproduce", "--only", "A9"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "A9"));
  EXPECT_TRUE(contains(r.out, "PASS"));
  EXPECT_FALSE(contains(r.out, "A1 "));
}

TEST(Cli, LowBudgetSkipsAreNotFailures) {
  const auto r = run_cli({"reproduce", "--budget", "low", "--only", "A2,A4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.out, "SKIPPED"));
  EXPECT_FALSE(contains(r.out, "FAIL"));
}
