#include "fjsp/cli.hpp"
#include "fjsp/io.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

namespace fjsp {
namespace {

using testing::data_dir;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "fjsp");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir = std::filesystem::temp_directory_path() /
              ("fjsp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir);
    }
    void TearDown() override { std::filesystem::remove_all(dir); }

    std::string path(const char *name) const { return (dir / name).string(); }
    std::string casestudy() const { return (data_dir() / "casestudy.json").string(); }
    std::string t1() const { return (data_dir() / "t1.json").string(); }

    std::filesystem::path dir;
};

TEST_F(CliTest, ValidateSummary) {
    const auto r = run_cli({"validate", casestudy()});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out, "P=3 M=9 T=3 genes=150\n");
}

TEST_F(CliTest, ValidateRejectsBrokenDocument) {
    write_text_file(path("bad.json"), R"({"horizon": 1, "machines": [], "parts": []})");
    const auto r = run_cli({"validate", path("bad.json")});
    EXPECT_EQ(r.code, cli::kError);
    EXPECT_NE(r.err.find("no parts"), std::string::npos) << r.err;
}

TEST_F(CliTest, OracleCaseStudyTooLarge) {
    const auto r = run_cli({"oracle", casestudy()});
    EXPECT_EQ(r.code, cli::kTooLarge);
    EXPECT_NE(r.err.find("search space too large"), std::string::npos) << r.err;
}

TEST_F(CliTest, OracleToy) {
    const auto r = run_cli({"oracle", t1(), "--out", path("opt.json")});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("optimum=16.00\n"), std::string::npos) << r.out;
    const auto instance = parse_problem(read_text_file(t1()));
    EXPECT_EQ(read_solution(read_text_file(path("opt.json")), instance).at(0, 0, 0, 0, Shift::normal), 2);
}

TEST_F(CliTest, SolveMissingFile) {
    const auto r = run_cli({"solve", path("missing.json")});
    EXPECT_EQ(r.code, cli::kError);
    EXPECT_NE(r.err.find("file not found"), std::string::npos) << r.err;
}

TEST_F(CliTest, SolveToy) {
    const auto r = run_cli({"solve", t1(), "--seed", "7", "--out", path("s.json"), "--report", path("r.csv")});
    EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
    EXPECT_NE(r.out.find("objective=16.00\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("status=feasible\n"), std::string::npos);
    EXPECT_TRUE(std::filesystem::exists(path("r.csv")));
}

TEST_F(CliTest, SolveCaseStudyShortRun) {
    const auto r = run_cli({"solve", casestudy(), "--seed", "1", "--generations", "400", "--out", path("s.json"),
                            "--report", path("r.csv")});
    EXPECT_EQ(r.code, cli::kOk) << r.out;
    const auto report = read_text_file(path("r.csv"));
    EXPECT_NE(report.find("# period 1"), std::string::npos);
    EXPECT_NE(report.find("# period 3"), std::string::npos);
    EXPECT_NE(r.out.find("stop_reason="), std::string::npos);
    EXPECT_NE(r.out.find("wall_time_s="), std::string::npos);
}

TEST_F(CliTest, SolveRejectsBadFlags) {
    EXPECT_EQ(run_cli({"solve", t1(), "--mutation-rate", "2"}).code, cli::kError);
    EXPECT_EQ(run_cli({"solve", t1(), "--holding", "sometimes"}).code, cli::kError);
    EXPECT_EQ(run_cli({"solve", t1(), "--elitism", "100"}).code, cli::kError);
}

TEST_F(CliTest, EvaluatePublishedSolution) {
    const auto r = run_cli({"evaluate", casestudy(), (data_dir() / "published_solution.json").string()});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("feasible=true\n"), std::string::npos);
    EXPECT_NE(r.out.find("objective_cumulative=23790.26\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("objective_literal=23880.86\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, EvaluateEmptySolution) {
    write_text_file(path("empty.json"), R"({"entries":[]})");
    const auto r = run_cli({"evaluate", casestudy(), path("empty.json")});
    EXPECT_EQ(r.code, cli::kInfeasible);
    // cumulative demand 4200 + 4500 + 4300 for part 1
    EXPECT_NE(r.out.find("shortage.P1.period3=13000\n"), std::string::npos) << r.out;
    // cumulative shortages summed: (4200+8700+13000) + (3500+6000+8750) + (3000+5800+8800)
    EXPECT_NE(r.out.find("total_shortage=61750\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, EvaluateOverloadNamesMachine) {
    write_text_file(path("over.json"),
                    R"({"entries":[{"part":"P1","operation":1,"machine":"M1","period":2,"shift":"overtime","qty":6000}]})");
    const auto r = run_cli({"evaluate", casestudy(), path("over.json")});
    EXPECT_EQ(r.code, cli::kInfeasible);
    EXPECT_NE(r.out.find("overload.M1.period2.overtime="), std::string::npos) << r.out;
}

TEST_F(CliTest, CasestudyExport) {
    const auto r = run_cli({"casestudy", "--out", dir.string()});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(read_text_file(dir / "casestudy.json"), read_text_file(casestudy()));
    EXPECT_EQ(read_text_file(dir / "published_solution.json"),
              read_text_file(data_dir() / "published_solution.json"));
}

TEST_F(CliTest, ThreadsEnvParsing) {
    ::setenv("FJSP_THREADS", "3", 1);
    EXPECT_EQ(cli::threads_from_env(), 3);
    ::setenv("FJSP_THREADS", "x", 1);
    EXPECT_THROW((void)cli::threads_from_env(), std::invalid_argument);
    ::unsetenv("FJSP_THREADS");
    EXPECT_EQ(cli::threads_from_env(), 0);
}

} // namespace
} // namespace fjsp
