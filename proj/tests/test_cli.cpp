#include "tightmaps/cli.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <sstream>

using tightmaps::cli::run_cli;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// the installed binary, through the shell
Run run_binary(const std::string& args) {
    std::string cmd = std::string(TIGHTMAPS_CLI_PATH) + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    std::string out;
    std::array<char, 256> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe.get())) out += buf.data();
    int status = pclose(pipe.release());
    return {WEXITSTATUS(status), out, ""};
}

}  // namespace

TEST(Cli, CountExamples) {
    EXPECT_EQ(run({"count", "--b", "2", "--degrees", "6,4,4"}).out, "1\n");
    EXPECT_EQ(run({"count", "--b", "2", "--degrees", "4,4,4,4"}).out, "0\n");
    EXPECT_EQ(run({"count", "--b", "2", "--degrees", "6,4,4,4,4"}).out, "12\n");
}

TEST(Cli, CountErrors) {
    auto odd = run({"count", "--b", "2", "--degrees", "5,4,4"});
    EXPECT_EQ(odd.code, 1);
    EXPECT_NE(odd.err.find("not a positive even integer"), std::string::npos);
    auto two = run({"count", "--b", "2", "--degrees", "4,4"});
    EXPECT_EQ(two.code, 1);
    EXPECT_NE(two.err.find("outside theorem range"), std::string::npos);
    EXPECT_EQ(run({"count", "--b", "2"}).code, 1);
    EXPECT_EQ(run({"bogus"}).code, 1);
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CountSymbolic) {
    auto r = run({"count", "--symbolic", "--n", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n");
    auto four = run({"count", "--symbolic", "--n", "4"});
    EXPECT_EQ(four.code, 0);
    EXPECT_NE(four.out.find("m1^2"), std::string::npos);
}

TEST(Cli, Alpha) {
    EXPECT_EQ(run({"alpha", "--b", "2", "--k", "0", "--n", "2"}).out, "6\n");
    for (std::string m : {"lagrange", "polysum", "recurrence"})
        EXPECT_EQ(run({"alpha", "--b", "2", "--k", "0", "--n", "2", "--method", m}).out, "6\n");
    auto all = run({"alpha", "--b", "3", "--k", "1", "--n", "4", "--all-methods", "--format", "json"});
    EXPECT_EQ(all.code, 0);
    EXPECT_NE(all.out.find("\"agree\":\"true\""), std::string::npos);
    auto low = run({"alpha", "--b", "1", "--k", "2", "--n", "2", "--all-methods"});
    EXPECT_EQ(low.code, 0);
    EXPECT_NE(low.out.find("recurrence: n/a"), std::string::npos);
    EXPECT_EQ(run({"alpha", "--symbolic", "--k", "2", "--n", "2"}).out, "1\n");
    EXPECT_EQ(run({"alpha", "--b", "2", "--k", "3", "--n", "2"}).out, "0\n");
    EXPECT_EQ(run({"alpha", "--b", "2", "--k", "-1", "--n", "2"}).code, 1);
}

TEST(Cli, TwofaceAndSeries) {
    EXPECT_EQ(run({"twoface", "--c", "1", "--k", "0", "--m1", "2", "--m2", "2"}).out, "1\n");
    EXPECT_EQ(run({"series", "--u0", "--b", "2", "--order", "4"}).out, "1,1,2,5\n");
    EXPECT_EQ(run({"series", "--h", "--b", "2", "--order", "3"}).out, "1,-1,0\n");
    EXPECT_EQ(run({"series", "--u0", "--nb", "--b", "2"}).code, 1);
}

TEST(Cli, JsonIsStable) {
    std::vector<std::string> args{"--format", "json", "count", "--b", "2", "--degrees", "6,4,4"};
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, "{\"command\":\"count\",\"inputs\":{\"b\":\"2\",\"degrees\":\"6,4,4\"},\"value\":\"1\"}\n");
    auto j = nlohmann::json::parse(run({"--format", "json", "count", "--b", "2", "--degrees", "6,4,4,4,4"}).out);
    EXPECT_TRUE(j["value"].is_string());
    EXPECT_EQ(j["value"], "12");
}

TEST(Cli, Csv) {
    auto r = run({"--format", "csv", "twoface", "--c", "1", "--k", "0", "--m1", "2", "--m2", "2"});
    EXPECT_EQ(r.out, "command,c,k,m1,m2,value\ntwoface,1,0,2,2,1\n");
    auto s = run({"--format", "csv", "series", "--u0", "--b", "2", "--order", "3"});
    EXPECT_NE(s.out.find("\"1,1,2\""), std::string::npos);
}

TEST(Cli, Verify) {
    auto r = run({"verify", "--scope", "alpha"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("all suites pass"), std::string::npos);
    auto j1 = run({"--format", "json", "verify", "--scope", "words"});
    auto j2 = run({"--format", "json", "verify", "--scope", "words"});
    EXPECT_EQ(j1.code, 0);
    EXPECT_EQ(j1.out, j2.out);
    EXPECT_EQ(nlohmann::json::parse(j1.out)["value"], "pass");
    EXPECT_EQ(run({"verify", "--scope", "nonsense"}).code, 1);
}

TEST(Cli, Binary) {
    auto r = run_binary("count --b 2 --degrees 6,4,4");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n");
    EXPECT_EQ(run_binary("count --b 2 --degrees 5,4,4").code, 1);
    EXPECT_EQ(run_binary("--format json alpha --b 2 --k 0 --n 2").out,
              "{\"command\":\"alpha\",\"inputs\":{\"b\":\"2\",\"k\":\"0\",\"n\":\"2\",\"method\":\"polysum\"},\"value\":\"6\"}\n");
}
