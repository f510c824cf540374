#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = qshift::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, WordCheck)
{
    const Result r = run({"word-check", "1' 1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "not amenable (k=2, clause 4)\n");
    EXPECT_EQ(run({"word-check", "1 1'"}).out, "amenable\n");
    EXPECT_EQ(run({"word-check", ""}).out, "amenable\n");
}

TEST(Cli, WordCheckJson)
{
    const auto j = nlohmann::json::parse(run({"word-check", "1' 1", "--json"}).out);
    EXPECT_EQ(j["amenable"], false);
    EXPECT_EQ(j["k"], 2);
    EXPECT_EQ(j["clause"], 4);
    EXPECT_EQ(j["word"], "1' 1");
}

TEST(Cli, Fill)
{
    const Result r = run({"fill", "--outer", "7,5,3,2,1", "--inner", "4,1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("content: 7,4,2\n"), std::string::npos);
    EXPECT_NE(r.out.find(" .  .  .  . 1'  1  1\n"), std::string::npos);
    EXPECT_NE(r.out.find("amenable: yes"), std::string::npos);
}

TEST(Cli, FillJson)
{
    const auto j = nlohmann::json::parse(run({"fill", "--outer", "7,5,3,2,1", "--inner", "4,1", "--json"}).out);
    EXPECT_EQ(j["content"], nlohmann::json({7, 4, 2}));
    EXPECT_EQ(j["rows"][0], nlohmann::json({"1'", "1", "1"}));
    EXPECT_EQ(j["skip"][0], 4);
    EXPECT_EQ(j["skip"][4], 4);
    EXPECT_EQ(j["rows"][4], nlohmann::json({"3"}));
    EXPECT_EQ(j["layers"]["3"], nlohmann::json({{4, 5}, {5, 5}}));
    EXPECT_EQ(j["layers"]["2"].size(), 4u);
}

TEST(Cli, Render)
{
    EXPECT_EQ(run({"render", "--outer", "3,1", "--inner", "1"}).out, " .[][]\n .[]\n");
    const auto j = nlohmann::json::parse(run({"render", "--outer", "2,1", "--inner", "1", "--json"}).out);
    EXPECT_EQ(j["size"], 2);
    EXPECT_EQ(j["cells"], nlohmann::json({{1, 2}, {2, 2}}));
    EXPECT_EQ(j["diagonals"].size(), 2u);
}

TEST(Cli, Enumerate)
{
    const Result r = run({"enumerate", "--outer", "2", "--max-letter", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "count: 2\n\n1'  1\n\n 1  1\n");
    const auto j = nlohmann::json::parse(run({"enumerate", "--outer", "3,1", "--inner", "1", "--amenable", "--json"}).out);
    EXPECT_EQ(j["count"], 2);
}

TEST(Cli, Coeff)
{
    EXPECT_EQ(run({"coeff", "--outer", "2,1", "--inner", "1", "--nu", "2"}).out, "1\n");
    EXPECT_EQ(run({"coeff", "--outer", "2,1", "--inner", "1", "--nu", "1"}).out, "0\n");
}

TEST(Cli, Decompose)
{
    const Result r = run({"decompose", "--outer", "3,1", "--inner", "1", "--verify"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 * Q[2,1]\n1 * Q[3]\nverified: yes\n");
}

TEST(Cli, Expand)
{
    EXPECT_EQ(run({"expand", "--outer", "1", "--vars", "2"}).out, "2*x1 + 2*x2\nsymmetric: yes\n");
    const auto j = nlohmann::json::parse(run({"expand", "--outer", "2", "--vars", "1", "--json"}).out);
    EXPECT_EQ(j["nvars"], 1);
    EXPECT_EQ(j["degree"], 2);
    EXPECT_EQ(j["terms"], nlohmann::json::parse(R"([{"exp":[2],"coef":"2"}])"));
}

TEST(Cli, IsStrange)
{
    const Result r = run({"is-strange", "--outer", "4,3,2,1", "--inner", "2,1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "theorem: strange (StaircaseSkew{m=4, mu=2,1})\noracle: strange (1 amenable filling)\n");
    const Result n = run({"is-strange", "--outer", "3,1", "--inner", "1", "--method", "oracle"});
    EXPECT_EQ(n.out, "oracle: not strange (2 amenable fillings)\n");
    const auto j = nlohmann::json::parse(run({"is-strange", "--outer", "3,2", "--inner", "2,1", "--json"}).out);
    EXPECT_EQ(j["theorem"], true);
    EXPECT_EQ(j["oracle"], true);
    EXPECT_EQ(j["agree"], true);
}

TEST(Cli, Sweep)
{
    const Result r = run({"sweep", "--max-size", "6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("mismatches: 0\n"), std::string::npos);
    EXPECT_EQ(r.out.find("elapsed"), std::string::npos);
    EXPECT_EQ(r.out, run({"sweep", "--max-size", "6", "--jobs", "3"}).out);
    const auto j = nlohmann::json::parse(run({"sweep", "--max-size", "6", "--json"}).out);
    EXPECT_TRUE(j["mismatches"].empty());
    EXPECT_FALSE(j.contains("elapsed_seconds"));
    EXPECT_NE(run({"sweep", "--max-size", "3", "--verbose"}).out.find("elapsed"), std::string::npos);
}

TEST(Cli, DomainErrors)
{
    const Result r = run({"render", "--outer", "4,4,1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.err.rfind("error: NotStrictlyDecreasing:", 0), 0u) << r.err;
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
    EXPECT_EQ(run({"render", "--outer", "3", "--inner", "4"}).code, 1);
    EXPECT_EQ(run({"word-check", "1 x"}).code, 1);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"render"}).code, 2);
    EXPECT_EQ(run({"is-strange", "--outer", "2", "--method", "guess"}).code, 2);
    EXPECT_EQ(run({"sweep", "--max-size", "0"}).code, 2);
    EXPECT_EQ(run({"render", "--outer", "2", "extra"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic)
{
    const std::vector<std::string> args = {"enumerate", "--outer", "4,2", "--inner", "1", "--json"};
    EXPECT_EQ(run(args).out, run(args).out);
}
