// Copyright (C) 2026 The abdukit authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    for (auto& a : args)
        if (a.ends_with(".edp") && !a.starts_with("/"))
            a = std::string(ABDUKIT_TEST_DATA) + "/" + a;
    std::ostringstream out;
    std::ostringstream err;
    const int code = abdukit::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, AnswerSets)
{
    const auto r = run({"answersets", "trans_ex.edp"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{a, q}\n");
    const auto nixon = run({"answersets", "nixon.edp"});
    EXPECT_EQ(nixon.code, 1);
    EXPECT_EQ(nixon.out, "L_P\n");
}

TEST(Cli, ExplainText)
{
    const auto r = run({"explain", "disjunctive.edp", "--obs", "p", "--mode", "skeptical"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "Solution 1:\n+a.\n-b.\n");

    const auto all = run({"explain", "disjunctive.edp", "--obs", "p", "--all"});
    EXPECT_EQ(all.out, "Solution 1:\n+a.\nSolution 2 (not minimal):\n+a.\n-b.\n");
}

TEST(Cli, ExplainJson)
{
    const auto r = run({"--format", "json", "explain", "trans_ex.edp", "--obs", "q", "--neg"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["solutions"].size(), 2U);
    EXPECT_EQ(j["solutions"][0]["remove"], nlohmann::json::array({"a."}));
    EXPECT_EQ(j["solutions"][1]["add"], nlohmann::json::array({"b."}));
    EXPECT_TRUE(j["solutions"][1]["minimal"].get<bool>());
}

TEST(Cli, CombinedObservations)
{
    const auto r = run({"explain", "trans_ex.edp", "--obs", "p", "--not", "q"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "Solution 1:\n+b.\n");
}

TEST(Cli, NoSolution)
{
    const auto r = run({"explain", "trans_ex.edp", "--obs", "zzz"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "no solution\n");
}

TEST(Cli, ViewUpdates)
{
    const auto ins = run({"view-insert", "birds.edp", "--goal", "flies(tweety)"});
    EXPECT_EQ(ins.code, 0);
    EXPECT_NE(ins.out.find("-broken_wing(tweety)."), std::string::npos);
    const auto del = run({"view-delete", "birds.edp", "--goal", "flies(opus)"});
    EXPECT_NE(del.out.find("+broken_wing(opus)."), std::string::npos);
}

TEST(Cli, MaintainAndUpdate)
{
    const auto m = run({"--format", "json", "maintain", "manager.edp"});
    EXPECT_EQ(nlohmann::json::parse(m.out)["solutions"].size(), 2U);
    const auto u = run({"update", "tv1.edp", "tv2.edp"});
    EXPECT_EQ(u.code, 0);
    EXPECT_NE(u.out.find("-tv_on."), std::string::npos);
    EXPECT_NE(u.out.find("Program:\n"), std::string::npos);
}

TEST(Cli, RuleUpdates)
{
    const auto ins = run({"insert-rule", "nixon.edp", "--rule", "-quaker."});
    EXPECT_EQ(ins.code, 0);
    const auto present = run({"insert-rule", "nixon.edp", "--rule", "quaker."});
    EXPECT_EQ(present.code, 2);
    EXPECT_NE(present.err.find("already"), std::string::npos);
    // Nothing consistent survives, so the empty program is the answer.
    const auto del = run({"delete-rule", "self_defeat.edp", "--rule", "q."});
    EXPECT_EQ(del.code, 0);
    EXPECT_EQ(del.out, "Solution 1:\n-p :- not p.\n-q.\nProgram:\n");
}

TEST(Cli, Repair)
{
    const auto r = run({"--format", "json", "repair", "nixon.edp"});
    EXPECT_EQ(nlohmann::json::parse(r.out)["solutions"].size(), 4U);
    const auto s = run({"repair", "self_defeat.edp", "--scope", "all-rules"});
    EXPECT_NE(s.out.find("-p :- not p."), std::string::npos);
}

TEST(Cli, Transform)
{
    const auto nf = run({"transform", "penguin.edp", "normal-form"});
    EXPECT_EQ(nf.code, 0);
    EXPECT_NE(nf.out.find("__g"), std::string::npos);
    const auto up = run({"transform", "trans_ex.edp", "update-program"});
    EXPECT_NE(up.out.find("__plus_p_b :- b."), std::string::npos);
}

TEST(Cli, InputErrors)
{
    EXPECT_EQ(run({"answersets", "missing.edp"}).code, 2);
    const auto bad = run({"explain", "trans_ex.edp", "--obs", "p("});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("1:3"), std::string::npos);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"explain", "trans_ex.edp", "--obs", "a"}).code, 2);
}

TEST(Cli, UniverseBudgetFromEnvironment)
{
    ::setenv("ABDUKIT_MAX_UNIVERSE", "1", 1);
    const auto small = run({"answersets", "birds.edp"});
    ::unsetenv("ABDUKIT_MAX_UNIVERSE");
    EXPECT_EQ(small.code, 2);
    EXPECT_NE(small.err.find("CandidateBudgetExceeded"), std::string::npos);
    EXPECT_EQ(run({"--max-universe", "1", "answersets", "trans_ex.edp"}).code, 0);
}

TEST(Cli, EmptyFile)
{
    const std::string path = ::testing::TempDir() + "empty.edp";
    { std::ofstream(path) << ""; }
    const auto r = run({"answersets", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{}\n");
}
