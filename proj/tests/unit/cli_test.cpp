#include <subcat/tools/cli.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using subcat::tools::run_cli;

namespace {

auto read(const std::string & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST(Cli, ValidateCorpus)
{
    auto r = run_cli({"validate"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("valid: "), std::string::npos);
}

TEST(Cli, PropsOfTheUnionMatchesTheGoldenReport)
{
    auto r = run_cli({"props", "union(alpha1,alpha2)"});
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.out, read(std::string(SUBCAT_GOLDEN_DIR) + "/props_union.txt"));
}

TEST(Cli, ReportsAreByteStable)
{
    for (const auto & args : std::vector<std::vector<std::string>>{{"props", "primo(mimicry)"},
             {"generate", "mimicry", "--mode", "mono"}, {"realizations", "branches"}, {"stability", "mimicry"}}) {
        auto a = run_cli(args), b = run_cli(args);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.status, b.status);
    }
}

TEST(Cli, GeneratedMonoIsNotDeterministic)
{
    auto path = (std::filesystem::temp_directory_path() / "subcat_cli_mono.json").string();
    auto g = run_cli({"generate", "mimicry", "--mode", "mono", "--output", path});
    ASSERT_EQ(g.status, 0) << g.err;
    auto r = run_cli({"-w", SUBCAT_CORPUS_DIR, "-w", path, "props", "mimicry-mono"});
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("deterministic: no"), std::string::npos);
    EXPECT_NE(r.out.find("u((a1,b1))={(a2,b2),(a2',b2')}"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, JsonFormat)
{
    auto r = run_cli({"props", "alpha1", "--format", "json"});
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["subject"], "alpha1");
    EXPECT_TRUE(doc["slices"][0]["checks"]["categorical"]["holds"].get<bool>());
    EXPECT_FALSE(doc["holds"].get<bool>());
}

TEST(Cli, ExitStatuses)
{
    EXPECT_EQ(run_cli({"props", "clean(alpha1)"}).status, 1);
    EXPECT_EQ(run_cli({"props", "tick"}).status, 0);
    EXPECT_EQ(run_cli({"props", "nothing"}).status, 2);
    EXPECT_EQ(run_cli({"props", "union(alpha1"}).status, 2);
    EXPECT_EQ(run_cli({"-w", "/nonexistent/path", "validate"}).status, 2);
    auto unknown = run_cli({"frobnicate"});
    EXPECT_EQ(unknown.status, 2);
    EXPECT_NE(unknown.err.find("UnknownCommand"), std::string::npos);
}

TEST(Cli, Demos)
{
    auto m = run_cli({"demo", "mimicry"});
    EXPECT_EQ(m.status, 0);
    EXPECT_NE(m.out.find("mono deterministic: no"), std::string::npos);
    EXPECT_EQ(run_cli({"demo", "union"}).status, 0);
}

TEST(Cli, RandomFamilies)
{
    auto r = run_cli({"random-family", "--seed", "3", "--count", "10"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("stable on 10/10 families"), std::string::npos);
}

TEST(Cli, TransformsAndRealizations)
{
    auto c = run_cli({"clean", "primo(mimicry)"});
    EXPECT_EQ(c.status, 0);
    EXPECT_NE(c.out.find("removed: (a2,b2') (a2',b2) (a3,b3') (a3',b3)"), std::string::npos);
    auto l = run_cli({"largest-subcat", "alpha1"});
    EXPECT_EQ(l.status, 0);
    auto u = run_cli({"union", "alpha1", "alpha2"});
    EXPECT_NE(u.out.find("u(a1)={a2,a2'}"), std::string::npos);
    auto h = run_cli({"realizations", "tick", "alpha1"});
    EXPECT_NE(h.out.find("total: 4"), std::string::npos);
    EXPECT_EQ(run_cli({"realizations", "tick", "alpha1", "--size-guard", "2"}).status, 2);
}
