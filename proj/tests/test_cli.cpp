#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = hyperfan::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content)
{
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(Cli, DecomposeGenerator)
{
    const auto r = run({"decompose", "--generator", "coxeter_a:3", "--algorithm", "both"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["decomposition"]["maximal_cells"].size(), 24u);
    EXPECT_TRUE(j["agree"].get<bool>());
    ASSERT_EQ(j["records"].size(), 2u);
    EXPECT_EQ(j["records"][0]["hull_conversions"], 24);
    EXPECT_EQ(j["records"][1]["hull_conversions"], 64);
    for (const char* key : {"generator", "algorithm", "n_hyperplanes", "n_rays", "n_maximal_cells", "hull_conversions",
                            "wall_ms"})
        EXPECT_TRUE(j["records"][0].contains(key)) << key;
}

TEST(Cli, DecomposeAffineFile)
{
    const auto path = write_temp("affine.json", R"({"hyperplanes": [{"a": ["1"], "b": "-1"},
        {"a": ["1"], "b": "0"}, {"a": ["1"], "b": "2"}]})");
    const auto r = run({"decompose", "--input", path, "--affine"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["polyhedral_complex"]["vertices"], json::parse(R"([["-1"],["0"],["2"]])"));
    EXPECT_EQ(j["polyhedral_complex"]["maximal_cells"].size(), 4u);
}

TEST(Cli, LinialIsAffineAutomatically)
{
    const auto r = run({"decompose", "--generator", "linial:3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["polyhedral_complex"]["maximal_cells"].size(), 7u);
}

TEST(Cli, OutputFile)
{
    const std::string path = ::testing::TempDir() + "out.json";
    const auto r = run({"decompose", "--generator", "zero_one:2", "--output", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    EXPECT_EQ(json::parse(in)["decomposition"]["rays"].size(), 6u);
}

TEST(Cli, CompareSeeds)
{
    const auto r = run({"compare", "--generator", "zero_one:3", "--seeds", "0,3,9", "--threads", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["agree"].get<bool>());
    EXPECT_EQ(j["records"].size(), 4u);
    EXPECT_TRUE(j["mismatches"].empty());
}

TEST(Cli, ZonotopeCheck)
{
    const auto r = run({"zonotope-check", "--generator", "coxeter_a:2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["agree"].get<bool>());
    EXPECT_EQ(j["n_vertices"], 6);
}

TEST(Cli, Bench)
{
    const auto r = run({"bench", "--generator", "zero_one:2", "--generator", "zero_one:3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["records"].size(), 4u);
    const auto s = run({"bench", "--generator", "zero_one:4", "--max-brute-n", "4"});
    ASSERT_EQ(s.code, 0) << s.err;
    EXPECT_EQ(json::parse(s.out)["skipped"].size(), 1u);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"decompose"}).code, 1);
    EXPECT_EQ(run({"decompose", "--generator", "nope:1"}).code, 1);
    EXPECT_EQ(run({"decompose", "--generator", "zero_one:2", "--algorithm", "fast"}).code, 1);
    EXPECT_EQ(run({"decompose", "--input", "/nonexistent/file.json"}).code, 1);
    EXPECT_EQ(run({"decompose", "--input", write_temp("bad.json", "{not json")}).code, 1);
    EXPECT_EQ(run({"decompose", "--input", write_temp("zero.json", R"({"hyperplanes": [["0","0"]]})")}).code, 1);
    EXPECT_EQ(run({"decompose", "--generator", "coxeter_a:3", "--affine"}).code, 1);
    const auto cap = run({"decompose", "--generator", "zero_one:4", "--algorithm", "brute", "--max-brute-n", "8"});
    EXPECT_EQ(cap.code, 3);
    EXPECT_NE(cap.err.find("exponential"), std::string::npos);
    EXPECT_EQ(run({"--help"}).code, 0);
}
