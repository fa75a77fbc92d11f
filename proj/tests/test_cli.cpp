#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = ycluster::cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

void strip_timing(nlohmann::json& j) {
    if (j.is_object()) {
        j.erase("elapsed_ms");
        for (auto& [k, v] : j.items()) strip_timing(v);
    } else if (j.is_array()) {
        for (auto& v : j) strip_timing(v);
    }
}

}  // namespace

TEST(Cli, DilogExample) {
    auto r = call({"verify", "--family", "sg", "--m", "1", "--n", "4", "--check", "dilog"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = r.json();
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_NEAR(j["reports"][0]["details"]["s1"].get<double>(), 56.0, 1e-8 * 56);
}

TEST(Cli, DomainErrorExit) {
    auto r = call({"verify", "--family", "rsg", "--m", "1", "--n", "3"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, TropicalExample) {
    auto r = call({"verify", "--family", "sg", "--m", "2", "--n", "4", "--check", "tropical"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["reports"][0]["details"]["n_minus"], 30);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(call({"verify", "--family", "xx", "--m", "1", "--n", "4"}).code, 2);
    EXPECT_EQ(call({"frobnicate"}).code, 2);
    EXPECT_EQ(call({"verify", "--family", "sg", "--m", "1", "--n", "4", "--check", "nope"}).code, 2);
}

TEST(Cli, VerifyAllPasses) {
    auto r = call({"verify", "--family", "rsg", "--m", "2", "--n", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.json()["pass"].get<bool>());
}

TEST(Cli, DeterministicModuloTiming) {
    std::vector<std::string> args = {"verify", "--family", "sg", "--m", "1", "--n", "5", "--seed", "99"};
    auto a = call(args).json(), b = call(args).json();
    strip_timing(a);
    strip_timing(b);
    EXPECT_EQ(a.dump(), b.dump());
}

TEST(Cli, SeedFromEnvironment) {
    ::setenv("YCLUSTER_SEED", "12345", 1);
    auto r = call({"verify", "--family", "sg", "--m", "1", "--n", "4", "--check", "dilog"});
    ::unsetenv("YCLUSTER_SEED");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["rng_seed"], 12345);
}

TEST(Cli, BuildWritesQuiver) {
    auto path = std::filesystem::temp_directory_path() / "ycluster_cli_build.json";
    auto r = call({"build", "--family", "rsg", "--m", "1", "--n", "6", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(path);
    auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j["vertices"].size(), 8u);
    std::filesystem::remove(path);
}

TEST(Cli, RunTropical) {
    auto r = call({"run", "--family", "sg", "--m", "1", "--n", "4", "--semifield", "tropical"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NO_THROW(r.json());
}

TEST(Cli, MutclassScript) {
    auto r = call({"mutclass", "--script", std::string(YCLUSTER_DATA_DIR) + "/reductions/sg_1_7.json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("D13"), std::string::npos);
}

TEST(Cli, MutclassBfs) {
    auto r = call({"mutclass", "--family", "rsg", "--m", "1", "--n", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("A4"), std::string::npos);
}
