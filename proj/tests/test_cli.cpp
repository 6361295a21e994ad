#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "helly/covering.hpp"
#include "helly/curves.hpp"
#include "helly_tools/io.hpp"

using namespace helly;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("helly_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path(name)) << text;
        return path(name);
    }

    static std::string slurp(const std::string& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    // Runs the CLI and returns its exit code; stdout and stderr land in files.
    int run(const std::string& args) const {
        std::string cmd = std::string(HELLY_CLI) + " " + args + " >" + path("stdout") + " 2>" + path("stderr");
        int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    fs::path dir_;
};

const char* kCircle = R"({"kind": "circle", "radius": 1})";

}  // namespace

TEST_F(Cli, FitHomothetExample) {
    auto c = write("circle.json", kCircle);
    auto p = write("pts.json", "[[0,0],[4,0],[0,3]]");
    ASSERT_EQ(run("fit --curve " + c + " --points " + p + " --mode homothet --out " + path("out.json")), 0);
    auto s = io::solution_set_from_json(io::read_json_file(path("out.json")));
    ASSERT_EQ(s.isolated.size(), 1u);
    EXPECT_NEAR(s.isolated[0].lambda, 2.5, 1e-9);
    EXPECT_NEAR(s.isolated[0].v.dx, 2.0, 1e-9);
    EXPECT_NEAR(s.isolated[0].v.dy, 1.5, 1e-9);
    EXPECT_TRUE(s.continua.empty());
}

TEST_F(Cli, CoverAndRender) {
    auto c = write("circle.json", kCircle);
    auto p = write("pts.json", R"({"points": [[0,0],[4,0],[0,3],[4,3]]})");
    ASSERT_EQ(run("cover --curve " + c + " --points " + p + " --mode homothet --out " + path("cover.json")), 0);
    auto j = io::read_json_file(path("cover.json"));
    EXPECT_NEAR(io::placement_from_json(j.at("placement")).lambda, 2.5, 1e-9);
    ASSERT_EQ(run("render --in " + path("cover.json") + " --svg " + path("cover.svg")), 0);
    EXPECT_NE(slurp(path("cover.svg")).find("<svg"), std::string::npos);
}

TEST_F(Cli, FamilyCheckOnWitnessFamily) {
    auto f = write("fam.json", R"({"base": {"kind": "circle", "radius": 1}, "placements": [
        {"lambda": 1, "v": [1, 0]}, {"lambda": 1, "v": [-0.5, 0.8660254037844386]},
        {"lambda": 1, "v": [-0.5, -0.8660254037844386]}, {"lambda": 1, "v": [0, 0]}]})");
    ASSERT_EQ(run("family-check --family " + f + " --k 3 --out " + path("r.json")), 0);
    auto r = io::helly_report_from_json(io::read_json_file(path("r.json")));
    EXPECT_TRUE(r.all_k_wise);
    EXPECT_FALSE(r.global_point.has_value());
    ASSERT_EQ(run("intersect --family " + f + " --out " + path("i.json")), 0);
    EXPECT_TRUE(io::read_json_file(path("i.json")).at("common_point").is_null());
    ASSERT_EQ(run("render --in " + path("r.json") + " --svg " + path("r.svg")), 0);
}

TEST_F(Cli, WitnessIsDeterministic) {
    auto c = write("circle.json", kCircle);
    const std::string args = "witness --curve " + c + " --order 3 --mode translate --trials 50 --seed 7 --out ";
    ASSERT_EQ(run(args + path("w1.json")), 0);
    ASSERT_EQ(run(args + path("w2.json")), 0);
    EXPECT_EQ(slurp(path("w1.json")), slurp(path("w2.json")));
    auto w = io::witness_from_json(io::read_json_file(path("w1.json")));
    EXPECT_EQ(w.points.size(), 4u);
    EXPECT_FALSE(cover_translate(circle(1), w.points).has_value());
}

TEST_F(Cli, HexagonWithSvg) {
    auto c = write("e.json", R"({"kind": "ellipse", "a": 2, "b": 1})");
    ASSERT_EQ(run("hexagon --curve " + c + " --svg " + path("h.svg") + " --out " + path("h.json")), 0);
    auto j = io::read_json_file(path("h.json"));
    EXPECT_LE(j.at("residual").get<double>(), 1e-8);
    EXPECT_TRUE(fs::exists(path("h.svg")));
}

TEST_F(Cli, MalformedInputExitsTwo) {
    auto c = write("bad.json", R"({"kind": "circle"})");
    auto p = write("pts.json", "[[0,0],[1,0]]");
    EXPECT_EQ(run("fit --curve " + c + " --points " + p + " --mode translate --out " + path("o.json")), 2);
    auto err = io::json::parse(slurp(path("stderr")));
    EXPECT_EQ(err.at("error").at("kind"), "MalformedInput");
    auto junk = write("junk.json", "{not json");
    EXPECT_EQ(run("cover --curve " + junk + " --points " + p + " --out " + path("o.json")), 2);
    EXPECT_EQ(run("verify-paper --suite nonsense --seed 1"), 2);
    EXPECT_EQ(run("witness --curve " + write("c.json", kCircle) + " --order 3 --out " + path("o.json")), 2);
}

TEST_F(Cli, FailedSearchExitsOne) {
    auto c = write("circle.json", kCircle);
    EXPECT_EQ(run("witness --curve " + c + " --order 4 --mode translate --trials 5 --seed 1 --out " + path("w.json")),
              1);
}

TEST_F(Cli, VerifyTheoremThreeSuite) {
    ASSERT_EQ(run("verify-paper --suite theorem3 --seed 42"), 0);
    std::string out = slurp(path("stdout"));
    EXPECT_NE(out.find("PASS"), std::string::npos);
    EXPECT_NE(out.find("all criteria passed"), std::string::npos);
}
