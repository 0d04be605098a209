#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run(const std::string& args) {
    const std::string cmd = std::string(SPLINEDIM_CLI) + " " + args + " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        dir_ = fs::temp_directory_path() / ("splinedim_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
        for (const char* g : {"yuan_stillman", "mixed_polygonal", "disjoint_two_ledges"})
            ASSERT_EQ(run(std::string("gallery emit ") + g + " --out " + path(g)).code, 0);
        ASSERT_EQ(run("gallery emit morgan_scott --variant symmetric --out " + path("ms")).code, 0);
    }
    static void TearDownTestSuite() { fs::remove_all(dir_); }
    static std::string path(const std::string& stem) { return (dir_ / (stem + ".json")).string(); }
    static fs::path dir_;
};

fs::path Cli::dir_;

} // namespace

TEST_F(Cli, DimYuanStillman) {
    CliResult r = run("dim -p " + path("yuan_stillman") + " -d 5 -m 2");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["format"], "splinedim-report/1");
    EXPECT_EQ(j["dimension"], 52);
    EXPECT_EQ(j["matrix"]["rank"], 11);
    EXPECT_EQ(j["lowerBound"], 51);
    EXPECT_EQ(j["attainsBound"], false);
    EXPECT_EQ(j["method"], "general");
    EXPECT_EQ(j["stats"]["t"], 2);
    EXPECT_EQ(j["vertices"].size(), 3u);
}

TEST_F(Cli, DimBothMethods) {
    CliResult r = run("dim -p " + path("disjoint_two_ledges") + " -d 3 -m 1 --method both");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["dimension"], 29);
    EXPECT_EQ(j["method"], "both");
}

TEST_F(Cli, ReportsAreByteIdentical) {
    const std::string args = "dim -p " + path("yuan_stillman") + " -d 5 -m 2 --dump-matrix";
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST_F(Cli, ExitCodes) {
    EXPECT_EQ(run("dim -p " + path("ms") + " -d 2 -m 2").code, 2);
    EXPECT_EQ(run("dim -p " + path("ms") + " -d 2").code, 2);
    EXPECT_EQ(run("dim -p " + path("ms") + " -d 2 -m 1 --method sideways").code, 2);
    EXPECT_EQ(run("dim -p /nonexistent.json -d 2 -m 1").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("dim -p " + path("ms") + " -d 2 -m 1 --method disjoint").code, 3);
    EXPECT_EQ(run("dim -p " + path("yuan_stillman") + " -d 5 -m 2 --method both").code, 3);
    EXPECT_EQ(run("gallery emit nonesuch").code, 2);
    EXPECT_EQ(run("gallery emit morgan_scott --variant wobbly").code, 2);
    EXPECT_EQ(run("verify -d 2 -m 1").code, 2);
}

TEST_F(Cli, InvalidPartitionFile) {
    const std::string bad = (dir_ / "crossing.json").string();
    std::ofstream(bad) << R"({"format":"splinedim-partition/1","vertices":[["0","0"],["2","0"],["2","2"],["0","2"]],)"
                       << R"("edges":[[0,1],[1,2],[2,3],[3,0],[0,2],[1,3]]})";
    EXPECT_EQ(run("dim -p " + bad + " -d 2 -m 1").code, 2);
    EXPECT_EQ(run("render -p " + bad).code, 2);
}

TEST_F(Cli, BoundAndOracle) {
    CliResult b = run("bound -p " + path("yuan_stillman") + " -d 5 -m 2");
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(b.out, "51\n");
    CliResult o = run("oracle -p " + path("ms") + " -d 2 -m 1");
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.out, "7\n");
}

TEST_F(Cli, VerifyMixedRecordsReferenceValue) {
    CliResult r = run("verify -p " + path("mixed_polygonal") + " -d 5 -m 3 --report json");
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    const auto& c = j["cases"][0];
    EXPECT_EQ(c["dimension"], c["oracle"]);
    EXPECT_EQ(c["matrix"]["rank"], 4);
    EXPECT_EQ(c["referenceValue"], 39);
    EXPECT_EQ(c["referenceAgrees"], c["dimension"] == 39);
}

TEST_F(Cli, VerifyRandomIsSeedDeterministic) {
    CliResult a = run("verify --random 12 --seed 7 -d 3 -m 1");
    CliResult b = run("verify --random 12 --seed 7 -d 3 -m 1");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("12/12 agreements"), std::string::npos);
}

TEST_F(Cli, RenderIsDeterministic) {
    const std::string out1 = (dir_ / "a.svg").string(), out2 = (dir_ / "b.svg").string();
    ASSERT_EQ(run("render -p " + path("ms") + " --highlight-te -o " + out1).code, 0);
    ASSERT_EQ(run("render -p " + path("ms") + " --highlight-te -o " + out2).code, 0);
    std::stringstream s1, s2;
    s1 << std::ifstream(out1).rdbuf();
    s2 << std::ifstream(out2).rdbuf();
    EXPECT_EQ(s1.str(), s2.str());
    EXPECT_NE(s1.str().find("class=\"te\""), std::string::npos);
}

TEST_F(Cli, GalleryList) {
    CliResult r = run("gallery list");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "morgan_scott\nyuan_stillman\nmixed_polygonal\ndisjoint_two_ledges\nrandom_quasi_crosscut\n");
}
