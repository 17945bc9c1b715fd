// Runs the ternary-spinor executable and checks output and exit status.
#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(TERNARY_SPINOR_EXE) + " " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

}  // namespace

TEST(Cli, Classify) {
    auto r = run("classify A8 9");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(has(r, "verdict EXCEPTIONAL")) << r.out;
    EXPECT_TRUE(has(r, "matched s=1 t=2")) << r.out;
    r = run("classify B10 4");
    EXPECT_TRUE(has(r, "matched s=4 t=3")) << r.out;
    r = run("classify B4 3");
    EXPECT_TRUE(has(r, "verdict REPRESENTED")) << r.out;
    EXPECT_TRUE(has(r, "witness (1,0,0)")) << r.out;
    r = run("classify B4 2");
    EXPECT_TRUE(has(r, "verdict LOCALLY_EXCLUDED")) << r.out;
}

TEST(Cli, Local) {
    auto r = run("local B11 2 12");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(has(r, "non-representable")) << r.out;
    EXPECT_TRUE(has(r, "exhausted mod 2^15")) << r.out;
    r = run("local B11 3 48");
    EXPECT_TRUE(has(r, "representable\ncertificate residue")) << r.out;
    r = run("local A1 7 5");
    EXPECT_TRUE(has(r, "unramified")) << r.out;
    EXPECT_EQ(run("local A1 8 5").status, 2);
}

TEST(Cli, VerifyExitStatus) {
    auto r = run("verify A1 --bound 50000 --jobs 2");
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_TRUE(has(r, "A1 bound 50000: PASS")) << r.out;
    r = run("verify B11 --bound 200");
    EXPECT_EQ(r.status, 1) << r.out;
    EXPECT_TRUE(has(r, "mismatch statement n=17")) << r.out;
}

TEST(Cli, ExceptionalList) {
    const auto r = run("exceptional-list A1 --bound 100");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "1\n25\n");
}

TEST(Cli, Report) {
    const auto path = std::filesystem::temp_directory_path() / "ternary_cli_report.tsv";
    const auto r = run("report A5 --bound 100 --output " + path.string());
    EXPECT_EQ(r.status, 0) << r.out;
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first, "# record A5 form (4,9,9,2,4,4) bound 100");
    std::filesystem::remove(path);
}

TEST(Cli, UsageAndIoErrors) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("classify Z9 1").status, 2);
    EXPECT_EQ(run("classify A1 0").status, 2);
    EXPECT_EQ(run("classify A1 notanumber").status, 2);
    EXPECT_EQ(run("verify A1 --bound 0").status, 2);
    const auto r = run("report A1 --bound 10 --output /nonexistent-dir/x.tsv");
    EXPECT_EQ(r.status, 2);
    EXPECT_TRUE(has(r, "/nonexistent-dir/x.tsv")) << r.out;
    EXPECT_EQ(run("--catalog /nonexistent-catalog classify A1 1").status, 2);
    EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, CatalogDumpRoundTrips) {
    const auto path = std::filesystem::temp_directory_path() / "ternary_cli_catalog.txt";
    auto r = run("catalog-dump");
    ASSERT_EQ(r.status, 0);
    {
        std::ofstream out(path);
        out << r.out;
    }
    const auto again = run("--catalog " + path.string() + " catalog-dump");
    EXPECT_EQ(again.status, 0);
    EXPECT_EQ(again.out, r.out);
    const auto c = run("--catalog " + path.string() + " classify A1 25");
    EXPECT_TRUE(has(c, "EXCEPTIONAL")) << c.out;
    std::filesystem::remove(path);
}
