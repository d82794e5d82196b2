#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args, bool merge_stderr = false, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "'" + std::string(ROUQUIER_CLI) + "' " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::filesystem::path scratch(const std::string& name) {
    auto d = std::filesystem::temp_directory_path() / ("rouquier-cli-" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d / name;
}

}  // namespace

TEST(Cli, DihedralSevenHasThreeFamilies) {
    auto r = run("families --group I2.7 --format json");
    ASSERT_EQ(r.status, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["families"].size(), 3u);
    EXPECT_TRUE(j["exact"].get<bool>());
    auto md = run("families --group I2.7");
    EXPECT_NE(md.out.find("3 families"), std::string::npos);
}

TEST(Cli, BadPrimesOfG4) {
    auto r = run("bad-primes --group G4");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "2, 3\n");
    auto j = json::parse(run("bad-primes --group G4 --format json").out);
    EXPECT_EQ(j["bad_primes"], json::array({2, 3}));
}

TEST(Cli, VerifyPaperG4) {
    auto r = run("verify-paper --group G4");
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_NE(r.out.find("match"), std::string::npos);
}

TEST(Cli, GoldenMismatchExitsThree) {
    auto path = scratch("wrong_golden.json");
    std::ofstream(path) << R"({"families": [["phi1,0", "phi3,2"], ["phi2,1", "phi2,3"], ["phi1,4", "phi1,8", "phi2,5"]]})";
    auto r = run("verify-paper --group G4 --golden '" + path.string() + "'");
    EXPECT_EQ(r.status, 3);
    EXPECT_NE(r.out.find("MISMATCH"), std::string::npos);
}

TEST(Cli, InvalidFileNamesInvariant) {
    auto r = run("validate --group '" + std::string(ROUQUIER_TEST_DATA) + "/G4_bad_character.json'", true);
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("row-orthogonality"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").status, 1);
    EXPECT_EQ(run("frobnicate").status, 1);
    EXPECT_EQ(run("families").status, 1);
    EXPECT_EQ(run("families --group NoSuchGroup").status, 1);
    EXPECT_EQ(run("families --group G4 --format xml").status, 1);
    EXPECT_EQ(run("decomp --group G4").status, 1);
}

TEST(Cli, Deterministic) {
    for (auto args : {"families --group G4 --format json", "decomp --group G4 -p 2 --format json",
                      "invariants --group 'I2(8)'", "constructible --group G4 --format json"}) {
        auto a = run(std::string(args)), b = run(std::string(args));
        EXPECT_EQ(a.status, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, DecompositionColumns) {
    auto j = json::parse(run("decomp --group G4 -p 2 --format json").out);
    ASSERT_EQ(j["primes"].size(), 1u);
    std::set<std::map<std::string, long>> cols;
    for (auto& c : j["primes"][0]["columns"]) {
        EXPECT_TRUE(c["resolved"].get<bool>());
        auto m = c["multiplicities"].get<std::map<std::string, long>>();
        if (m.count("phi2,5")) cols.insert(m);
    }
    EXPECT_EQ(cols, (std::set<std::map<std::string, long>>{{{"phi1,4", 1}, {"phi2,5", 1}},
                                                           {{"phi1,8", 1}, {"phi2,5", 1}}}));
}

TEST(Cli, Invariants) {
    auto j = json::parse(run("invariants --group 'I2(5)' --format json").out);
    auto& rho = j["characters"][2];
    EXPECT_EQ(rho["name"], "rho1");
    EXPECT_EQ(rho["a"], "1");
    EXPECT_EQ(rho["A"], "4");
    EXPECT_TRUE(rho["special"].get<bool>());
}

TEST(Cli, Constructible) {
    auto r = run("constructible --group 'I2(5)' --format json");
    ASSERT_EQ(r.status, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["constructible"].size(), 3u);
    for (auto& c : j["constructible"]) EXPECT_TRUE(c["pairing_zero"].get<bool>());
}

TEST(Cli, SymbolsVerify) {
    auto r = run("symbols verify --rank 4 --defect 3 --format json");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(json::parse(r.out)["violations"], 0);
}

TEST(Cli, ExportValidatesAgain) {
    auto path = scratch("z5.json");
    ASSERT_EQ(run("export --group Z5 -o '" + path.string() + "'").status, 0);
    auto r = run("validate --group '" + path.string() + "'");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("order 5"), std::string::npos);
    auto fam = json::parse(run("families --group '" + path.string() + "' --format json").out);
    EXPECT_EQ(fam["families"].size(), 2u);
}

TEST(Cli, DataDirectoryFromEnvironment) {
    auto dir = scratch("data");
    std::filesystem::create_directories(dir / "groups");
    ASSERT_EQ(run("export --group Z4 -o '" + (dir / "groups" / "MyZ4.json").string() + "'").status, 0);
    auto r = run("list", false, "ROUQUIER_DATA='" + dir.string() + "'");
    EXPECT_NE(r.out.find("MyZ4 (file)"), std::string::npos) << r.out;
}

TEST(Cli, JsonIsVersioned) {
    auto j = json::parse(run("list --format json").out);
    EXPECT_EQ(j["format"], 1);
}
