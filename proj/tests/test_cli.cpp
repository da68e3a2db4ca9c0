#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "support.hpp"

using namespace sdac9;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "sdac9");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_dir(const std::string& name) {
    const auto p = std::filesystem::temp_directory_path() / ("sdac9_test_" + name);
    std::filesystem::remove_all(p);
    return p.string();
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST(Cli, ClassifyWritesDatabases) {
    const auto dir = temp_dir("classify");
    auto r = run({"classify", "--n", "4", "--out", dir, "--workers", "1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("n=4 i=3 t=7"), std::string::npos);
    EXPECT_TRUE(std::filesystem::exists(dir + "/n4.db"));
    const auto first = read_file(dir + "/n4.db");
    r = run({"classify", "--n", "4", "--out", dir});
    EXPECT_EQ(read_file(dir + "/n4.db"), first);

    r = run({"mass", "--db", dir, "--n", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    r = run({"--tsv", "mass", "--db", dir, "--n", "2"});
    EXPECT_NE(r.out.find("lhs\t40\n"), std::string::npos);
    EXPECT_NE(r.out.find("rhs\t40\n"), std::string::npos);

    r = run({"--tsv", "stats", "--db", dir + "/n4.db", "--table", "distance"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("2\t2\t3"), std::string::npos) << r.out;
    r = run({"stats", "--db", dir + "/n4.db", "--table", "nope"});
    EXPECT_EQ(r.code, 2);

    // Every stored class reproduces under inspect.
    const auto db = read_database_file(dir + "/n4.db");
    for (const auto& c : db.classes) {
        r = run({"--tsv", "inspect", "--trits", c.trits});
        EXPECT_NE(r.out.find("d\t" + std::to_string(c.d) + "\n"), std::string::npos);
        EXPECT_NE(r.out.find("aut\t" + c.aut_order.str() + "\n"), std::string::npos);
    }

    // Removing a class makes the mass check fail.
    std::ofstream(dir + "/n3.db") << "# sdac9 v1 n=3\n# indecomposable\n# decomposable\n000 d=1 aut=1296\n";
    r = run({"mass", "--db", dir, "--n", "3"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, Extend) {
    const auto dir = temp_dir("extend");
    ASSERT_EQ(run({"classify", "--n", "5", "--out", dir}).code, 0);
    auto r = run({"extend", "--db", dir + "/n5.db", "--min-d", "3", "--out", dir + "/ext6.db"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("classes=1 d4=1"), std::string::npos) << r.out;
    std::ofstream(dir + "/empty.db") << "# sdac9 v1 n=5\n# indecomposable\n# decomposable\n";
    r = run({"extend", "--db", dir + "/empty.db", "--min-d", "3", "--out", dir + "/empty6.db"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(read_database_file(dir + "/empty6.db").classes.size(), 0u);
    std::ofstream(dir + "/bad.db") << "# sdac9 v1 n=5\n12 d=3 aut=2\n";
    r = run({"extend", "--db", dir + "/bad.db", "--min-d", "3", "--out", dir + "/x.db"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(Cli, InspectAndEquiv) {
    const auto cprime = sdac9::test::data_path("n4_cprime.txt");
    const auto c = sdac9::test::data_path("n4_c.txt");
    auto r = run({"--tsv", "inspect", "--matrix", cprime});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("d\t3\n"), std::string::npos);
    EXPECT_NE(r.out.find("connected\tyes\n"), std::string::npos);
    r = run({"--tsv", "inspect", "--matrix", sdac9::test::data_path("n10_aut2880.txt")});
    EXPECT_NE(r.out.find("aut\t2880\n"), std::string::npos);
    EXPECT_NE(r.out.find("alpha\t25\n"), std::string::npos);

    r = run({"equiv", "--a", c, "--b", cprime, "--expect-equivalent"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "equivalent\n");
    const auto dir = temp_dir("equiv");
    std::filesystem::create_directories(dir);
    std::ofstream(dir + "/dec.txt") << "w 0 0 0\n0 w 1 1\n0 1 w 1\n0 1 1 w\n";
    r = run({"equiv", "--a", cprime, "--b", dir + "/dec.txt"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "inequivalent\n");
    r = run({"equiv", "--a", cprime, "--b", dir + "/dec.txt", "--expect-equivalent"});
    EXPECT_EQ(r.code, 1);
    r = run({"equiv", "--a", cprime, "--b", sdac9::test::data_path("n8_aut2.txt")});
    EXPECT_EQ(r.code, 2);

    std::ofstream(dir + "/notsd.txt") << "w 1\n1 0\n";
    r = run({"inspect", "--matrix", dir + "/notsd.txt"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("not self-dual"), std::string::npos);
    std::ofstream(dir + "/typo.txt") << "w 1\n1 x\n";
    r = run({"inspect", "--matrix", dir + "/typo.txt"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 2, column 3"), std::string::npos);
    EXPECT_NE(r.err.find("'x'"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"classify", "--n", "0", "--out", "/tmp/x"}).code, 2);
    EXPECT_EQ(run({"inspect"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    auto r = run({"mass", "--n", "11"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("1592385579"), std::string::npos);
}

TEST(Cli, WorkerResolution) {
    EXPECT_EQ(cli::resolve_workers(3u), 3u);
    ::setenv("SDAC9_WORKERS", "5", 1);
    EXPECT_EQ(cli::resolve_workers(std::nullopt), 5u);
    EXPECT_EQ(cli::resolve_workers(2u), 2u);
    ::setenv("SDAC9_WORKERS", "junk", 1);
    EXPECT_GE(cli::resolve_workers(std::nullopt), 1u);
    ::unsetenv("SDAC9_WORKERS");
}
