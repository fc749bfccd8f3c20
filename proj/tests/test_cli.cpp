#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
    int status = -1;
    std::string out;
};

CliRun run(const std::string& args) {
    CliRun r;
    std::string cmd = std::string(ZLAT_BINARY) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

bool has(const CliRun& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

}  // namespace

TEST(Cli, Tables) {
    CliRun r = run("tables --id 8A --ascii");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(has(r, "| #")) << r.out;
    EXPECT_EQ(run("tables --id 9Z").status, 2);
    EXPECT_EQ(run("tables --id 4 --format xml").status, 2);
    CliRun j = run("tables --id 2 --format json");
    EXPECT_EQ(j.status, 0);
    EXPECT_TRUE(has(j, "\"columns\""));
}

TEST(Cli, DiffGoldenListsDocumentedDefects) {
    CliRun r = run("tables --id 7B --diff-golden --ascii");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(has(r, "missing-row")) << r.out;
    EXPECT_FALSE(has(r, "UNEXPLAINED"));
    CliRun clean = run("tables --id 8A --diff-golden");
    EXPECT_EQ(clean.status, 0);
    EXPECT_TRUE(has(clean, "8A: 0 discrepancies")) << clean.out;
}

TEST(Cli, Lattice) {
    CliRun r = run("lattice 'U(3)+2A2' --show invariants,discr --ascii");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(has(r, "rank: 6")) << r.out;
    EXPECT_TRUE(has(r, "det: -81")) << r.out;
    EXPECT_TRUE(has(r, "q(-2/3)")) << r.out;
    EXPECT_EQ(run("lattice '⟨−6⟩+A₂' --show invariants").status, 0);
    EXPECT_EQ(run("lattice A0").status, 2);
    EXPECT_EQ(run("lattice U --show nonsense").status, 2);
    EXPECT_EQ(run("lattice U --bogus").status, 2);
    EXPECT_EQ(run("").status, 2);
}

TEST(Cli, Glue) {
    CliRun r = run("glue --l1 '<2>' --l2 '<-2>' --auto");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(has(r, "det: -1")) << r.out;
    EXPECT_TRUE(has(r, "even: yes")) << r.out;
    EXPECT_EQ(run("glue --l1 '<2>' --l2 '<-2>'").status, 2);
    EXPECT_EQ(run("glue --l1 '<2>' --l2 '<-2>' --auto --primes 2").status, 2);
    EXPECT_EQ(run("glue --l1 '<2>' --l2 '<-6>' --auto").status, 1);
    CliRun p = run("glue --l1 A2 --l2 '<6>' --primes 3");
    EXPECT_EQ(p.status, 0);
    EXPECT_TRUE(has(p, "det: 2")) << p.out;
}

TEST(Cli, PairAndPartner) {
    CliRun r = run("pair --t-plus U --ascii");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(has(r, "K3 realization: ok")) << r.out;
    CliRun j = run("pair --t-plus U --json");
    EXPECT_EQ(j.status, 0);
    EXPECT_TRUE(has(j, "\"tableRef\"")) << j.out;
    EXPECT_EQ(run("pair --t-plus A2").status, 1);
    EXPECT_EQ(run("partner --row 8A:1").status, 1);
    CliRun p = run("partner --row 8B:1");
    EXPECT_EQ(p.status, 0);
    EXPECT_TRUE(has(p, "8C:1")) << p.out;
    EXPECT_EQ(run("partner --row 8B:99").status, 2);
}

TEST(Cli, Verify) {
    CliRun r = run("verify --suite stability");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(has(r, "all checks passed")) << r.out;
    EXPECT_EQ(run("verify --suite nope").status, 2);
}
