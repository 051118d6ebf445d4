#include "gordian/json_io.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int code;
    std::string out;
};

CliResult cli(const std::string& args) {
    std::string cmd = std::string(GORDIAN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST(Cli, RegionOfTrefoil) {
    CliResult r = cli("--format json region --left torus:2,3 --right unknot --ring Z");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "{\"corners\":[[1,0],[2,-1]],\"diagonal\":null}\n");
    auto region = gordian::region_from_json(nlohmann::json::parse(r.out));
    EXPECT_TRUE(region.member(1, 0));
    EXPECT_FALSE(region.member(0, 1));
    CliResult tsv = cli("region --left torus:2,3 --right unknot --ring Z");
    EXPECT_NE(tsv.out.find("region\t"), std::string::npos);
    EXPECT_NE(tsv.out.find("#"), std::string::npos);
}

TEST(Cli, Values) {
    EXPECT_EQ(cli("lambda0 --left torus:3,4 --right torus:2,9 --ring F2").out, "2\n");
    EXPECT_EQ(cli("lambda --left torus:3,7 --right torus:2,13 --ring F2").out, "2\n");
    EXPECT_EQ(cli("signature --slope 3/1").out, "sigma\t2\ns\t-2\n");
    EXPECT_EQ(cli("--format json signature --slope 3/1").out, "{\"s\":-2,\"sigma\":2}\n");
    EXPECT_EQ(cli("alpha --slope 3").out, "-1\n");
    EXPECT_EQ(cli("beta --slope 5/9").out, "-1\n");
}

TEST(Cli, ZigzagAndKnot) {
    EXPECT_EQ(cli("zz --slope 3").out, "o -S*So-> o -Do-> o -So-> *\n");
    EXPECT_EQ(cli("zz --slope 1 --graded").out, "o(-1,-2) -So-> *(0,-1)\n");
    CliResult k = cli("--format json knot --spec 2bridge:-3/1 --ring Z");
    ASSERT_EQ(k.code, 0);
    EXPECT_EQ(k.out, "{\"knights\":[[1,2,6]],\"pawn\":2,\"ring\":\"Z\"}\n");
    CliResult f = cli(std::string("--format json knot --spec file:") + GORDIAN_TEST_DATA + "/trefoil.json --ring Z");
    EXPECT_EQ(f.out, k.out);
    CliResult m = cli("--format json knot --spec mirror:torus:2,3 --ring F2");
    EXPECT_EQ(m.out, "{\"knights\":[[1,-3,-8]],\"pawn\":-2,\"ring\":\"F2\"}\n");
}

TEST(Cli, Engines) {
    CliResult both = cli("--format json region --left torus:3,4 --right torus:2,5 --ring F2 --engine both");
    EXPECT_EQ(both.code, 0);
    CliResult st = cli("--format json region --left torus:3,4 --right torus:2,5 --ring F2");
    EXPECT_EQ(both.out, st.out);
    EXPECT_EQ(cli("region --left unknot --right unknot --ring Q --engine brute").code, 2); // brute needs a finite field
}

TEST(Cli, ObstructVerdicts) {
    EXPECT_EQ(cli("obstruct --slope 1 --left torus:2,3 --right unknot --ring Z").code, 0);
    EXPECT_EQ(cli("obstruct --slope -3 --left torus:2,3 --right unknot --ring Z").code, 1);
    CliResult info = cli("obstruct --slope 3");
    EXPECT_EQ(info.code, 0);
    EXPECT_NE(info.out.find("needs\t(2,-1)"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli("zz --slope x/y").code, 2);
    EXPECT_EQ(cli("bogus").code, 2);
    EXPECT_EQ(cli("region --left torus:2,3").code, 2);
    EXPECT_EQ(cli("knot --spec torus:4,5 --ring F2").code, 3);
    EXPECT_EQ(cli("knot --spec torus:3,4 --ring Z").code, 3);
    EXPECT_EQ(cli("knot --spec torus:3,4 --ring Z --conjectural").code, 0);
}

TEST(Cli, CapsFromEnvironment) {
    std::string prefix = "GORDIAN_CAPS=2,1 ";
    std::string cmd = prefix + GORDIAN_CLI_PATH + " region --left torus:3,5 --right torus:2,7 --ring F2 --engine brute >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    EXPECT_EQ(WEXITSTATUS(status), 3);
}
