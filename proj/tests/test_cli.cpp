#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Outcome {
    int status = -1;
    std::string out;
};

Outcome run(const std::string& args) {
    const std::string command = std::string(MULTICYCLIC_CLI) + " " + args + " 2>/dev/null";
    Outcome result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
    const int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(MULTICYCLIC_GOLDEN_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kWorked = "--p 3 --lengths 2,2,2 --seeds \"(0,0,0);(1,0,0);(0,1,0)\"";

}  // namespace

TEST(Cli, ConstructWorkedExampleJson) {
    const Outcome r = run("construct " + kWorked + " --format json");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out, golden("construct_worked_K3.json"));
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["idempotent"], "2x + 2y + xy + 2xz + 2yz + xyz");
    EXPECT_EQ(doc["d"], 4);
    EXPECT_EQ(doc["K"], 3);
}

TEST(Cli, ConstructFormats) {
    const Outcome text = run("construct " + kWorked);
    ASSERT_EQ(text.status, 0);
    EXPECT_EQ(text.out.substr(0, text.out.find('\n')), "code [8, 3, 4]_3");

    const Outcome csv = run("construct " + kWorked + " --format csv");
    ASSERT_EQ(csv.status, 0);
    EXPECT_EQ(csv.out, "1,x,y,z,xy,xz,yz,xyz\n0,2,2,0,1,2,2,1\n2,0,1,2,2,0,1,2\n2,1,0,2,2,1,0,2\n");

    const Outcome structured = run("construct " + kWorked + " --format structured");
    ASSERT_EQ(structured.status, 0);
    EXPECT_EQ(structured.out, golden("construct_worked_K3.json"));
}

TEST(Cli, ConstructSmallCases) {
    const Outcome rep = run("construct --p 3 --lengths 2 --seeds \"(0)\" --format json");
    ASSERT_EQ(rep.status, 0);
    const auto doc = nlohmann::json::parse(rep.out);
    EXPECT_EQ(doc["n"], 2);
    EXPECT_EQ(doc["K"], 1);
    EXPECT_EQ(doc["d"], 2);

    const Outcome zero = run("construct --p 3 --lengths 2,2,2 --seeds \"\" --format json");
    ASSERT_EQ(zero.status, 0);
    const auto zdoc = nlohmann::json::parse(zero.out);
    EXPECT_EQ(zdoc["K"], 0);
    EXPECT_TRUE(zdoc["d"].is_null());

    const Outcome literal = run("construct " + kWorked + " --literal-step3");
    ASSERT_EQ(literal.status, 0);
    EXPECT_NE(literal.out.find("literal step-3 sum: 1 + x + y (not idempotent)"), std::string::npos);
}

TEST(Cli, ConstructExtensionField) {
    const Outcome r = run("construct --p 2 --m 3 --lengths 7 --seeds \"(1);(2);(4)\" --format json");
    ASSERT_EQ(r.status, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["field"]["q"], 8);
    EXPECT_EQ(doc["field"]["modulus"], (std::vector<int>{1, 1, 0, 1}));
    EXPECT_EQ(doc["K"], 3);
    // Zeros at 5, 6, 0 are consecutive; exhaustive search over GF(8)^7 gives 4.
    EXPECT_EQ(doc["d"], 4);
    EXPECT_EQ(doc["codewords_examined"], 511);

    const Outcome explicit_mod = run("construct --p 2 --m 3 --modulus 1,0,1,1 --lengths 7 --seeds \"(0)\" --format json");
    ASSERT_EQ(explicit_mod.status, 0);
    EXPECT_EQ(nlohmann::json::parse(explicit_mod.out)["d"], 7);
    EXPECT_EQ(run("construct --p 2 --m 3 --modulus 1,1,1,1 --lengths 7 --seeds \"(0)\"").status, 2);
}

TEST(Cli, SearchGolden) {
    const Outcome a = run("search --p 5 --lengths 4,2 --K 4");
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, golden("search_p5_4x2_K4.txt"));

    const Outcome b = run("search --p 3 --lengths 2,2,2 --K 7");
    ASSERT_EQ(b.status, 0);
    EXPECT_EQ(b.out, golden("search_p3_2x2x2_K7.txt"));
}

TEST(Cli, SearchWorkedRing) {
    const Outcome r = run("search --p 3 --lengths 2,2,2 --K 3 --format json");
    ASSERT_EQ(r.status, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["candidates"], 56);
    EXPECT_EQ(doc["exhaustive"], true);
    ASSERT_EQ(doc["results"].size(), 10U);
    EXPECT_EQ(doc["results"][0]["d"], 4);

    const Outcome full = run("search --p 3 --lengths 2,2,2 --K 8 --format csv");
    ASSERT_EQ(full.status, 0);
    EXPECT_EQ(full.out,
              "rank,d,K,product_bound,applicable,singleton_bound,defining_set\n"
              "1,1,8,1,true,1,\"(0,0,0);(0,0,1);(0,1,0);(0,1,1);(1,0,0);(1,0,1);(1,1,0);(1,1,1)\"\n");
}

TEST(Cli, SearchIsDeterministic) {
    const std::string args = "search --p 3 --lengths 2,2,2 --K 4 --top 0 --seed 7";
    EXPECT_EQ(run(args).out, run(args).out);
    const std::string sampled = "search --p 7 --lengths 6,6 --K 2 --samples 30 --budget 100 --seed 3 --format csv";
    const Outcome a = run(sampled), b = run(sampled);
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Verify) {
    const Outcome r = run("verify --p 3 --lengths 2,2,2");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("PASS idempotence"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(run("verify --p 5 --lengths 4 --format json").status, 0);
    EXPECT_EQ(run("verify --p 3 --m 2 --lengths 8,2 --trials 20").status, 0);
    EXPECT_EQ(run("verify --p 3 --lengths 4").status, 3);
}

TEST(Cli, Reproduce) {
    const Outcome r = run("reproduce");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("e = 2x + 2y + xy + 2xz + 2yz + xyz"), std::string::npos);
    const Outcome j = run("reproduce --format json");
    ASSERT_EQ(j.status, 0);
    EXPECT_EQ(nlohmann::json::parse(j.out)["matches"], true);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("construct --lengths 2 --seeds \"(0)\"").status, 2);
    EXPECT_EQ(run("construct --p 4 --lengths 3 --seeds \"(0)\"").status, 2);
    EXPECT_EQ(run("construct --p 3 --lengths 2 --seeds \"0\"").status, 2);
    EXPECT_EQ(run("construct --p 3 --lengths 2 --seeds \"(2)\"").status, 2);
    EXPECT_EQ(run("construct --p 3 --lengths 2 --seeds \"(0)\" --format xml").status, 2);
    EXPECT_EQ(run("construct --p 3 --lengths 4 --seeds \"(0)\"").status, 3);
    EXPECT_EQ(run("construct " + kWorked + " --budget 10 --exact").status, 4);
    EXPECT_EQ(run("search --p 3 --lengths 2,2,2 --K 9").status, 5);
    EXPECT_EQ(run("search --p 3 --lengths 2,2,2 --K 2 --objective nope").status, 2);
}

TEST(Cli, BudgetWithoutExactOmitsDistance) {
    const Outcome r = run("construct " + kWorked + " --budget 10 --format json");
    ASSERT_EQ(r.status, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc["d"].is_null());
    EXPECT_EQ(doc["d_exact"], false);
}
