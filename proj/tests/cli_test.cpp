#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "gpf/construction.hpp"
#include "gpf/io.hpp"

namespace gpf::cli {
namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "gpf");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("gpf_cli_test_" + name);
}

TEST(Cli, Table) {
    const Invocation r = invoke({"table"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.out,
              "k\td_U(A_k) <=\n3\t0.84948\n4\t0.93147\n5\t0.96733\n6\t0.98404\n7\t0.99211\n10\t0.99902\n17\t0.99999\n");
}

TEST(Cli, CheckFindsProgression) {
    const Invocation r = invoke({"check", "--set", "8,12,18,27", "--k", "4"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.out, "progression found: 8,12,18,27\n");
    const Invocation gp_free = invoke({"check", "--set", "1,2,3,5,6,7,8,10"});
    EXPECT_EQ(gp_free.out, "gp-free: yes\n");
    const auto j = nlohmann::json::parse(invoke({"check", "--set", "8,12,18,27", "--k", "4", "--format", "json"}).out);
    EXPECT_EQ(j["gp_free"], false);
    EXPECT_EQ(j["witness"], nlohmann::json::parse("[8,12,18,27]"));
}

TEST(Cli, FamilyVerify) {
    const Invocation r = invoke({"family", "--n", "1000", "--k", "3", "--verify"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.out, "152 blocks, disjoint: yes\n");
}

TEST(Cli, FamilyJsonRoundTripsAndTamperingFailsVerification) {
    const Invocation r = invoke({"family", "--n", "1000", "--format", "json"});
    ASSERT_EQ(r.code, kOk);
    EXPECT_EQ(io::family_from_json(r.out), build_family(1000, 3));

    auto doc = nlohmann::json::parse(r.out);
    doc["blocks"].push_back(doc["blocks"][3]);
    const auto path = temp_file("tampered.json");
    std::ofstream(path) << doc.dump();
    const Invocation bad = invoke({"family", "--input", path.string(), "--verify"});
    EXPECT_EQ(bad.code, kVerificationFailure);
    EXPECT_NE(bad.out.find("overlap"), std::string::npos);
    const Invocation bad_json = invoke({"family", "--input", path.string(), "--verify", "--format", "json"});
    EXPECT_EQ(bad_json.code, kVerificationFailure);
    EXPECT_EQ(nlohmann::json::parse(bad_json.out)["violation"], "overlap");
    std::filesystem::remove(path);
}

TEST(Cli, Enumerate) {
    EXPECT_EQ(invoke({"enumerate", "--n", "10", "--k", "3"}).out, "1,2,4\n2,4,8\n1,3,9\n4,6,9\n");
    EXPECT_EQ(invoke({"enumerate", "--n", "10", "--format", "json"}).out, "[[1,2,4],[2,4,8],[1,3,9],[4,6,9]]\n");
}

TEST(Cli, BoundsRangesAndFormats) {
    const auto j = nlohmann::json::parse(invoke({"bounds", "--k", "3..5", "--format", "json"}).out);
    EXPECT_EQ(j["schema"], 1);
    ASSERT_EQ(j["bounds"].size(), 3u);
    EXPECT_EQ(j["bounds"][2]["k"], 5);
    EXPECT_EQ(j["bounds"][0]["improved"]["decimal"], "0.84948");
    const Invocation single = invoke({"bounds", "--k", "4", "--format", "csv"});
    EXPECT_EQ(single.code, kOk);
    EXPECT_NE(single.out.find("\n4,0.93333,14/15,"), std::string::npos);
}

TEST(Cli, SearchJsonIsDeterministic) {
    const Invocation a = invoke({"search", "--n", "40", "--k", "3", "--json"});
    const Invocation b = invoke({"search", "--n", "40", "--k", "3", "--format", "json"});
    EXPECT_EQ(a.code, kOk);
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["method"], "exact");
    EXPECT_EQ(j["optimal"], true);
    const Invocation verbose = invoke({"-v", "search", "--n", "40", "--k", "3", "--json"});
    EXPECT_EQ(verbose.out, a.out);
    EXPECT_NE(verbose.err.find("elapsed"), std::string::npos);
}

TEST(Cli, SearchBudgetAndReport) {
    const auto j = nlohmann::json::parse(
        invoke({"search", "--n", "100", "--budget-nodes", "1", "--json"}).out);
    EXPECT_EQ(j["optimal"], false);
    const Invocation rep = invoke({"report", "--n", "10", "--k", "3", "--method", "exact"});
    EXPECT_EQ(rep.code, kOk);
    EXPECT_NE(rep.out.find("density: 0.800000"), std::string::npos);
    EXPECT_NE(rep.out.find("improved bound: 0.84948"), std::string::npos);
}

TEST(Cli, OutputFile) {
    const auto path = temp_file("table.txt");
    const Invocation r = invoke({"--output", path.string(), "table"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), invoke({"table"}).out);
    std::filesystem::remove(path);
}

TEST(Cli, DomainErrors) {
    EXPECT_EQ(invoke({"frobnicate"}).code, kDomainError);
    const Invocation unknown = invoke({"table", "--bogus"});
    EXPECT_EQ(unknown.code, kDomainError);
    EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
    EXPECT_EQ(invoke({"enumerate", "--n", "10", "--k", "2"}).code, kDomainError);
    EXPECT_EQ(invoke({"enumerate", "--n", "0"}).code, kDomainError);
    EXPECT_EQ(invoke({"bounds", "--k", "2..5"}).code, kDomainError);
    EXPECT_EQ(invoke({"bounds", "--k", "5..3"}).code, kDomainError);
    EXPECT_EQ(invoke({"check", "--set", "1,x"}).code, kDomainError);
    EXPECT_EQ(invoke({"search", "--n", "10", "--method", "random"}).code, kDomainError);
    EXPECT_EQ(invoke({"family", "--verify"}).code, kDomainError);
    EXPECT_EQ(invoke({}).code, kDomainError);
}

TEST(Cli, Help) {
    const Invocation r = invoke({"--help"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_NE(r.out.find("family"), std::string::npos);
}

}  // namespace
}  // namespace gpf::cli
