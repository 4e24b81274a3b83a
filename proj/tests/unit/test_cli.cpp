#include "gltrace/cli.hpp"
#include "gltrace/io.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <sstream>

using namespace gltrace;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Io, FamilyJson) {
    const Family f = parse_family_json(R"([{"tag":"x-1","d":1,"lambda":"2,1"},{"tag":"c","d":2,"lambda":[1]}])");
    ASSERT_EQ(f.blocks().size(), 2u);
    EXPECT_EQ(f.blocks()[0].diagram, (Partition{2, 1}));
    EXPECT_EQ(f.blocks()[1].degree, 2);
    EXPECT_EQ(parse_family_json(family_to_json(f)), f);
    EXPECT_EQ(parse_family_json(R"([{"tag":"a","lambda":"1"}])").blocks()[0].degree, 1);
    EXPECT_TRUE(parse_family_json("[]").empty());
    EXPECT_THROW(parse_family_json("{"), std::invalid_argument);
    EXPECT_THROW(parse_family_json(R"({"tag":"a"})"), std::invalid_argument);
    EXPECT_THROW(parse_family_json(R"([{"lambda":"1"}])"), std::invalid_argument);
    EXPECT_THROW(parse_family_json(R"([{"tag":"a","lambda":"x"}])"), std::invalid_argument);
    EXPECT_THROW(parse_family_json(R"([{"tag":"a","d":"2","lambda":"1"}])"), std::invalid_argument);
}

TEST(Io, Lists) {
    EXPECT_TRUE(parse_rational_list("").empty());
    EXPECT_EQ(parse_rational_list("1/2, 1/3"), (std::vector<Rational>{Rational(1, 2), Rational(1, 3)}));
    EXPECT_THROW(parse_rational_list("1/0"), std::invalid_argument);
    const auto f = parse_frequency_list("1/2^q,1/4");
    ASSERT_EQ(f.size(), 2u);
    EXPECT_TRUE(f[0].spread);
    EXPECT_EQ(f[0].value, Rational(1, 2));
    EXPECT_FALSE(f[1].spread);
}

TEST(Cli, DimensionAndTrace) {
    auto r = invoke({"dim", "--q", "2", "--family", R"([{"tag":"x-1","d":1,"lambda":"1,1"}])"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2\n");
    r = invoke({"trace", "--q", "2", "--alpha", "", "--beta", "1", "--class", R"([{"tag":"c","d":2,"lambda":"1"}])"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "-1\n");
}

TEST(Cli, ExactValuesPrintAsFractions) {
    EXPECT_EQ(invoke({"cyl", "--q", "2", "--measure", "haar", "--lambda", "2,1"}).out, "1/8\n");
    EXPECT_EQ(invoke({"cyl", "--q", "2", "--measure", "delta", "--lambda", "1,1,1"}).out, "1\n");
    EXPECT_EQ(invoke({"kostka-foulkes", "--lambda", "2,1", "--mu", "1,1,1", "--t", "1/2"}).out, "3/4\n");
    EXPECT_EQ(invoke({"kostka", "--lambda", "2,1", "--mu", "1,1,1"}).out, "2\n");
}

TEST(Cli, CsvAndJsonTables) {
    auto r = invoke({"coeffs", "--n", "2", "--alpha", "1/2,1/2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "lambda,coefficient\n2,3/4\n\"1,1\",1/4\n");
    r = invoke({"hl-expand", "--lambda", "2", "--t", "1/2", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    ASSERT_TRUE(doc.contains("results"));
    EXPECT_EQ(doc["results"].size(), 2u);
    EXPECT_EQ(doc["results"][0]["mu"], "2");
    r = invoke({"dim", "--q", "3", "--family", R"([{"tag":"x-1","lambda":"2"}])", "--format", "csv"});
    EXPECT_EQ(r.out, "value\n1\n");
}

TEST(Cli, SamplingIsReproducible) {
    const std::vector<std::string> args{"sample", "--q", "2", "--measure", "haar", "--nmax", "30", "--seed", "9"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
    const auto row = invoke({"sample", "--q", "3", "--measure", "row", "--nmax", "3"});
    EXPECT_EQ(row.out, "n,lambda\n0,\n1,1\n2,2\n3,3\n");
    const std::vector<std::string> lln{"lln", "--q", "2", "--measure", "haar", "--nmax", "60", "--trials", "10", "--seed", "4"};
    const auto a = invoke(lln);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, invoke(lln).out);
    EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "statistic,i,empirical,predicted,stderr");
}

TEST(Cli, ValidationErrorsExitOne) {
    EXPECT_EQ(invoke({}).code, 1);
    auto r = invoke({"frobnicate"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
    EXPECT_EQ(invoke({"dim", "--q", "2", "--family", "[{"}).code, 1);
    EXPECT_EQ(invoke({"dim", "--q", "1", "--family", "[]"}).code, 1);
    EXPECT_EQ(invoke({"dim", "--family", "[]"}).code, 1);
    EXPECT_EQ(invoke({"cyl", "--q", "2", "--r", "3/4", "--c", "1/2", "--lambda", "1"}).code, 1);
    EXPECT_EQ(invoke({"cyl", "--q", "2", "--measure", "haar", "--r", "1/2", "--lambda", "1"}).code, 1);
    EXPECT_EQ(invoke({"trace", "--q", "2", "--alpha", "3/4,1/2", "--class", "[]"}).code, 1);
    EXPECT_EQ(invoke({"sample", "--q", "2", "--r", "1/2", "--nmax", "40"}).code, 1);
    EXPECT_EQ(invoke({"verify", "no-such-suite"}).code, 1);
    EXPECT_EQ(invoke({"dim", "--q", "2", "--family", "[]", "--format", "xml"}).code, 1);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, VerifySuite) {
    const auto r = invoke({"verify", "steinberg"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "suite,identity,instance,left,right,pass");
    EXPECT_EQ(r.out.find(",false\n"), std::string::npos);
    const auto listing = invoke({"verify", "--list"});
    EXPECT_EQ(listing.code, 0);
    EXPECT_NE(listing.out.find("extension-count"), std::string::npos);
}
