#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "indexed/cli.hpp"
#include "indexed/json_text.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using indexed::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = run(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("jsondoc_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& content) {
        auto p = dir_ / name;
        std::ofstream(p, std::ios::binary) << content;
        return p.string();
    }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ValidateAcceptsObjectRoot) {
    auto r = invoke({"validate", file("ok.json", "{}")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "valid\n");
    EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, ValidateRejectsArrayRoot) {
    auto r = invoke({"validate", file("arr.json", "[1]")});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(r.err, "error: RootNotObject at 1:1: root value must be an object, found array\n");
}

TEST_F(CliTest, ValidateReportsSyntaxPosition) {
    auto r = invoke({"validate", file("bad.json", "{\n  \"a\" 1\n}")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.err.rfind("error: Syntax at 2:7: ", 0), 0u) << r.err;
}

TEST_F(CliTest, ReadsStdin) {
    auto r = invoke({"validate", "-"}, R"({"a":[1,2]})");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "valid\n");
    auto f = invoke({"fmt", "-"}, " { \"a\" : [ 1 , 2 ] } ");
    EXPECT_EQ(f.out, "{\"a\":[1,2]}\n");
}

TEST_F(CliTest, FmtCompactAndPretty) {
    auto path = file("d.json", R"({ "a" : [1, {"b": null}], "c": "x" })");
    auto compact = invoke({"fmt", path});
    EXPECT_EQ(compact.code, 0);
    EXPECT_EQ(compact.out, "{\"a\":[1,{\"b\":null}],\"c\":\"x\"}\n");

    auto pretty = invoke({"fmt", path, "--pretty"});
    EXPECT_EQ(pretty.code, 0);
    EXPECT_EQ(pretty.out,
              "{\n  \"a\": [\n    1,\n    {\n      \"b\": null\n    }\n  ],\n  \"c\": \"x\"\n}\n");
}

TEST_F(CliTest, FmtOutputReparsesEqualAndIsIdempotent) {
    int k = 0;
    for (const auto& text : indexed::testing::accepted_corpus()) {
        for (bool pretty : {false, true}) {
            std::vector<std::string> args{"fmt", file("in" + std::to_string(k++) + ".json", text)};
            if (pretty) args.push_back("--pretty");
            auto once = invoke(args);
            ASSERT_EQ(once.code, 0) << text;
            EXPECT_EQ(indexed::json::parse(once.out), indexed::json::parse(text));

            args[1] = file("out" + std::to_string(k++) + ".json", once.out);
            auto twice = invoke(args);
            EXPECT_EQ(twice.out, once.out);
        }
    }
}

TEST_F(CliTest, StatsReport) {
    auto r = invoke({"stats", file("s.json", R"({"a":[null,{"b":true}],"c":1})")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "nodes: 7\n"
              "max_depth: 5\n"
              "DOC: 1\n"
              "ARRAY: 1\n"
              "MAP: 2\n"
              "VALUE: 3\n");
}

TEST_F(CliTest, OutputFlagWritesFile) {
    auto target = (dir_ / "result.json").string();
    auto r = invoke({"fmt", file("x.json", "{ }"), "--output", target});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(target);
    std::string written((std::istreambuf_iterator<char>(in)), {});
    EXPECT_EQ(written, "{}\n");
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate", "x"}).code, 2);
    EXPECT_EQ(invoke({"validate"}).code, 2);
    EXPECT_EQ(invoke({"validate", file("a.json", "{}"), "--bogus"}).code, 2);
    EXPECT_EQ(invoke({"validate", file("b.json", "{}"), "--pretty"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(CliTest, IoErrors) {
    auto r = invoke({"validate", (dir_ / "missing.json").string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.err.rfind("error: io: ", 0), 0u);

    auto unwritable = invoke({"fmt", file("c.json", "{}"), "--output", (dir_ / "no" / "such" / "dir").string()});
    EXPECT_EQ(unwritable.code, 2);
}
