/*
   Copyright 2026 The galspec Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <galspec/cli.hpp>

#include <gtest/gtest.h>

#include <sstream>

using galspec::cli::Json;

namespace {

struct Run {
    int code;
    Json doc;
    std::string text, err;
};

Run call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = galspec::cli::run(args, out, err);
    Run r{code, nullptr, out.str(), err.str()};
    if (!r.text.empty() && r.text[0] == '{') r.doc = Json::parse(r.text);
    return r;
}

std::string data(const std::string& f) { return std::string(GALSPEC_DATA_DIR) + "/" + f; }

} // namespace

TEST(Cli, EnvelopeShape) {
    auto r = call({"census", "--field", "7", "--cover", "Y^2-T"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::vector<std::string> keys;
    for (auto it = r.doc.begin(); it != r.doc.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"command", "input_echo", "result", "certificates", "warnings", "timing"}));
    EXPECT_TRUE(r.doc["timing"].is_null());
    EXPECT_EQ(r.text.back(), '\n');
}

TEST(Cli, CensusSquareRootCover) {
    auto r = call({"census", "--field", "7", "--cover", "Y^2-T"});
    ASSERT_EQ(r.code, 0);
    const auto& res = r.doc["result"];
    EXPECT_EQ(res["excluded"], 1);
    // squares and nonsquares among the six nonzero residues mod 7
    for (const auto& row : res["counts"]) EXPECT_EQ(row["count"], 3);
}

TEST(Cli, SearchReportsProgression) {
    auto r = call({"search", "--cover", "Y^3-Y-T", "--constraints", "5:{3}"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto& res = r.doc["result"];
    ASSERT_TRUE(res.contains("b"));
    ASSERT_TRUE(res.contains("M"));
    ASSERT_EQ(res["certified_t0"].size(), 3u);
    galspec::Integer M(res["M"].get<std::string>()), b(res["b"].get<std::string>());
    EXPECT_EQ(M % 5, 0);
    for (const auto& t : res["certified_t0"]) {
        galspec::Integer t0(t.get<std::string>());
        EXPECT_EQ(((t0 - b) % M + M) % M, 0);
        // Y^3 - Y - t0 has no root mod 5 when t0 = 2, 3 mod 5
        auto r5 = static_cast<int>(((t0 % 5) + 5) % 5);
        EXPECT_TRUE(r5 == 2 || r5 == 3) << t0;
    }
}

TEST(Cli, SpecializeAtBranchPoint) {
    auto r = call({"specialize", "--cover", "Y^2-T", "--t0", "0"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.doc["error"]["kind"], "ramified-point");
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, SpecializeOverFiniteFieldByIndex) {
    auto r = call({"specialize", "--field", "13", "--cover", "Y^3-Y-T", "--t0", "#1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc["result"]["pattern"], Json::array({3}));
}

TEST(Cli, ResidueDegrees) {
    auto r = call({"specialize", "--cover", "Y^3-Y-T", "--t0", "2", "--prime", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc["result"]["residue_degrees"]["pattern"], Json::array({3}));
    auto bad = call({"specialize", "--cover", "Y^3-Y-T", "--t0", "2", "--prime", "3"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(bad.doc["error"]["kind"], "bad-prime");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"frobnicate"}).code, 2);
    EXPECT_EQ(call({"census", "--field", "7"}).code, 2);
    EXPECT_EQ(call({"census", "--field", "7", "--cover", "Y^2-T", "--family", "trinomial-simple:3"}).code, 2);
    EXPECT_EQ(call({"census", "--field", "12", "--cover", "Y^2-T"}).code, 2);
    EXPECT_EQ(call({"census", "--cover", "Y^2-T"}).code, 2);
    EXPECT_EQ(call({"search", "--cover", "Y^3-Y-T", "--constraints", "5:3"}).code, 2);
    auto p = call({"specialize", "--cover", "Y^^2", "--t0", "1"});
    EXPECT_EQ(p.code, 2);
    EXPECT_EQ(p.doc["error"]["kind"], "parse");
}

TEST(Cli, InfeasibleConstraint) {
    // Y^4 - Y - t never splits as two quadratics mod 7
    auto r = call({"search", "--cover", "Y^4-Y-T", "--constraints", "7:{2,2}"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.doc["error"]["kind"], "infeasible-local-constraint");
    auto b = call({"search", "--cover", "Y^3-Y-T", "--constraints", "3:{2,1}"});
    EXPECT_EQ(b.code, 1);
    EXPECT_EQ(b.doc["error"]["kind"], "bad-prime");
}

TEST(Cli, ByteStableOutput) {
    std::vector<std::string> a{"search", "--family", "trinomial-simple:3", "--constraints", "5:{1,1,1},7:{2,1}"};
    EXPECT_EQ(call(a).text, call(a).text);
    std::vector<std::string> c{"census", "--field", "5^2", "--family", "trinomial-simple:3"};
    EXPECT_EQ(call(c).text, call(c).text);
}

TEST(Cli, FamilyBranchData) {
    auto r = call({"family", "--family", "trinomial-simple:3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto& res = r.doc["result"];
    EXPECT_EQ(res["r"], 3);
    EXPECT_EQ(res["recorded_branch_points"], res["rational_branch_points"]);
    EXPECT_EQ(res["bad_primes"], Json::array({"2", "3"}));
    EXPECT_EQ(call({"family", "--family", "trinomial-general:3,1,1,2"}).code, 0);
    EXPECT_EQ(call({"family", "--family", "trinomial-general:3,3,1,1"}).code, 1);
    EXPECT_EQ(call({"family", "--family", "nosuch:3"}).code, 2);
}

TEST(Cli, MorseAndRealize) {
    auto m = call({"morse-check", "--cover", "Y^3-3*Y"});
    ASSERT_EQ(m.code, 0);
    EXPECT_TRUE(m.doc["result"]["morse"].get<bool>());
    EXPECT_FALSE(call({"morse-check", "--cover", "Y^3"}).doc["result"]["morse"].get<bool>());
    auto t = call({"realize-ff", "--field", "1297", "--n", "3"});
    ASSERT_EQ(t.code, 0) << t.err;
    EXPECT_EQ(t.doc["result"]["bound"], "1296");
    EXPECT_TRUE(t.doc["result"]["meets_bound"].get<bool>());
    EXPECT_TRUE(t.doc["certificates"][0]["pass"].get<bool>());
    auto e = call({"realize-ff", "--field", "3^3", "--family", "trinomial-simple:2"});
    EXPECT_EQ(e.code, 0) << e.err;
}

TEST(Cli, TwistVerifyDataFiles) {
    auto r = call({"twist-verify", "--datum", data("s3xc2.datum")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.doc["result"]["failures"], 0);
    EXPECT_GT(r.doc["result"]["with_fixed_point"].get<int>(), 0);
    auto v = call({"twist-verify", "--datum", data("c4_over_c2.datum")});
    ASSERT_EQ(v.code, 0) << v.err;
    EXPECT_TRUE(v.doc["result"]["vacuous"].get<bool>());
    EXPECT_EQ(call({"twist-verify", "--datum", data("missing.datum")}).code, 2);
}

TEST(Cli, TwistDatumParseErrorsCarryPosition) {
    std::istringstream in("gamma 2\n0 1\n1 x\n");
    try {
        galspec::cli::read_datum(in);
        FAIL();
    } catch (const galspec::ParseError& e) {
        EXPECT_EQ(e.line(), 3);
        EXPECT_EQ(e.column(), 3);
    }
}

TEST(Cli, TimingAndOutFile) {
    auto r = call({"--timing", "census", "--field", "5", "--cover", "Y^2-T"});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.doc["timing"].contains("seconds"));
    std::string path = ::testing::TempDir() + "/galspec_cli_out.json";
    auto w = call({"--out", path, "census", "--field", "5", "--cover", "Y^2-T"});
    ASSERT_EQ(w.code, 0);
    EXPECT_TRUE(w.text.empty());
    std::ifstream f(path);
    Json doc = Json::parse(f);
    EXPECT_EQ(doc["command"], "census");
}
