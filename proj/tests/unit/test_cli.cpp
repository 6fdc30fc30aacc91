/**************************************************************************
 * test_cli.cpp
 *
 * Copyright 2026 The lrc4 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/
#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "lrc4/catalog.hpp"
#include "lrc4/constructions.hpp"
#include "lrc4/matrix_io.hpp"

using namespace lrc4;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("lrc4_cli_" + name)).string();
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST(Cli, CatalogListsEveryEntry) {
    const CliRun r = run({"catalog"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, std::to_string(catalog_entries().size()) + " entries"));
    EXPECT_TRUE(contains(r.out, "large.spread34.open"));
    EXPECT_TRUE(contains(r.out, "nonexistent"));
    EXPECT_TRUE(contains(run({"catalog", "--r", "1"}).out, "4 entries"));
    EXPECT_TRUE(contains(run({"catalog", "--d", "4"}).out, "4 entries"));
}

TEST(Cli, ConstructVerifyRoundTrip) {
    const std::string m = temp("c18.txt"), g = temp("c18.groups");
    const CliRun c = run({"construct", "k_r1.c18", "--n", "18", "--out", m, "--groups-out", g});
    ASSERT_EQ(c.code, 0) << c.err;
    EXPECT_TRUE(contains(c.out, "n=18 k=4"));
    const CliRun v = run({"verify", m, "--r", "3", "--delta", "4"});
    EXPECT_EQ(v.code, 0) << v.out;
    EXPECT_TRUE(contains(v.out, "n=18 k=4 d=12 r=3 delta=4"));
    EXPECT_TRUE(contains(v.out, "gap=0"));
    const CliRun vg = run({"verify", m, "--r", "3", "--delta", "4", "--groups", g});
    EXPECT_EQ(vg.code, 0);
    EXPECT_TRUE(contains(vg.out, "groups 3 "));
    std::remove(m.c_str());
    std::remove(g.c_str());
}

TEST(Cli, ConstructPrintsMatrixToStdout) {
    const CliRun r = run({"construct", "d3.r2", "--l", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(import_matrix(r.out), d3_family(2, 2, 0).matrix);
    EXPECT_TRUE(contains(r.err, "d3.r2.l2.e0"));
}

TEST(Cli, ConstructFixedMatrix) {
    const CliRun r = run({"construct", "fixed.c21", "--generator"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(LinearCode::from_generator(import_matrix(r.out)), LinearCode::from_generator(g21()));
}

TEST(Cli, VerifyReportsFailure) {
    const std::string m = temp("d9.txt");
    write_text_file(m, export_matrix(fixed_matrix("d9_example")));
    const CliRun v = run({"verify", m, "--r", "3", "--delta", "3"});
    EXPECT_EQ(v.code, 1);
    EXPECT_TRUE(contains(v.out, "gap=1"));
    EXPECT_TRUE(contains(v.out, "not optimal"));
    std::remove(m.c_str());
}

TEST(Cli, VerdictsAndDomainErrors) {
    const CliRun v = run({"construct", "d4.r2delta3", "--k", "4"});
    EXPECT_EQ(v.code, 1);
    EXPECT_TRUE(contains(v.out, "nonexistent"));
    const CliRun o = run({"construct", "large.spread34", "--l", "20"});
    EXPECT_EQ(o.code, 1);
    EXPECT_TRUE(contains(o.out, "open"));
    const CliRun d = run({"construct", "d3.r2", "--l", "1"});
    EXPECT_EQ(d.code, 2);
    EXPECT_TRUE(contains(d.err, "ell >= 2"));
    EXPECT_TRUE(contains(d.err, "d = 3 rows"));
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"verify", "x.txt"}).code, 2);
    EXPECT_EQ(run({"distance", "/nonexistent/file"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ParseErrorExitCode) {
    const std::string m = temp("bad.txt");
    write_text_file(m, "gf4 1 2\n1 c\n");
    const CliRun r = run({"distance", m});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.err, "line 2, column 3"));
    std::remove(m.c_str());
}

TEST(Cli, DistanceAndCap) {
    const std::string m = temp("g17.txt");
    write_text_file(m, export_matrix(g17(), MatrixKind::generator));
    const CliRun r = run({"distance", m});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "n=17 k=4 d=12"));
    EXPECT_TRUE(contains(r.out, "A12="));
    const CliRun capped = run({"distance", m, "--cap", "3"});
    EXPECT_EQ(capped.code, 2);
    EXPECT_TRUE(contains(capped.err, "refused"));
    std::remove(m.c_str());
}

TEST(Cli, RepairLocallyAndGlobally) {
    const std::string m = temp("rep.txt"), g = temp("rep.groups");
    const BuiltCode b = fixed_matrix_code("c18");
    write_text_file(m, export_matrix(b.matrix));
    write_text_file(g, export_groups(b.groups));
    const Vector c = b.code.encode(Vector{kOne, kAlpha, kZero, kBeta});
    ErasureWord w(c.begin(), c.end());
    w[0].reset();
    w[2].reset();
    w[4].reset();
    const CliRun local = run({"repair", m, "--word", format_word(w), "--groups", g});
    EXPECT_EQ(local.code, 0);
    EXPECT_TRUE(contains(local.out, "repaired locally"));
    EXPECT_TRUE(contains(local.out, format_vector(c)));
    const CliRun global = run({"repair", m, "--word", format_word(w)});
    EXPECT_EQ(global.code, 0);
    EXPECT_TRUE(contains(global.out, "repaired globally"));
    const CliRun bad = run({"repair", m, "--word", "0 0 ?"});
    EXPECT_EQ(bad.code, 2);
    std::remove(m.c_str());
    std::remove(g.c_str());
}

TEST(Cli, DesignCheck) {
    const std::string m = temp("g16.txt");
    write_text_file(m, export_matrix(g16(), MatrixKind::generator));
    const CliRun ok = run({"designcheck", m, "--t", "2", "--lambda", "1", "--r", "2", "--delta", "3"});
    EXPECT_EQ(ok.code, 0);
    EXPECT_TRUE(contains(ok.out, "groups=20"));
    EXPECT_TRUE(contains(ok.out, "design yes"));
    const CliRun no = run({"designcheck", m, "--t", "2", "--lambda", "2", "--r", "2", "--delta", "3"});
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(run({"designcheck", m, "--t", "2", "--lambda", "1"}).code, 2);

    const std::string gf = temp("fano.groups");
    write_text_file(gf, "1 2 3\n1 4 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n");
    EXPECT_EQ(run({"designcheck", gf, "--t", "2", "--lambda", "1", "--v", "7"}).code, 0);
    EXPECT_EQ(run({"designcheck", gf, "--t", "2", "--lambda", "1"}).code, 2);
    std::remove(m.c_str());
    std::remove(gf.c_str());
}
