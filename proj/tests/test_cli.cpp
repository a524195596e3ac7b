// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The tpbsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("tpbsim_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

    std::string read(const std::string& name) const {
        std::ifstream in(path(name));
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    int exec(const std::string& args, const std::string& env = "") const {
        const std::string cmd = env + " " + TPBSIM_EXE + std::string(" ") + args + " >" + path("stdout") + " 2>" + path("stderr");
        const int rc = std::system(cmd.c_str());
        return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    }

    fs::path dir_;
};

const char* kSmallSweep =
    "model = tpb\n"
    "axis1.param = delta\naxis1.min = -0.5\naxis1.max = 0.5\naxis1.count = 3\n"
    "outputs = N, g2_0\n";

} // namespace

TEST_F(Cli, SuccessWritesCsv) {
    write("a.cfg", kSmallSweep);
    EXPECT_EQ(exec("sweep --config " + path("a.cfg") + " --out " + path("a.csv")), 0);
    const std::string csv = read("a.csv");
    EXPECT_EQ(csv.rfind("# tpbsim ", 0), 0u);
    EXPECT_NE(csv.find("\ndelta,N_numeric,g2_0_numeric,status\n"), std::string::npos);
}

TEST_F(Cli, StdoutWhenNoOutPath) {
    write("a.cfg", kSmallSweep);
    EXPECT_EQ(exec("sweep --config " + path("a.cfg")), 0);
    EXPECT_NE(read("stdout").find("g2_0_numeric"), std::string::npos);
}

TEST_F(Cli, RerunsAreByteIdentical) {
    write("a.cfg", kSmallSweep);
    ASSERT_EQ(exec("sweep --config " + path("a.cfg") + " --out " + path("1.csv") + " --workers 1"), 0);
    ASSERT_EQ(exec("sweep --config " + path("a.cfg") + " --out " + path("2.csv") + " --workers 3"), 0);
    EXPECT_EQ(read("1.csv"), read("2.csv"));
    ASSERT_EQ(exec("circuit --out " + path("c1.csv")), 0);
    ASSERT_EQ(exec("circuit --out " + path("c2.csv")), 0);
    EXPECT_EQ(read("c1.csv"), read("c2.csv"));
}

TEST_F(Cli, SetOverridesConfig) {
    write("a.cfg", kSmallSweep);
    ASSERT_EQ(exec("sweep --config " + path("a.cfg") + " --set tpb.J=0.2 --set axis1.count=4 --out " + path("a.csv")), 0);
    const std::string csv = read("a.csv");
    EXPECT_NE(csv.find("# config tpb.J = 0.20000000000000001\n"), std::string::npos);
    EXPECT_NE(csv.find("# config axis1.count = 4\n"), std::string::npos);
}

TEST_F(Cli, ConfigErrorsExitOne) {
    write("bad.cfg", "model = tpb\nthis is not a pair\n");
    EXPECT_EQ(exec("sweep --config " + path("bad.cfg")), 1);
    EXPECT_NE(read("stderr").find("bad.cfg:2"), std::string::npos);
    write("typo.cfg", "tpb.Jay = 1\n");
    EXPECT_EQ(exec("sweep --config " + path("typo.cfg")), 1);
    EXPECT_EQ(exec("sweep --set axis1.param=delta --set axis1.min=1 --set axis1.max=1"), 1);
    EXPECT_EQ(exec("sweep --set tpb.kappa=-1"), 1);
    EXPECT_EQ(exec("sweep --workers 0"), 1);
    EXPECT_EQ(exec("nosuchcommand"), 1);
    EXPECT_EQ(exec("sweep", "TPBSIM_WORKERS=abc"), 1);
}

TEST_F(Cli, SolverFailureExitsTwo) {
    EXPECT_EQ(exec("sweep --set tpb.J=0 --set tpb.gamma=0 --out " + path("f.csv")), 2);
    EXPECT_NE(read("f.csv").find("solver_error"), std::string::npos);
}

TEST_F(Cli, IoErrorsExitThree) {
    EXPECT_EQ(exec("sweep --config " + path("missing.cfg")), 3);
    write("a.cfg", kSmallSweep);
    EXPECT_EQ(exec("sweep --config " + path("a.cfg") + " --out " + path("no/such/dir/out.csv")), 3);
}

TEST_F(Cli, WorkerEnvironmentDefault) {
    write("a.cfg", kSmallSweep);
    EXPECT_EQ(exec("sweep --config " + path("a.cfg") + " --out " + path("e.csv"), "TPBSIM_WORKERS=2"), 0);
}

TEST_F(Cli, AllSubcommandsAcceptCommonOptions) {
    EXPECT_EQ(exec("compare --set compare.kappa_over_J.count=2 --workers 2 --out " + path("c.csv")), 0);
    EXPECT_EQ(exec("g2tau --set g2tau.t.max=5 --set g2tau.t.count=6 --out " + path("g.csv")), 0);
    EXPECT_EQ(exec("thermal --set thermal.n_th.count=2 --set thermal.include_zero=false --out " + path("t.csv")), 0);
    EXPECT_EQ(exec("circuit --set circuit.flux.count=3 --out " + path("ci.csv")), 0);
}
