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

#include <random>
#include <vector>

#include "tpb/kernels.hpp"

using namespace tpb::kernels;

namespace {

std::vector<cplx> random_vec(std::size_t n, unsigned seed) {
    std::mt19937_64 g(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& x : v) x = cplx(u(g), u(g));
    return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Every length exercises the 4-wide body, the 2-wide step and the scalar tail.
const std::size_t kLengths[] = {1, 2, 3, 4, 5, 7, 8, 9, 31, 64, 143, 576};

} // namespace

TEST(Kernels, ScalarGemvMatchesDefinition) {
    const std::size_t m = 7, n = 5;
    const auto a = random_vec(m * n, 1), x = random_vec(n, 2);
    std::vector<cplx> y(m);
    scalar_table().gemv(m, n, a.data(), m, x.data(), y.data());
    for (std::size_t i = 0; i < m; ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += a[i + j * m] * x[j];
        EXPECT_NEAR(std::abs(y[i] - s), 0.0, 1e-14);
    }
}

TEST(Kernels, ActiveIsSupported) {
    EXPECT_TRUE(supported(active().isa));
    EXPECT_TRUE(supported(Isa::scalar));
    EXPECT_EQ(table(Isa::scalar).isa, Isa::scalar);
}

class SimdEquivalence : public ::testing::TestWithParam<std::size_t> {
protected:
    void SetUp() override {
        if (!supported(Isa::avx2)) GTEST_SKIP() << "CPU lacks AVX2/FMA";
    }
};

TEST_P(SimdEquivalence, Axpy) {
    const std::size_t n = GetParam();
    const auto x = random_vec(n, 10 + n);
    auto y1 = random_vec(n, 20 + n), y2 = y1;
    const cplx alpha(0.37, -1.21);
    table(Isa::scalar).axpy(n, alpha, x.data(), y1.data());
    table(Isa::avx2).axpy(n, alpha, x.data(), y2.data());
    EXPECT_LE(max_diff(y1, y2), 1e-15);
}

TEST_P(SimdEquivalence, Gemv) {
    const std::size_t m = GetParam(), n = GetParam() + 3;
    const std::size_t ld = m + 1; // padded leading dimension
    const auto a = random_vec(ld * n, 30 + m), x = random_vec(n, 40 + m);
    std::vector<cplx> y1(m, cplx(9.0)), y2(m, cplx(-9.0));
    table(Isa::scalar).gemv(m, n, a.data(), ld, x.data(), y1.data());
    table(Isa::avx2).gemv(m, n, a.data(), ld, x.data(), y2.data());
    EXPECT_LE(max_diff(y1, y2), 1e-13 * static_cast<double>(n));
}

TEST_P(SimdEquivalence, Dotu) {
    const std::size_t n = GetParam();
    const auto x = random_vec(n, 50 + n), y = random_vec(n, 60 + n);
    const cplx s1 = table(Isa::scalar).dotu(n, x.data(), y.data());
    const cplx s2 = table(Isa::avx2).dotu(n, x.data(), y.data());
    EXPECT_LE(std::abs(s1 - s2), 1e-14 * static_cast<double>(n));
}

TEST_P(SimdEquivalence, GemvSkipsZeroColumnsIdentically) {
    const std::size_t m = GetParam(), n = 6;
    const auto a = random_vec(m * n, 70 + m);
    std::vector<cplx> x(n, cplx(0.0));
    x[2] = cplx(1.0, 0.5);
    std::vector<cplx> y1(m), y2(m);
    table(Isa::scalar).gemv(m, n, a.data(), m, x.data(), y1.data());
    table(Isa::avx2).gemv(m, n, a.data(), m, x.data(), y2.data());
    EXPECT_LE(max_diff(y1, y2), 1e-15);
}

INSTANTIATE_TEST_SUITE_P(Lengths, SimdEquivalence, ::testing::ValuesIn(kLengths));
