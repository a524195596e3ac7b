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

#include "tpb/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "tpb/errors.hpp"

namespace tpb {

void Axis::validate() const {
    if (count < 2) throw ConfigError("axis '" + param + "': count must be at least 2");
    if (!std::isfinite(min) || !std::isfinite(max))
        throw ConfigError("axis '" + param + "': bounds must be finite");
    if (min == max) throw ConfigError("axis '" + param + "': min equals max (zero-length axis)");
    if (scale == AxisScale::log && (min <= 0.0 || max <= 0.0))
        throw ConfigError("axis '" + param + "': log scale needs positive bounds");
}

std::vector<double> Axis::points() const {
    validate();
    std::vector<double> out(static_cast<std::size_t>(count));
    const double last = count - 1;
    if (scale == AxisScale::linear) {
        for (int k = 0; k < count; ++k) out[k] = min + (max - min) * (k / last);
    } else {
        const double a = std::log10(min), b = std::log10(max);
        for (int k = 0; k < count; ++k) out[k] = std::pow(10.0, a + (b - a) * (k / last));
    }
    out.front() = min;
    out.back() = max;
    return out;
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
    if (workers < 1) workers = 1;
    const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first;
    std::mutex mu;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!first) first = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first) std::rethrow_exception(first);
}

int default_workers() {
    const char* env = std::getenv("TPBSIM_WORKERS");
    if (env == nullptr || *env == '\0') return 1;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024)
        throw ConfigError(std::string("TPBSIM_WORKERS='") + env + "' is not a worker count in 1..1024");
    return static_cast<int>(v);
}

} // namespace tpb
