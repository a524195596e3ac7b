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

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace tpb {

enum class AxisScale { linear, log };

struct Axis {
    std::string param;
    double min = 0.0;
    double max = 1.0;
    int count = 2;
    AxisScale scale = AxisScale::linear;

    /// Throws ConfigError for count < 2, min == max or non-positive log bounds.
    void validate() const;
    std::vector<double> points() const;
};

/// Run fn(0..n-1) on up to `workers` threads. Every index runs exactly once;
/// the first exception escaping fn is rethrown after all threads join.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

/// Default worker count from TPBSIM_WORKERS, or 1 when unset.
int default_workers();

} // namespace tpb
