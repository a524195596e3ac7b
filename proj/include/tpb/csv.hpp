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

#include <iosfwd>
#include <string>
#include <vector>

namespace tpb::csv {

/// Scientific notation with 17 significant digits; "nan", "inf", "-inf"
/// for non-finite values.
std::string num(double v);

struct Table {
    std::vector<std::string> comments; // written as "# <line>"
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void write(std::ostream& out) const;
    /// Throws IoError when the file cannot be written.
    void write_file(const std::string& path) const;
};

} // namespace tpb::csv
