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
#include <map>
#include <set>
#include <string>
#include <vector>

namespace tpb {

/// Flat `key = value` configuration with dotted keys and `#` comments.
/// Typed getters record the value actually used (including defaults) so the
/// effective configuration can be written back out verbatim.
class Config {
public:
    static Config parse(std::istream& in, const std::string& source);
    static Config parse_string(const std::string& text, const std::string& source = "<string>");
    static Config load(const std::string& path);

    /// Apply a `key=value` override.
    void set(const std::string& assignment);

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    double get_double(const std::string& key, double def);
    int get_int(const std::string& key, int def);
    bool get_bool(const std::string& key, bool def);
    std::string get_string(const std::string& key, const std::string& def);
    std::vector<double> get_doubles(const std::string& key, const std::vector<double>& def);
    std::vector<std::string> get_strings(const std::string& key, const std::vector<std::string>& def);

    /// Every key read, with the value in force, sorted by key.
    const std::map<std::string, std::string>& effective() const { return effective_; }

    /// Throws ConfigError naming the first key that was never read.
    void check_unused() const;

private:
    struct Entry {
        std::string value;
        std::string origin; // "file:line" or "--set"
    };

    const Entry* find(const std::string& key);
    [[noreturn]] void fail(const Entry& e, const std::string& key, const std::string& msg) const;

    std::map<std::string, Entry> entries_;
    std::map<std::string, std::string> effective_;
    std::set<std::string> used_;
};

/// "%.17g" rendering used for recorded values.
std::string config_number(double v);

} // namespace tpb
