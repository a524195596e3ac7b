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

#include "tpb/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "tpb/errors.hpp"

namespace tpb {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool valid_key(const std::string& k) {
    if (k.empty() || k.front() == '.' || k.back() == '.') return false;
    if (!(std::isalpha(static_cast<unsigned char>(k[0])) || k[0] == '_')) return false;
    for (char c : k)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.')) return false;
    return k.find("..") == std::string::npos;
}

bool parse_number(const std::string& s, double& out) {
    const char* b = s.data();
    const char* e = b + s.size();
    if (b != e && *b == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, e, out);
    return ec == std::errc() && ptr == e && std::isfinite(out);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) {
        cur = trim(cur);
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

} // namespace

std::string config_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Config Config::parse(std::istream& in, const std::string& source) {
    Config cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = source + ":" + std::to_string(lineno);
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(where + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!valid_key(key)) throw ConfigError(where + ": invalid key '" + key + "'");
        if (value.empty()) throw ConfigError(where + ": empty value for '" + key + "'");
        if (cfg.entries_.count(key))
            throw ConfigError(where + ": duplicate key '" + key + "' (first at " +
                              cfg.entries_[key].origin + ")");
        cfg.entries_[key] = Entry{value, where};
    }
    return cfg;
}

Config Config::parse_string(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    return parse(in, source);
}

Config Config::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    return parse(in, path);
}

void Config::set(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw ConfigError("--set " + assignment + ": expected key=value");
    const std::string key = trim(assignment.substr(0, eq));
    const std::string value = trim(assignment.substr(eq + 1));
    if (!valid_key(key)) throw ConfigError("--set " + assignment + ": invalid key '" + key + "'");
    if (value.empty()) throw ConfigError("--set " + assignment + ": empty value");
    entries_[key] = Entry{value, "--set " + key};
}

const Config::Entry* Config::find(const std::string& key) {
    used_.insert(key);
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

void Config::fail(const Entry& e, const std::string& key, const std::string& msg) const {
    throw ConfigError(e.origin + ": " + key + " = '" + e.value + "': " + msg);
}

double Config::get_double(const std::string& key, double def) {
    double v = def;
    if (const Entry* e = find(key)) {
        if (!parse_number(e->value, v)) fail(*e, key, "not a finite number");
    }
    effective_[key] = config_number(v);
    return v;
}

int Config::get_int(const std::string& key, int def) {
    int v = def;
    if (const Entry* e = find(key)) {
        const char* b = e->value.data();
        const char* end = b + e->value.size();
        auto [ptr, ec] = std::from_chars(b, end, v);
        if (ec != std::errc() || ptr != end) fail(*e, key, "not an integer");
    }
    effective_[key] = std::to_string(v);
    return v;
}

bool Config::get_bool(const std::string& key, bool def) {
    bool v = def;
    if (const Entry* e = find(key)) {
        if (e->value == "true" || e->value == "1" || e->value == "yes") v = true;
        else if (e->value == "false" || e->value == "0" || e->value == "no") v = false;
        else fail(*e, key, "expected true or false");
    }
    effective_[key] = v ? "true" : "false";
    return v;
}

std::string Config::get_string(const std::string& key, const std::string& def) {
    std::string v = def;
    if (const Entry* e = find(key)) v = e->value;
    effective_[key] = v;
    return v;
}

std::vector<double> Config::get_doubles(const std::string& key, const std::vector<double>& def) {
    std::vector<double> v = def;
    if (const Entry* e = find(key)) {
        v.clear();
        for (const auto& item : split_list(e->value)) {
            double x;
            if (!parse_number(item, x)) fail(*e, key, "list item '" + item + "' is not a number");
            v.push_back(x);
        }
        if (v.empty()) fail(*e, key, "empty list");
    }
    std::string rec;
    for (std::size_t i = 0; i < v.size(); ++i) rec += (i ? "," : "") + config_number(v[i]);
    effective_[key] = rec;
    return v;
}

std::vector<std::string> Config::get_strings(const std::string& key,
                                             const std::vector<std::string>& def) {
    std::vector<std::string> v = def;
    if (const Entry* e = find(key)) {
        v = split_list(e->value);
        if (v.empty()) fail(*e, key, "empty list");
    }
    std::string rec;
    for (std::size_t i = 0; i < v.size(); ++i) rec += (i ? "," : "") + v[i];
    effective_[key] = rec;
    return v;
}

void Config::check_unused() const {
    for (const auto& [key, e] : entries_)
        if (!used_.count(key)) throw ConfigError(e.origin + ": unknown key '" + key + "'");
}

} // namespace tpb
