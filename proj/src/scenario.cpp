#include "darkwave/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "darkwave/units.hpp"

namespace darkwave {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    size_t b = s.find_last_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

struct Unit {
    const char* name;
    double factor;
    int kind;  // 0 plain, 1 rate, 2 time, 3 chirp
};

const Unit units[] = {
    {"ghz", 1e9, 1},   {"mhz", 1e6, 1},     {"khz", 1e3, 1},
    {"hz", 1.0, 1},    {"mhz^2", 1e12, 3},  {"mhz/us", 1e12, 3},
    {"mhz/ms", 1e9, 3}, {"khz^2", 1e6, 3},  {"ns", 1e-9, 2},
    {"us", 1e-6, 2},   {"ms", 1e-3, 2},     {"s", 1.0, 2},
};

}  // namespace

Scenario Scenario::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    Scenario sc = parse_text(ss.str());
    if (sc.name_ == "scenario") {
        auto slash = path.find_last_of("/\\");
        sc.name_ = slash == std::string::npos ? path : path.substr(slash + 1);
    }
    return sc;
}

Scenario Scenario::parse_text(const std::string& text) {
    Scenario sc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("scenario line " + std::to_string(lineno) +
                                     ": expected key = value");
        const std::string key = lower(trim(line.substr(0, eq)));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw std::runtime_error("scenario line " + std::to_string(lineno) +
                                     ": empty key or value");
        sc.kv_[key] = val;
    }
    sc.angular_ = sc.flag("angular", false);
    sc.name_ = sc.text("name", "scenario");
    return sc;
}

bool Scenario::has(const std::string& key) const { return kv_.count(lower(key)); }

double Scenario::parse_value(const std::string& key, const std::string& raw,
                             const char* kind) const {
    std::istringstream in(raw);
    double v = 0.0;
    if (!(in >> v))
        throw std::runtime_error("scenario key '" + key + "': bad number '" +
                                 raw + "'");
    std::string unit;
    in >> unit;
    unit = lower(trim(unit));
    const std::string want(kind);
    if (unit.empty()) {
        if (want == "rate" || want == "chirp")
            return angular_ ? v : two_pi * v;  // bare rates default to Hz
        return v;
    }
    for (const auto& u : units) {
        if (unit != u.name) continue;
        if (want == "rate" && u.kind == 1)
            return (angular_ ? 1.0 : two_pi) * v * u.factor;
        if (want == "chirp" && u.kind == 3)
            return (angular_ ? 1.0 : two_pi) * v * u.factor;
        if (want == "time" && u.kind == 2) return v * u.factor;
        if (want == "number") return v * u.factor;
    }
    throw std::runtime_error("scenario key '" + key + "': unit '" + unit +
                             "' does not fit a " + want);
}

double Scenario::rate(const std::string& key, double fallback) const {
    auto it = kv_.find(lower(key));
    if (it == kv_.end()) return fallback;
    return parse_value(key, it->second, "rate");
}

double Scenario::chirp(const std::string& key, double fallback) const {
    auto it = kv_.find(lower(key));
    if (it == kv_.end()) return fallback;
    return parse_value(key, it->second, "chirp");
}

double Scenario::time(const std::string& key, double fallback) const {
    auto it = kv_.find(lower(key));
    if (it == kv_.end()) return fallback;
    return parse_value(key, it->second, "time");
}

double Scenario::number(const std::string& key, double fallback) const {
    auto it = kv_.find(lower(key));
    if (it == kv_.end()) return fallback;
    return parse_value(key, it->second, "number");
}

int Scenario::integer(const std::string& key, int fallback) const {
    auto it = kv_.find(lower(key));
    if (it == kv_.end()) return fallback;
    return static_cast<int>(std::lround(parse_value(key, it->second, "number")));
}

bool Scenario::flag(const std::string& key, bool fallback) const {
    auto it = kv_.find(lower(key));
    if (it == kv_.end()) return fallback;
    const std::string v = lower(trim(it->second));
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw std::runtime_error("scenario key '" + key + "': expected a boolean");
}

std::string Scenario::text(const std::string& key,
                           const std::string& fallback) const {
    auto it = kv_.find(lower(key));
    return it == kv_.end() ? fallback : it->second;
}

std::vector<double> Scenario::rate_list(const std::string& key) const {
    std::vector<double> out;
    auto it = kv_.find(lower(key));
    if (it == kv_.end()) return out;
    std::string item;
    std::istringstream in(it->second);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_value(key, item, "rate"));
    }
    if (out.empty()) throw std::runtime_error("empty sweep list for '" + key + "'");
    return out;
}

std::vector<double> Scenario::number_list(const std::string& key) const {
    std::vector<double> out;
    auto it = kv_.find(lower(key));
    if (it == kv_.end()) return out;
    std::string item;
    std::istringstream in(it->second);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_value(key, item, "number"));
    }
    if (out.empty()) throw std::runtime_error("empty sweep list for '" + key + "'");
    return out;
}

std::string Scenario::canonical() const {
    std::ostringstream out;
    for (const auto& [k, v] : kv_) out << k << "=" << v << "\n";
    return out.str();
}

uint64_t Scenario::hash() const {
    // FNV-1a over the canonical text
    uint64_t h = 1469598103934665603ULL;
    for (char c : canonical()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace darkwave
