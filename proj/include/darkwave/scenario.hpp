#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace darkwave {

// Layered key-value scenario text with units. Rates are interpreted as
// values quoted per 2*pi (the usual reporting convention) unless
// `angular = true`. Example:
//
//   protocol = rose
//   kappa = 1 MHz
//   g0 = 100 Hz
//   chirp = 0.5 MHz^2
//   C = 0.1, 0.3
//
class Scenario {
  public:
    static Scenario parse_file(const std::string& path);
    static Scenario parse_text(const std::string& text);

    bool has(const std::string& key) const;
    // Scalars with unit suffixes; angular conversion applied for rates.
    double rate(const std::string& key, double fallback) const;       // rad/s
    double chirp(const std::string& key, double fallback) const;      // rad/s^2
    double time(const std::string& key, double fallback) const;       // s
    double number(const std::string& key, double fallback) const;
    int integer(const std::string& key, int fallback) const;
    bool flag(const std::string& key, bool fallback) const;
    std::string text(const std::string& key, const std::string& fallback) const;
    std::vector<double> rate_list(const std::string& key) const;
    std::vector<double> number_list(const std::string& key) const;

    const std::string& name() const { return name_; }
    std::string canonical() const;  // normalized text, input to the run hash
    uint64_t hash() const;

  private:
    double parse_value(const std::string& key, const std::string& raw,
                       const char* kind) const;
    std::map<std::string, std::string> kv_;
    std::string name_ = "scenario";
    bool angular_ = false;
};

}  // namespace darkwave
