#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sgsim {

// Sectioned key/value configuration files:
//
//   # comment
//   [experiment]
//   drops = 200
//   activities = 0.05, 0.1, 0.2
//
// Keys declared before any section header live in the unnamed section "".
// Duplicate keys within a section are rejected so typos surface early.
class Config {
 public:
  static Config parse(const std::string& text);
  static Config load(const std::string& path);

  // Canonical text form; parse(serialize()) reproduces the same Config.
  std::string serialize() const;

  bool has(const std::string& section, const std::string& key) const;

  std::string get_string(const std::string& section, const std::string& key) const;
  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;

  double get_double(const std::string& section, const std::string& key) const;
  double get_double(const std::string& section, const std::string& key, double fallback) const;

  std::uint64_t get_u64(const std::string& section, const std::string& key) const;
  std::uint64_t get_u64(const std::string& section, const std::string& key,
                        std::uint64_t fallback) const;

  bool get_bool(const std::string& section, const std::string& key) const;
  bool get_bool(const std::string& section, const std::string& key, bool fallback) const;

  // comma-separated list of reals
  std::vector<double> get_doubles(const std::string& section, const std::string& key) const;
  std::vector<double> get_doubles(const std::string& section, const std::string& key,
                                  const std::vector<double>& fallback) const;

  const std::map<std::string, std::map<std::string, std::string>>& sections() const {
    return sections_;
  }

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

}  // namespace sgsim
