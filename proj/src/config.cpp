#include "sgsim/config.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sgsim {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  std::ostringstream os;
  os << "config line " << line << ": " << what;
  throw std::runtime_error(os.str());
}

[[noreturn]] void fail_key(const std::string& section, const std::string& key,
                           const std::string& what) {
  std::ostringstream os;
  os << "config key [" << section << "] " << key << ": " << what;
  throw std::runtime_error(os.str());
}

double parse_double(const std::string& section, const std::string& key, const std::string& v) {
  errno = 0;
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0' || errno == ERANGE)
    fail_key(section, key, "expected a real number, got '" + v + "'");
  return x;
}

}  // namespace

Config Config::parse(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  std::size_t lineno = 0;
  cfg.sections_[section];
  while (std::getline(in, raw)) {
    ++lineno;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(lineno, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) fail(lineno, "empty section name");
      cfg.sections_[section];
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail(lineno, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(lineno, "empty key");
    auto& sec = cfg.sections_[section];
    if (!sec.emplace(key, value).second)
      fail(lineno, "duplicate key '" + key + "' in section [" + section + "]");
  }
  return cfg;
}

std::string Config::serialize() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, kv] : sections_) {
    if (name.empty() && kv.empty()) continue;  // parse() recreates it
    if (!first) out << "\n";
    if (!name.empty()) out << "[" << name << "]\n";
    for (const auto& [key, value] : kv) out << key << " = " << value << "\n";
    first = false;
  }
  return out.str();
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

bool Config::has(const std::string& section, const std::string& key) const {
  const auto it = sections_.find(section);
  return it != sections_.end() && it->second.count(key) > 0;
}

std::string Config::get_string(const std::string& section, const std::string& key) const {
  const auto it = sections_.find(section);
  if (it != sections_.end()) {
    const auto kv = it->second.find(key);
    if (kv != it->second.end()) return kv->second;
  }
  fail_key(section, key, "missing required key");
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
  return has(section, key) ? get_string(section, key) : fallback;
}

double Config::get_double(const std::string& section, const std::string& key) const {
  return parse_double(section, key, get_string(section, key));
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

std::uint64_t Config::get_u64(const std::string& section, const std::string& key) const {
  const std::string v = get_string(section, key);
  if (!v.empty() && v.front() == '-') fail_key(section, key, "expected a nonnegative integer");
  errno = 0;
  char* end = nullptr;
  const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0' || errno == ERANGE)
    fail_key(section, key, "expected a nonnegative integer, got '" + v + "'");
  return static_cast<std::uint64_t>(x);
}

std::uint64_t Config::get_u64(const std::string& section, const std::string& key,
                              std::uint64_t fallback) const {
  return has(section, key) ? get_u64(section, key) : fallback;
}

bool Config::get_bool(const std::string& section, const std::string& key) const {
  std::string v = get_string(section, key);
  for (char& c : v) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
  if (v == "false" || v == "no" || v == "off" || v == "0") return false;
  fail_key(section, key, "expected a boolean, got '" + v + "'");
}

bool Config::get_bool(const std::string& section, const std::string& key, bool fallback) const {
  return has(section, key) ? get_bool(section, key) : fallback;
}

std::vector<double> Config::get_doubles(const std::string& section,
                                        const std::string& key) const {
  const std::string v = get_string(section, key);
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= v.size()) {
    const std::size_t comma = v.find(',', pos);
    const std::string item =
        trim(comma == std::string::npos ? v.substr(pos) : v.substr(pos, comma - pos));
    if (item.empty()) fail_key(section, key, "empty element in list '" + v + "'");
    out.push_back(parse_double(section, key, item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) fail_key(section, key, "empty list");
  return out;
}

std::vector<double> Config::get_doubles(const std::string& section, const std::string& key,
                                        const std::vector<double>& fallback) const {
  return has(section, key) ? get_doubles(section, key) : fallback;
}

}  // namespace sgsim
